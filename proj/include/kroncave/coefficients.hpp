#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kroncave/characters.hpp"
#include "kroncave/exact_int.hpp"
#include "kroncave/partition.hpp"

namespace kroncave {

enum class CoefficientKind { kron, lr, redkron };

std::string_view kind_name(CoefficientKind kind);
std::optional<CoefficientKind> parse_kind(std::string_view name);

// Persistent backing for coefficient queries. Implementations canonicalize the
// argument order themselves.
class CoefficientCache {
 public:
  virtual ~CoefficientCache() = default;
  virtual std::optional<ExactInt> lookup(CoefficientKind kind, const Partition& lambda,
                                         const Partition& mu, const Partition& nu) = 0;
  virtual void store(CoefficientKind kind, const Partition& lambda, const Partition& mu,
                     const Partition& nu, const ExactInt& value) = 0;
};

// Virtual character of S_n: an integer combination of irreducibles, zeros not stored.
class VirtualRep {
 public:
  explicit VirtualRep(int n = 0) : n_(n) {}

  int degree() const noexcept { return n_; }
  const std::map<Partition, ExactInt>& coeffs() const noexcept { return coeffs_; }
  ExactInt operator[](const Partition& nu) const;
  // Throws SizeMismatch when |nu| != degree().
  void add(const Partition& nu, const ExactInt& c);

  VirtualRep& operator+=(const VirtualRep& other);
  VirtualRep& operator-=(const VirtualRep& other);
  friend VirtualRep operator+(VirtualRep a, const VirtualRep& b) { return a += b; }
  friend VirtualRep operator-(VirtualRep a, const VirtualRep& b) { return a -= b; }
  friend bool operator==(const VirtualRep&, const VirtualRep&) = default;

 private:
  int n_;
  std::map<Partition, ExactInt> coeffs_;
};

// Element of the Grothendieck ring of Rep(S_infinity): integer combination of
// stable classes [lambda[infinity]] of mixed sizes.
class VirtualStableRep {
 public:
  VirtualStableRep() = default;
  static VirtualStableRep single(const Partition& lambda, const ExactInt& c = 1);
  // The unit [empty].
  static VirtualStableRep one() { return single(Partition{}); }

  const std::map<Partition, ExactInt>& coeffs() const noexcept { return coeffs_; }
  ExactInt operator[](const Partition& nu) const;
  void add(const Partition& nu, const ExactInt& c);
  bool empty() const noexcept { return coeffs_.empty(); }

  VirtualStableRep& operator+=(const VirtualStableRep& other);
  VirtualStableRep& operator-=(const VirtualStableRep& other);
  friend VirtualStableRep operator+(VirtualStableRep a, const VirtualStableRep& b) { return a += b; }
  friend VirtualStableRep operator-(VirtualStableRep a, const VirtualStableRep& b) { return a -= b; }
  friend bool operator==(const VirtualStableRep&, const VirtualStableRep&) = default;

 private:
  std::map<Partition, ExactInt> coeffs_;
};

std::string to_string(const VirtualRep& v);
std::string to_string(const VirtualStableRep& v);

enum class Order { equal, greater_equal, less_equal, incomparable };
std::string_view order_name(Order order);

struct Comparison {
  Order order = Order::equal;
  // Classes where A - B is negative (A falls short of B), in canonical order.
  std::vector<Partition> shortfall_a;
  // Classes where A - B is positive (B falls short of A).
  std::vector<Partition> shortfall_b;
};

// Classifies A - B by the signs of its coefficients.
Comparison stable_ring_compare(const VirtualStableRep& a, const VirtualStableRep& b);

// Counts Littlewood-Richardson tableaux of shape nu/lambda and content mu.
ExactInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// K_{lambda mu} as c_{kappa lambda}^{nu} with nu_i = sum_{j>=i} mu_j, kappa_i = sum_{j>i} mu_j.
ExactInt kostka(const Partition& lambda, const Partition& mu);

struct StabilizationConfig {
  // Consecutive equal values required to accept a plateau.
  int window = 2;
  // Largest d tried is d0 + cap_offset; default 2 (|lambda|+|mu|+|nu|) + 2.
  std::optional<int> cap_offset;
};

struct StabilizationTrace {
  int first_d = 0;
  std::vector<ExactInt> values;  // g at first_d, first_d + 1, ...
  ExactInt stable_value;
  bool weakly_increasing() const;
};

// First d of the plateau search: max(|x| + x_1 over the three, |lambda|+|mu|+|nu|).
int stabilization_start(const Partition& lambda, const Partition& mu, const Partition& nu);

// Coefficient queries over a shared character memo. All queries are pure;
// the in-memory caches are synchronized, so one Engine can serve several
// worker threads.
class Engine {
 public:
  using TraceObserver = std::function<void(const std::array<Partition, 3>&, const StabilizationTrace&)>;

  explicit Engine(StabilizationConfig stabilization = {}, CharacterTable::Config characters = {});
  Engine(StabilizationConfig stabilization, std::shared_ptr<CharacterTable> characters);

  const CharacterTable& characters() const noexcept { return *characters_; }
  const StabilizationConfig& stabilization() const noexcept { return stabilization_; }
  std::string version() const;

  // Reduced-Kronecker values are always read from and written to the cache;
  // kron and lr only when cache_all is set.
  void attach_cache(CoefficientCache* cache, bool cache_all = false);
  // Called with every stabilization trace the engine computes.
  void set_trace_observer(TraceObserver observer);

  ExactInt kronecker(const Partition& lambda, const Partition& mu, const Partition& nu) const;
  VirtualRep tensor_decompose(const Partition& lambda, const Partition& mu) const;
  ExactInt lr(const Partition& lambda, const Partition& mu, const Partition& nu) const;

  // g_{lambda[d], mu[d]}^{nu[d]} for d = first_d .. last_d.
  std::vector<ExactInt> kronecker_sequence(const Partition& lambda, const Partition& mu,
                                           const Partition& nu, int first_d, int last_d) const;

  ExactInt reduced_kronecker(const Partition& lambda, const Partition& mu, const Partition& nu) const;
  // Runs the plateau search from scratch, bypassing every cache.
  StabilizationTrace reduced_kronecker_trace(const Partition& lambda, const Partition& mu,
                                             const Partition& nu) const;
  VirtualStableRep reduced_tensor_decompose(const Partition& lambda, const Partition& mu) const;
  VirtualStableRep multiply(const VirtualStableRep& a, const VirtualStableRep& b) const;

 private:
  using Weights = std::vector<ExactInt>;
  using WeightCache = std::map<int, Weights>;

  Weights pair_weights(const Partition& lambda, const Partition& mu) const;
  ExactInt finish_sum(const ExactInt& sum, const ClassList& classes, const char* what) const;
  ExactInt kronecker_uncached(const Partition& lambda, const Partition& mu, const Partition& nu) const;
  StabilizationTrace trace(const Partition& lambda, const Partition& mu, const Partition& nu,
                           WeightCache* weights) const;
  ExactInt reduced_impl(const Partition& lambda, const Partition& mu, const Partition& nu,
                        WeightCache* weights) const;

  struct TripleHash {
    std::size_t operator()(const std::array<Partition, 3>& t) const noexcept;
  };
  using Memo = std::unordered_map<std::array<Partition, 3>, ExactInt, TripleHash>;
  std::optional<ExactInt> memo_get(const Memo& memo, const std::array<Partition, 3>& key) const;
  void memo_put(Memo& memo, const std::array<Partition, 3>& key, const ExactInt& v) const;

  StabilizationConfig stabilization_;
  std::shared_ptr<CharacterTable> characters_;
  CoefficientCache* cache_ = nullptr;
  bool cache_all_ = false;
  TraceObserver observer_;

  mutable std::mutex memo_mutex_;
  mutable Memo kron_memo_;
  mutable Memo lr_memo_;
  mutable Memo reduced_memo_;
};

}  // namespace kroncave
