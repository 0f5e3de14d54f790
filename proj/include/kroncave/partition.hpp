#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kroncave/exact_int.hpp"

namespace kroncave {

// A weakly decreasing list of positive integers. Zeros are never stored, so two
// partitions compare equal exactly when their part lists are identical.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  // Throws InvalidPartition unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  // Sorts into decreasing order and drops zeros. Negative entries are rejected.
  static Partition from_multiset(std::vector<int> parts);
  static Partition row(int n);
  static Partition column(int n);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  // 0-based; 0 past the end.
  int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  friend bool operator==(const Partition& a, const Partition& b) noexcept {
    return a.parts_ == b.parts_;
  }
  // Canonical order: by size, then lexicographically larger part lists first,
  // so (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1).
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

// "3,3,1,1"; the empty partition is "-".
std::string to_string(const Partition& p);
std::ostream& operator<<(std::ostream& os, const Partition& p);

// (d - |lambda|, lambda_1, lambda_2, ...). Throws PadTooSmall when d < |lambda| + lambda_1.
Partition pad(const Partition& lambda, int d);
// Smallest d accepted by pad().
inline int min_pad(const Partition& lambda) { return lambda.size() + lambda.part(0); }

Partition conjugate(const Partition& lambda);

enum class MidpointMode { exact, ceil, floor };

// Componentwise (lambda + mu) / 2 with the shorter partition extended by zeros.
// In exact mode throws NotIntegral when some lambda_i + mu_i is odd.
Partition midpoint(const Partition& lambda, const Partition& mu,
                   MidpointMode mode = MidpointMode::exact);

// lambda U mu: all parts of both, rearranged decreasingly.
Partition union_of(const Partition& lambda, const Partition& mu);
Partition union_of(std::span<const Partition> parts);

// (sort_1, sort_2): odd- and even-indexed parts of lambda U mu.
std::pair<Partition, Partition> sort_split(const Partition& lambda, const Partition& mu);

// (lambda^[1,n], ..., lambda^[n,n]) with lambda^[i,n] = (lambda_i, lambda_{i+n}, ...).
std::vector<Partition> interleave_split(const Partition& lambda, int n);

// k * lambda, componentwise.
Partition scaled(const Partition& lambda, int k);

// Diagram containment: inner_i <= outer_i for every i.
bool contains(const Partition& outer, const Partition& inner);

// Number of standard Young tableaux, by the hook length formula.
ExactInt syt_count(const Partition& lambda);

// (n4, n3, 2^d2, 1^d1): the two largest parts are arbitrary, everything below is at most 2.
struct DoubleHookShape {
  int d1 = 0;
  int d2 = 0;
  int n3 = 0;
  int n4 = 0;

  int x() const noexcept { return 2 * d2 + d1; }
  Partition reassemble() const;
  friend bool operator==(const DoubleHookShape&, const DoubleHookShape&) = default;
};

// nullopt when three or more parts are >= 3.
std::optional<DoubleHookShape> double_hook_decompose(const Partition& nu);

// |nu| <= |lambda|+|mu|, |mu| <= |lambda|+|nu|, |lambda| <= |mu|+|nu|.
bool murnaghan_inequalities(const Partition& lambda, const Partition& mu, const Partition& nu);

// Partitions of n in lexicographically decreasing order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);
// Every partition of size 0..n, in canonical order.
std::vector<Partition> partitions_up_to(int n);

}  // namespace kroncave

template <>
struct std::hash<kroncave::Partition> {
  std::size_t operator()(const kroncave::Partition& p) const noexcept {
    return kroncave::PartitionHash{}(p);
  }
};
