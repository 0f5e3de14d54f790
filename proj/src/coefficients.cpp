#include "kroncave/coefficients.hpp"

#include <algorithm>
#include <sstream>

#include "kroncave/errors.hpp"

namespace kroncave {

std::string_view kind_name(CoefficientKind kind) {
  switch (kind) {
    case CoefficientKind::kron:
      return "kron";
    case CoefficientKind::lr:
      return "lr";
    case CoefficientKind::redkron:
      return "redkron";
  }
  return "?";
}

std::optional<CoefficientKind> parse_kind(std::string_view name) {
  if (name == "kron") return CoefficientKind::kron;
  if (name == "lr") return CoefficientKind::lr;
  if (name == "redkron") return CoefficientKind::redkron;
  return std::nullopt;
}

// ---------------------------------------------------------------- virtual reps

ExactInt VirtualRep::operator[](const Partition& nu) const {
  auto it = coeffs_.find(nu);
  return it == coeffs_.end() ? ExactInt(0) : it->second;
}

void VirtualRep::add(const Partition& nu, const ExactInt& c) {
  if (nu.size() != n_) {
    throw SizeMismatch("virtual representation of S_" + std::to_string(n_) +
                       " cannot hold " + to_string(nu));
  }
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(nu, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

VirtualRep& VirtualRep::operator+=(const VirtualRep& other) {
  if (other.n_ != n_ && !other.coeffs_.empty()) throw SizeMismatch("degrees differ");
  for (const auto& [nu, c] : other.coeffs_) add(nu, c);
  return *this;
}

VirtualRep& VirtualRep::operator-=(const VirtualRep& other) {
  if (other.n_ != n_ && !other.coeffs_.empty()) throw SizeMismatch("degrees differ");
  for (const auto& [nu, c] : other.coeffs_) add(nu, -c);
  return *this;
}

VirtualStableRep VirtualStableRep::single(const Partition& lambda, const ExactInt& c) {
  VirtualStableRep v;
  v.add(lambda, c);
  return v;
}

ExactInt VirtualStableRep::operator[](const Partition& nu) const {
  auto it = coeffs_.find(nu);
  return it == coeffs_.end() ? ExactInt(0) : it->second;
}

void VirtualStableRep::add(const Partition& nu, const ExactInt& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(nu, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

VirtualStableRep& VirtualStableRep::operator+=(const VirtualStableRep& other) {
  for (const auto& [nu, c] : other.coeffs_) add(nu, c);
  return *this;
}

VirtualStableRep& VirtualStableRep::operator-=(const VirtualStableRep& other) {
  for (const auto& [nu, c] : other.coeffs_) add(nu, -c);
  return *this;
}

namespace {

std::string format_terms(const std::map<Partition, ExactInt>& coeffs) {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [nu, c] : coeffs) {
    if (!first) os << (c < 0 ? " - " : " + ");
    if (first && c < 0) os << "-";
    const ExactInt magnitude = c < 0 ? ExactInt(-c) : c;
    if (magnitude != 1) os << magnitude << "*";
    os << "[" << to_string(nu) << "]";
    first = false;
  }
  return os.str();
}

}  // namespace

std::string to_string(const VirtualRep& v) { return format_terms(v.coeffs()); }
std::string to_string(const VirtualStableRep& v) { return format_terms(v.coeffs()); }

std::string_view order_name(Order order) {
  switch (order) {
    case Order::equal:
      return "equal";
    case Order::greater_equal:
      return "A>=B";
    case Order::less_equal:
      return "B>=A";
    case Order::incomparable:
      return "incomparable";
  }
  return "?";
}

Comparison stable_ring_compare(const VirtualStableRep& a, const VirtualStableRep& b) {
  Comparison result;
  const VirtualStableRep diff = a - b;
  for (const auto& [nu, c] : diff.coeffs()) {
    (c < 0 ? result.shortfall_a : result.shortfall_b).push_back(nu);
  }
  const bool a_short = !result.shortfall_a.empty();
  const bool b_short = !result.shortfall_b.empty();
  if (!a_short && !b_short) {
    result.order = Order::equal;
  } else if (!a_short) {
    result.order = Order::greater_equal;
  } else if (!b_short) {
    result.order = Order::less_equal;
  } else {
    result.order = Order::incomparable;
  }
  return result;
}

// ------------------------------------------------------------ LR and Kostka

namespace {

class LrCounter {
 public:
  LrCounter(const Partition& lambda, const Partition& mu, const Partition& nu)
      : lambda_(lambda), mu_(mu), nu_(nu), content_(static_cast<std::size_t>(mu.length()) + 1, 0) {
    for (int i = 0; i < nu.length(); ++i) {
      filling_.emplace_back(static_cast<std::size_t>(nu.part(static_cast<std::size_t>(i))), 0);
      // Reading order: rows top to bottom, each row right to left.
      for (int c = nu.part(static_cast<std::size_t>(i)) - 1; c >= lambda.part(static_cast<std::size_t>(i)); --c) {
        cells_.push_back({i, c});
      }
    }
  }

  std::uint64_t count() {
    place(0);
    return total_;
  }

 private:
  struct Cell {
    int row;
    int col;
  };

  int at(int row, int col) const {
    return filling_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
  }

  void place(std::size_t k) {
    if (k == cells_.size()) {
      ++total_;
      return;
    }
    const auto [row, col] = cells_[k];
    // Rows weakly increase to the right; entries in row r never exceed r + 1.
    int hi = std::min(mu_.length(), row + 1);
    if (col + 1 < nu_.part(static_cast<std::size_t>(row))) hi = std::min(hi, at(row, col + 1));
    // Columns strictly increase downward.
    int lo = 1;
    if (row > 0 && col >= lambda_.part(static_cast<std::size_t>(row - 1))) lo = at(row - 1, col) + 1;
    for (int v = lo; v <= hi; ++v) {
      auto& used = content_[static_cast<std::size_t>(v)];
      if (used >= mu_.part(static_cast<std::size_t>(v - 1))) continue;
      // Lattice condition on the reading word read so far.
      if (v > 1 && used >= content_[static_cast<std::size_t>(v - 1)]) continue;
      ++used;
      filling_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = v;
      place(k + 1);
      --used;
    }
    filling_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = 0;
  }

  const Partition& lambda_;
  const Partition& mu_;
  const Partition& nu_;
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> filling_;
  std::vector<int> content_;
  std::uint64_t total_ = 0;
};

}  // namespace

ExactInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.size() != lambda.size() + mu.size() || !contains(nu, lambda) || !contains(nu, mu)) return 0;
  return LrCounter(lambda, mu, nu).count();
}

ExactInt kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw SizeMismatch("kostka: |" + to_string(lambda) + "| != |" + to_string(mu) + "|");
  }
  const auto& m = mu.parts();
  std::vector<int> outer(m.size()), inner;
  int tail = 0;
  for (std::size_t i = m.size(); i-- > 0;) {
    tail += m[i];
    outer[i] = tail;
  }
  inner.assign(outer.begin() + (outer.empty() ? 0 : 1), outer.end());
  return lr_coefficient(Partition(std::move(inner)), lambda, Partition(std::move(outer)));
}

// --------------------------------------------------------------- stabilization

bool StabilizationTrace::weakly_increasing() const {
  return std::is_sorted(values.begin(), values.end());
}

int stabilization_start(const Partition& lambda, const Partition& mu, const Partition& nu) {
  return std::max({min_pad(lambda), min_pad(mu), min_pad(nu), lambda.size() + mu.size() + nu.size()});
}

// ---------------------------------------------------------------------- engine

Engine::Engine(StabilizationConfig stabilization, CharacterTable::Config characters)
    : Engine(stabilization, std::make_shared<CharacterTable>(characters)) {}

Engine::Engine(StabilizationConfig stabilization, std::shared_ptr<CharacterTable> characters)
    : stabilization_(stabilization), characters_(std::move(characters)) {
  if (stabilization_.window < 1) throw std::invalid_argument("stabilization window must be >= 1");
}

std::string Engine::version() const {
  return "kroncave-1.0.0;window=" + std::to_string(stabilization_.window);
}

void Engine::attach_cache(CoefficientCache* cache, bool cache_all) {
  cache_ = cache;
  cache_all_ = cache_all;
}

void Engine::set_trace_observer(TraceObserver observer) { observer_ = std::move(observer); }

std::size_t Engine::TripleHash::operator()(const std::array<Partition, 3>& t) const noexcept {
  PartitionHash h;
  return h(t[0]) * 0x9e3779b97f4a7c15ull ^ h(t[1]) * 0xc2b2ae3d27d4eb4full ^ h(t[2]);
}

std::optional<ExactInt> Engine::memo_get(const Memo& memo, const std::array<Partition, 3>& key) const {
  std::lock_guard lock(memo_mutex_);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  return std::nullopt;
}

void Engine::memo_put(Memo& memo, const std::array<Partition, 3>& key, const ExactInt& v) const {
  std::lock_guard lock(memo_mutex_);
  memo.emplace(key, v);
}

namespace {

std::array<Partition, 3> sorted_triple(const Partition& a, const Partition& b, const Partition& c) {
  std::array<Partition, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

void require_same_size(const Partition& a, const Partition& b, const char* what) {
  if (a.size() != b.size()) {
    throw SizeMismatch(std::string(what) + ": |" + to_string(a) + "| != |" + to_string(b) + "|");
  }
}

}  // namespace

ExactInt Engine::finish_sum(const ExactInt& sum, const ClassList& classes, const char* what) const {
  ExactInt quotient, remainder;
  boost::multiprecision::divide_qr(sum, classes.group_order, quotient, remainder);
  if (remainder != 0) throw InternalNonIntegral(std::string(what) + ": character sum not divisible by n!");
  if (quotient < 0) throw InternalNegative(std::string(what) + ": negative multiplicity");
  return quotient;
}

ExactInt Engine::kronecker_uncached(const Partition& lambda, const Partition& mu,
                                    const Partition& nu) const {
  const auto classes = characters_->classes(lambda.size());
  const auto a = characters_->row(lambda);
  const auto b = characters_->row(mu);
  const auto c = characters_->row(nu);
  ExactInt sum = 0;
  const std::size_t count = classes->types.size();
  if (a->compact() && b->compact() && c->compact()) {
    const auto& av = a->compact_values();
    const auto& bv = b->compact_values();
    const auto& cv = c->compact_values();
    for (std::size_t i = 0; i < count; ++i) {
      const __int128 ab = static_cast<__int128>(av[i]) * bv[i];
      __int128 abc = 0;
      if (__builtin_mul_overflow(ab, static_cast<__int128>(cv[i]), &abc)) {
        sum += classes->sizes[i] * (ExactInt(av[i]) * bv[i] * cv[i]);
      } else if (abc != 0) {
        sum += classes->sizes[i] * ExactInt(abc);
      }
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) sum += classes->sizes[i] * a->at(i) * b->at(i) * c->at(i);
  }
  return finish_sum(sum, *classes, "kronecker");
}

ExactInt Engine::kronecker(const Partition& lambda, const Partition& mu, const Partition& nu) const {
  require_same_size(lambda, mu, "kronecker");
  require_same_size(lambda, nu, "kronecker");
  const auto key = sorted_triple(lambda, mu, nu);
  if (auto hit = memo_get(kron_memo_, key)) return *hit;
  if (cache_ && cache_all_) {
    if (auto hit = cache_->lookup(CoefficientKind::kron, lambda, mu, nu)) {
      memo_put(kron_memo_, key, *hit);
      return *hit;
    }
  }
  ExactInt value = kronecker_uncached(lambda, mu, nu);
  memo_put(kron_memo_, key, value);
  if (cache_ && cache_all_) cache_->store(CoefficientKind::kron, lambda, mu, nu, value);
  return value;
}

Engine::Weights Engine::pair_weights(const Partition& lambda, const Partition& mu) const {
  const auto classes = characters_->classes(lambda.size());
  const auto a = characters_->row(lambda);
  const auto b = characters_->row(mu);
  Weights w(classes->types.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (a->compact() && b->compact()) {
      const __int128 ab = static_cast<__int128>(a->compact_values()[i]) * b->compact_values()[i];
      if (ab != 0) w[i] = classes->sizes[i] * ExactInt(ab);
    } else {
      w[i] = classes->sizes[i] * a->at(i) * b->at(i);
    }
  }
  return w;
}

namespace {

ExactInt weighted_sum(const std::vector<ExactInt>& weights, const CharacterRow& row) {
  ExactInt sum = 0;
  if (row.compact()) {
    const auto& v = row.compact_values();
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (v[i] != 0 && weights[i] != 0) sum += weights[i] * v[i];
    }
  } else {
    for (std::size_t i = 0; i < weights.size(); ++i) sum += weights[i] * row.at(i);
  }
  return sum;
}

}  // namespace

VirtualRep Engine::tensor_decompose(const Partition& lambda, const Partition& mu) const {
  require_same_size(lambda, mu, "tensor_decompose");
  const int n = lambda.size();
  const auto classes = characters_->classes(n);
  const Weights w = pair_weights(lambda, mu);
  VirtualRep out(n);
  for (const auto& nu : classes->types) {
    const ExactInt g = finish_sum(weighted_sum(w, *characters_->row(nu)), *classes, "tensor_decompose");
    memo_put(kron_memo_, sorted_triple(lambda, mu, nu), g);
    out.add(nu, g);
  }
  return out;
}

ExactInt Engine::lr(const Partition& lambda, const Partition& mu, const Partition& nu) const {
  // Symmetric in lambda and mu only.
  std::array<Partition, 3> key{std::min(lambda, mu), std::max(lambda, mu), nu};
  if (auto hit = memo_get(lr_memo_, key)) return *hit;
  if (cache_ && cache_all_) {
    if (auto hit = cache_->lookup(CoefficientKind::lr, lambda, mu, nu)) {
      memo_put(lr_memo_, key, *hit);
      return *hit;
    }
  }
  ExactInt value = lr_coefficient(lambda, mu, nu);
  memo_put(lr_memo_, key, value);
  if (cache_ && cache_all_) cache_->store(CoefficientKind::lr, lambda, mu, nu, value);
  return value;
}

std::vector<ExactInt> Engine::kronecker_sequence(const Partition& lambda, const Partition& mu,
                                                 const Partition& nu, int first_d, int last_d) const {
  std::vector<ExactInt> out;
  for (int d = first_d; d <= last_d; ++d) {
    out.push_back(kronecker(pad(lambda, d), pad(mu, d), pad(nu, d)));
  }
  return out;
}

StabilizationTrace Engine::trace(const Partition& lambda, const Partition& mu, const Partition& nu,
                                 WeightCache* weights) const {
  const int total = lambda.size() + mu.size() + nu.size();
  const int first = stabilization_start(lambda, mu, nu);
  const int last = first + stabilization_.cap_offset.value_or(2 * total + 2);
  StabilizationTrace t;
  t.first_d = first;
  const auto window = static_cast<std::size_t>(stabilization_.window);
  for (int d = first; d <= last; ++d) {
    const Partition nu_d = pad(nu, d);
    ExactInt value;
    if (weights) {
      auto it = weights->find(d);
      if (it == weights->end()) it = weights->emplace(d, pair_weights(pad(lambda, d), pad(mu, d))).first;
      value = finish_sum(weighted_sum(it->second, *characters_->row(nu_d)),
                         *characters_->classes(d), "reduced_kronecker");
    } else {
      value = kronecker_uncached(pad(lambda, d), pad(mu, d), nu_d);
    }
    t.values.push_back(std::move(value));
    if (t.values.size() >= window &&
        std::all_of(t.values.end() - static_cast<std::ptrdiff_t>(window), t.values.end(),
                    [&](const ExactInt& v) { return v == t.values.back(); })) {
      t.stable_value = t.values.back();
      if (observer_) observer_({lambda, mu, nu}, t);
      return t;
    }
  }
  throw StabilizationNotDetected("no plateau of " + std::to_string(window) + " equal values for (" +
                                 to_string(lambda) + "; " + to_string(mu) + "; " + to_string(nu) +
                                 ") within d <= " + std::to_string(last));
}

StabilizationTrace Engine::reduced_kronecker_trace(const Partition& lambda, const Partition& mu,
                                                   const Partition& nu) const {
  return trace(lambda, mu, nu, nullptr);
}

ExactInt Engine::reduced_impl(const Partition& lambda, const Partition& mu, const Partition& nu,
                              WeightCache* weights) const {
  if (!murnaghan_inequalities(lambda, mu, nu)) return 0;
  const auto key = sorted_triple(lambda, mu, nu);
  if (auto hit = memo_get(reduced_memo_, key)) return *hit;
  if (cache_) {
    if (auto hit = cache_->lookup(CoefficientKind::redkron, lambda, mu, nu)) {
      memo_put(reduced_memo_, key, *hit);
      return *hit;
    }
  }
  ExactInt value = trace(lambda, mu, nu, weights).stable_value;
  memo_put(reduced_memo_, key, value);
  if (cache_) cache_->store(CoefficientKind::redkron, lambda, mu, nu, value);
  return value;
}

ExactInt Engine::reduced_kronecker(const Partition& lambda, const Partition& mu,
                                   const Partition& nu) const {
  return reduced_impl(lambda, mu, nu, nullptr);
}

VirtualStableRep Engine::reduced_tensor_decompose(const Partition& lambda, const Partition& mu) const {
  VirtualStableRep out;
  WeightCache weights;
  const int lo = std::abs(lambda.size() - mu.size());
  for (int s = lo; s <= lambda.size() + mu.size(); ++s) {
    for (const auto& nu : partitions_of(s)) out.add(nu, reduced_impl(lambda, mu, nu, &weights));
  }
  return out;
}

VirtualStableRep Engine::multiply(const VirtualStableRep& a, const VirtualStableRep& b) const {
  VirtualStableRep out;
  for (const auto& [lambda, x] : a.coeffs()) {
    for (const auto& [mu, y] : b.coeffs()) {
      const ExactInt xy = x * y;
      const VirtualStableRep term = reduced_tensor_decompose(lambda, mu);
      for (const auto& [nu, g] : term.coeffs()) out.add(nu, xy * g);
    }
  }
  return out;
}

}  // namespace kroncave
