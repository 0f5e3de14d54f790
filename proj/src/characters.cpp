#include "kroncave/characters.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "kroncave/errors.hpp"

namespace kroncave {

int CycleType::multiplicity(int i) const noexcept {
  return static_cast<int>(std::count(shape_.begin(), shape_.end(), i));
}

ExactInt CycleType::centralizer_order() const {
  ExactInt z = 1;
  const auto& parts = shape_.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const int m = static_cast<int>(j - i);
    for (int k = 0; k < m; ++k) z *= parts[i];
    z *= factorial(m);
    i = j;
  }
  return z;
}

ExactInt CycleType::class_size() const { return factorial(n()) / centralizer_order(); }

std::vector<CycleType> cycle_types(int n) {
  std::vector<CycleType> out;
  for (auto& p : partitions_of(n)) out.emplace_back(std::move(p));
  return out;
}

namespace {

constexpr int kCountTableSize = 256;

struct CountTable {
  // counts[m][s] = partitions of m with parts <= s, for 0 <= m, s < kCountTableSize.
  std::vector<std::vector<std::uint64_t>> counts;

  CountTable() : counts(kCountTableSize, std::vector<std::uint64_t>(kCountTableSize, 0)) {
    for (int s = 0; s < kCountTableSize; ++s) counts[0][static_cast<std::size_t>(s)] = 1;
    for (int m = 1; m < kCountTableSize; ++m) {
      for (int s = 1; s < kCountTableSize; ++s) {
        auto& c = counts[static_cast<std::size_t>(m)];
        c[static_cast<std::size_t>(s)] = c[static_cast<std::size_t>(s - 1)];
        if (s <= m) {
          c[static_cast<std::size_t>(s)] +=
              counts[static_cast<std::size_t>(m - s)][static_cast<std::size_t>(s)];
        }
      }
    }
  }
};

const CountTable& count_table() {
  static const CountTable table;
  return table;
}

bool fits_int64(const ExactInt& v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

// Accumulates a character row in int64 and switches to ExactInt on the first overflow.
class RowBuilder {
 public:
  explicit RowBuilder(std::size_t n) : compact_(n, 0) {}

  void set(std::size_t i, std::int64_t v) {
    if (wide_) {
      wide_values_[i] = v;
    } else {
      compact_[i] = v;
    }
  }

  // out[offset + i] += coef * src[start + i] for i < len.
  void add_suffix(std::size_t offset, const ExactInt& coef, const CharacterRow& src,
                  std::size_t start, std::size_t len) {
    std::size_t i = 0;
    if (!wide_ && src.compact() && fits_int64(coef)) {
      const auto c = coef.convert_to<std::int64_t>();
      const auto& values = src.compact_values();
      for (; i < len; ++i) {
        std::int64_t term = 0;
        std::int64_t& slot = compact_[offset + i];
        std::int64_t next = 0;
        if (__builtin_mul_overflow(c, values[start + i], &term) ||
            __builtin_add_overflow(slot, term, &next)) {
          break;
        }
        slot = next;
      }
      if (i == len) return;
    }
    widen();
    for (; i < len; ++i) wide_values_[offset + i] += coef * src.at(start + i);
  }

  CharacterRow finish() {
    if (!wide_) return CharacterRow(std::move(compact_));
    return CharacterRow(std::move(wide_values_));
  }

 private:
  void widen() {
    if (wide_) return;
    wide_values_.assign(compact_.begin(), compact_.end());
    compact_.clear();
    compact_.shrink_to_fit();
    wide_ = true;
  }

  std::vector<std::int64_t> compact_;
  std::vector<ExactInt> wide_values_;
  bool wide_ = false;
};

ExactInt uncached(const Partition& lambda, std::span<const int> cycles) {
  if (cycles.empty()) return lambda.empty() ? 1 : 0;
  ExactInt sum = 0;
  for (const auto& hook : remove_rim_hooks(lambda, cycles.front())) {
    sum += hook.sign * uncached(hook.rest, cycles.subspan(1));
  }
  return sum;
}

}  // namespace

std::uint64_t restricted_partition_count(int m, int s) {
  if (m < 0 || s < 0) return 0;
  if (m >= kCountTableSize) throw std::out_of_range("partition count table exceeded");
  s = std::min(s, kCountTableSize - 1);
  return count_table().counts[static_cast<std::size_t>(m)][static_cast<std::size_t>(s)];
}

std::vector<RimHookRemoval> remove_rim_hooks(const Partition& mu, int length) {
  std::vector<RimHookRemoval> out;
  if (length <= 0 || length > mu.size()) return out;
  const int len = mu.length();
  // First-column hook lengths (beta numbers), strictly decreasing.
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = mu.parts()[static_cast<std::size_t>(i)] + len - 1 - i;
  std::vector<char> occupied(static_cast<std::size_t>(beta.front() + 1), 0);
  for (int b : beta) occupied[static_cast<std::size_t>(b)] = 1;

  for (int i = 0; i < len; ++i) {
    const int target = beta[static_cast<std::size_t>(i)] - length;
    if (target < 0 || occupied[static_cast<std::size_t>(target)]) continue;
    int crossed = 0;
    int j = i + 1;
    while (j < len && beta[static_cast<std::size_t>(j)] > target) {
      ++crossed;
      ++j;
    }
    // Moving bead i to target keeps the order apart from a shift of the crossed beads.
    std::vector<int> next(beta);
    for (int k = i; k < i + crossed; ++k) next[static_cast<std::size_t>(k)] = beta[static_cast<std::size_t>(k + 1)];
    next[static_cast<std::size_t>(i + crossed)] = target;
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(len));
    for (int k = 0; k < len; ++k) {
      const int p = next[static_cast<std::size_t>(k)] - (len - 1 - k);
      if (p > 0) parts.push_back(p);
    }
    out.push_back({Partition(std::move(parts)), crossed % 2 == 0 ? 1 : -1});
  }
  return out;
}

ExactInt character_uncached(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) {
    throw SizeMismatch("character: |lambda| = " + std::to_string(lambda.size()) +
                       " but |rho| = " + std::to_string(rho.size()));
  }
  return uncached(lambda, rho.parts());
}

CharacterRow::CharacterRow(std::vector<ExactInt> values) {
  if (std::all_of(values.begin(), values.end(), fits_int64)) {
    compact_.reserve(values.size());
    for (const auto& v : values) compact_.push_back(v.convert_to<std::int64_t>());
  } else {
    wide_values_ = std::move(values);
    wide_ = true;
  }
}

CharacterTable::CharacterTable(Config config) : config_(config) {
  config_.memo_threshold = std::max(config_.memo_threshold, 1);
}

std::shared_ptr<const ClassList> CharacterTable::classes(int n) const {
  {
    std::lock_guard lock(classes_mutex_);
    if (auto it = classes_.find(n); it != classes_.end()) return it->second;
  }
  auto list = std::make_shared<ClassList>();
  list->n = n;
  list->group_order = factorial(n);
  for (auto& type : cycle_types(n)) {
    list->index.emplace(type.shape(), list->types.size());
    list->sizes.push_back(list->group_order / type.centralizer_order());
    list->types.push_back(type.shape());
  }
  std::lock_guard lock(classes_mutex_);
  return classes_.emplace(n, std::move(list)).first->second;
}

std::shared_ptr<const CharacterRow> CharacterTable::row(const Partition& lambda) const {
  return lambda.size() <= config_.memo_threshold ? small_row(lambda) : large_row(lambda);
}

std::shared_ptr<const CharacterRow> CharacterTable::small_row(const Partition& mu) const {
  {
    std::shared_lock lock(small_mutex_);
    if (auto it = small_.find(mu); it != small_.end()) return it->second;
  }
  const int m = mu.size();
  RowBuilder builder(partition_count(m));
  if (m == 0) {
    builder.set(0, 1);
  } else {
    // Classes whose largest cycle is s form one contiguous block, ordered like
    // the partitions of m - s with parts <= s, which is a suffix of the
    // smaller shape's row.
    std::size_t offset = 0;
    for (int s = m; s >= 1; --s) {
      const std::size_t len = restricted_partition_count(m - s, s);
      for (const auto& hook : remove_rim_hooks(mu, s)) {
        const auto child = small_row(hook.rest);
        builder.add_suffix(offset, hook.sign, *child, child->size() - len, len);
      }
      offset += len;
    }
  }
  auto computed = std::make_shared<const CharacterRow>(builder.finish());
  std::unique_lock lock(small_mutex_);
  return small_.emplace(mu, std::move(computed)).first->second;
}

std::shared_ptr<const CharacterRow> CharacterTable::large_row(const Partition& lambda) const {
  {
    std::lock_guard lock(large_mutex_);
    if (auto it = large_.find(lambda); it != large_.end()) {
      large_order_.splice(large_order_.begin(), large_order_, it->second.position);
      return it->second.row;
    }
  }

  using State = std::vector<std::pair<Partition, ExactInt>>;
  const int threshold = config_.memo_threshold;
  RowBuilder builder(partition_count(lambda.size()));

  // Expands the block of classes sharing a prefix of removed cycles; `state`
  // holds the signed shapes left after removing that prefix.
  auto expand = [&](auto&& self, int remaining, int max_cycle, const State& state,
                    std::size_t offset) -> void {
    if (state.empty()) return;
    if (remaining <= threshold) {
      const std::size_t len = restricted_partition_count(remaining, max_cycle);
      for (const auto& [shape, coef] : state) {
        const auto child = small_row(shape);
        builder.add_suffix(offset, coef, *child, child->size() - len, len);
      }
      return;
    }
    for (int r = std::min(remaining, max_cycle); r >= 1; --r) {
      std::unordered_map<Partition, ExactInt, PartitionHash> next;
      for (const auto& [shape, coef] : state) {
        for (auto& hook : remove_rim_hooks(shape, r)) {
          auto& slot = next[std::move(hook.rest)];
          if (hook.sign > 0) {
            slot += coef;
          } else {
            slot -= coef;
          }
        }
      }
      State reduced;
      reduced.reserve(next.size());
      for (auto& [shape, coef] : next) {
        if (coef != 0) reduced.emplace_back(shape, std::move(coef));
      }
      self(self, remaining - r, r, reduced, offset);
      offset += restricted_partition_count(remaining - r, r);
    }
  };
  expand(expand, lambda.size(), lambda.size(), State{{lambda, ExactInt(1)}}, 0);

  auto computed = std::make_shared<const CharacterRow>(builder.finish());
  std::lock_guard lock(large_mutex_);
  if (auto it = large_.find(lambda); it != large_.end()) return it->second.row;
  if (computed->size() <= config_.large_row_budget) {
    while (large_entries_ + computed->size() > config_.large_row_budget && !large_order_.empty()) {
      auto victim = large_.find(large_order_.back());
      large_entries_ -= victim->second.row->size();
      large_.erase(victim);
      large_order_.pop_back();
    }
    large_order_.push_front(lambda);
    large_.emplace(lambda, LargeEntry{computed, large_order_.begin()});
    large_entries_ += computed->size();
  }
  return computed;
}

ExactInt CharacterTable::character(const Partition& lambda, const Partition& rho) const {
  if (lambda.size() != rho.size()) {
    throw SizeMismatch("character: |lambda| = " + std::to_string(lambda.size()) +
                       " but |rho| = " + std::to_string(rho.size()));
  }
  const auto list = classes(rho.size());
  return row(lambda)->at(list->index.at(rho));
}

ExactInt CharacterTable::dimension(const Partition& lambda) const {
  const auto r = row(lambda);
  ExactInt value = r->at(r->size() - 1);  // (1^n) is the last class
  if (value != syt_count(lambda)) {
    throw InternalError("chi^" + to_string(lambda) + "(1^n) disagrees with the hook length formula");
  }
  return value;
}

std::size_t CharacterTable::memo_rows() const {
  std::size_t total = 0;
  {
    std::shared_lock lock(small_mutex_);
    total += small_.size();
  }
  std::lock_guard lock(large_mutex_);
  return total + large_.size();
}

}  // namespace kroncave
