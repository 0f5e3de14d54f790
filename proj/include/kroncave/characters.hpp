#pragma once

#include <cstddef>
#include <cstdint>
#include <list>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "kroncave/exact_int.hpp"
#include "kroncave/partition.hpp"

namespace kroncave {

// Conjugacy class of S_n, labelled by its cycle lengths.
class CycleType {
 public:
  explicit CycleType(Partition shape) : shape_(std::move(shape)) {}

  const Partition& shape() const noexcept { return shape_; }
  int n() const noexcept { return shape_.size(); }
  // Number of cycles of length i.
  int multiplicity(int i) const noexcept;
  // z_rho = prod_i i^{m_i} m_i!
  ExactInt centralizer_order() const;
  // n! / z_rho
  ExactInt class_size() const;
  // (-1)^{n - #cycles}
  int sign() const noexcept { return (n() - shape_.length()) % 2 == 0 ? 1 : -1; }

 private:
  Partition shape_;
};

// All cycle types of n in lexicographically decreasing order of the underlying partition.
std::vector<CycleType> cycle_types(int n);

// Number of partitions of m with every part <= s.
std::uint64_t restricted_partition_count(int m, int s);
inline std::uint64_t partition_count(int m) { return restricted_partition_count(m, m); }

struct RimHookRemoval {
  Partition rest;
  int sign;  // (-1)^{height}
};

// Every way to remove a border strip of the given length from mu.
std::vector<RimHookRemoval> remove_rim_hooks(const Partition& mu, int length);

// Plain Murnaghan-Nakayama recursion with no memo; exponential, for small n and testing.
ExactInt character_uncached(const Partition& lambda, const Partition& rho);

// Class bookkeeping for S_n, with classes in cycle_types(n) order.
struct ClassList {
  int n = 0;
  ExactInt group_order;
  std::vector<Partition> types;
  std::vector<ExactInt> sizes;
  std::unordered_map<Partition, std::size_t, PartitionHash> index;
};

// chi^lambda over every class of S_|lambda|, in ClassList order. Values are held
// as int64 when they all fit, otherwise as ExactInt.
class CharacterRow {
 public:
  CharacterRow() = default;
  explicit CharacterRow(std::vector<std::int64_t> values) : compact_(std::move(values)) {}
  explicit CharacterRow(std::vector<ExactInt> values);

  std::size_t size() const noexcept { return wide_ ? wide_values_.size() : compact_.size(); }
  bool compact() const noexcept { return !wide_; }
  ExactInt at(std::size_t i) const {
    return wide_ ? wide_values_[i] : ExactInt(compact_[i]);
  }
  const std::vector<std::int64_t>& compact_values() const noexcept { return compact_; }
  const std::vector<ExactInt>& wide_values() const noexcept { return wide_values_; }

 private:
  std::vector<std::int64_t> compact_;
  std::vector<ExactInt> wide_values_;
  bool wide_ = false;
};

// Memo context for character evaluation. Rows of shapes up to memo_threshold
// boxes are memoized permanently (keyed by shape; a row is exactly the memo on
// (shape, remaining cycle multiset)). Larger shapes are expanded top-down over
// cycle-type prefixes, largest cycle first, down to the memoized sizes; their
// rows go to a size-bounded LRU.
//
// Safe for concurrent use: lookups take shared locks, inserts exclusive ones,
// and computation runs unlocked, so concurrent misses may duplicate work but
// never change a value.
class CharacterTable {
 public:
  struct Config {
    int memo_threshold = 22;
    std::size_t large_row_budget = 24'000'000;  // total entries kept for large shapes
  };

  CharacterTable() : CharacterTable(Config{}) {}
  explicit CharacterTable(Config config);

  std::shared_ptr<const ClassList> classes(int n) const;
  std::shared_ptr<const CharacterRow> row(const Partition& lambda) const;

  // Throws SizeMismatch when |lambda| != |rho|.
  ExactInt character(const Partition& lambda, const Partition& rho) const;
  // chi^lambda(1^n); cross-checked against the hook length formula.
  ExactInt dimension(const Partition& lambda) const;

  std::size_t memo_rows() const;
  const Config& config() const noexcept { return config_; }

 private:
  std::shared_ptr<const CharacterRow> small_row(const Partition& mu) const;
  std::shared_ptr<const CharacterRow> large_row(const Partition& lambda) const;

  Config config_;

  mutable std::shared_mutex small_mutex_;
  mutable std::unordered_map<Partition, std::shared_ptr<const CharacterRow>, PartitionHash> small_;

  struct LargeEntry {
    std::shared_ptr<const CharacterRow> row;
    std::list<Partition>::iterator position;
  };
  mutable std::mutex large_mutex_;
  mutable std::list<Partition> large_order_;  // most recently used first
  mutable std::unordered_map<Partition, LargeEntry, PartitionHash> large_;
  mutable std::size_t large_entries_ = 0;

  mutable std::mutex classes_mutex_;
  mutable std::unordered_map<int, std::shared_ptr<const ClassList>> classes_;
};

}  // namespace kroncave
