#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>

#include "kroncave/coefficients.hpp"
#include "kroncave/exact_int.hpp"
#include "kroncave/partition.hpp"

namespace kroncave {

// "3,3,1,1" or "-" for the empty partition. Surrounding blanks are allowed;
// anything else raises ParseError pointing at the offending character.
Partition parse_partition_text(std::string_view text);

struct CacheRecord {
  CoefficientKind kind = CoefficientKind::kron;
  Partition lambda;
  Partition mu;
  Partition nu;
  ExactInt value;
  std::string engine_version;

  friend bool operator==(const CacheRecord&, const CacheRecord&) = default;
};

// Puts the arguments in the order used as the store key: kron and redkron are
// symmetric in all three, lr only in lambda and mu.
CacheRecord canonical(CacheRecord record);

// One JSON object, no trailing newline.
std::string serialize(const CacheRecord& record);
// nullopt for anything that is not a complete, valid record.
std::optional<CacheRecord> parse_record(std::string_view line);

// Line-delimited cache file. The file is read once on open; appends go through
// an exclusive flock so several processes can share one file.
class JsonlStore : public CoefficientCache {
 public:
  // warnings, when set, receives one line per skipped record.
  JsonlStore(std::string path, std::string engine_version, std::ostream* warnings = nullptr);

  std::optional<ExactInt> lookup(CoefficientKind kind, const Partition& lambda, const Partition& mu,
                                 const Partition& nu) override;
  void store(CoefficientKind kind, const Partition& lambda, const Partition& mu, const Partition& nu,
             const ExactInt& value) override;

  // Records written under engine_version() only; the record is canonicalized first.
  std::optional<CacheRecord> get(const CacheRecord& key) const;
  void put(const CacheRecord& record);

  const std::string& path() const noexcept { return path_; }
  const std::string& engine_version() const noexcept { return version_; }
  std::size_t size() const;
  std::size_t corrupt_lines() const noexcept { return corrupt_; }
  std::size_t stale_lines() const noexcept { return stale_; }

 private:
  using Key = std::tuple<CoefficientKind, Partition, Partition, Partition>;
  static Key key_of(const CacheRecord& r);
  void load();
  void append_line(const std::string& line);

  std::string path_;
  std::string version_;
  std::ostream* warnings_;
  std::size_t corrupt_ = 0;
  std::size_t stale_ = 0;
  mutable std::mutex mutex_;
  std::map<Key, ExactInt> entries_;
};

// --cache, then $KRONCAVE_CACHE, then ./kroncave-cache.jsonl.
std::string resolve_cache_path(const std::optional<std::string>& flag);

}  // namespace kroncave
