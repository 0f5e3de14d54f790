#include "kroncave/store.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <ostream>

#include <fcntl.h>
#include <sys/file.h>
#include <sys/stat.h>
#include <unistd.h>

#include <json.hpp>

#include "kroncave/errors.hpp"

namespace kroncave {

Partition parse_partition_text(std::string_view text) {
  std::size_t pos = 0;
  auto skip_blanks = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_blanks();
  if (pos == text.size()) throw ParseError("empty partition text", pos);
  if (text[pos] == '-') {
    ++pos;
    skip_blanks();
    if (pos != text.size()) throw ParseError("unexpected text after '-'", pos);
    return {};
  }

  std::vector<int> parts;
  while (true) {
    skip_blanks();
    const std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      throw ParseError("parts must be positive integers", pos);
    }
    long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1'000'000) throw ParseError("part too large", start);
      ++pos;
    }
    if (pos == start) throw ParseError("expected a positive integer", pos);
    if (value == 0) throw ParseError("parts must be positive integers", start);
    if (!parts.empty() && value > parts.back()) {
      throw ParseError("parts must be weakly decreasing", start);
    }
    parts.push_back(static_cast<int>(value));
    skip_blanks();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
  return Partition(std::move(parts));
}

CacheRecord canonical(CacheRecord r) {
  if (r.kind == CoefficientKind::lr) {
    if (r.mu < r.lambda) std::swap(r.lambda, r.mu);
    return r;
  }
  std::array<Partition, 3> t{r.lambda, r.mu, r.nu};
  std::sort(t.begin(), t.end());
  r.lambda = std::move(t[0]);
  r.mu = std::move(t[1]);
  r.nu = std::move(t[2]);
  return r;
}

std::string serialize(const CacheRecord& r) {
  nlohmann::ordered_json j;
  j["kind"] = kind_name(r.kind);
  j["lambda"] = to_string(r.lambda);
  j["mu"] = to_string(r.mu);
  j["nu"] = to_string(r.nu);
  j["value"] = to_decimal(r.value);
  j["engineVersion"] = r.engine_version;
  return j.dump();
}

std::optional<CacheRecord> parse_record(std::string_view line) {
  const auto j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  auto text = [&](const char* field) -> std::optional<std::string> {
    const auto it = j.find(field);
    if (it == j.end() || !it->is_string()) return std::nullopt;
    return it->get<std::string>();
  };
  const auto kind = text("kind"), lambda = text("lambda"), mu = text("mu"), nu = text("nu"),
             value = text("value"), version = text("engineVersion");
  if (!kind || !lambda || !mu || !nu || !value || !version) return std::nullopt;
  const auto parsed_kind = parse_kind(*kind);
  if (!parsed_kind) return std::nullopt;
  try {
    CacheRecord r;
    r.kind = *parsed_kind;
    r.lambda = parse_partition_text(*lambda);
    r.mu = parse_partition_text(*mu);
    r.nu = parse_partition_text(*nu);
    r.value = parse_decimal(*value);
    r.engine_version = *version;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

JsonlStore::JsonlStore(std::string path, std::string engine_version, std::ostream* warnings)
    : path_(std::move(path)), version_(std::move(engine_version)), warnings_(warnings) {
  load();
}

JsonlStore::Key JsonlStore::key_of(const CacheRecord& r) { return {r.kind, r.lambda, r.mu, r.nu}; }

void JsonlStore::load() {
  struct stat st {};
  if (::stat(path_.c_str(), &st) != 0) {
    if (errno == ENOENT) return;  // created on first write
    throw StoreIO("cannot stat cache " + path_ + ": " + std::strerror(errno));
  }
  if (S_ISDIR(st.st_mode)) throw StoreIO("cache path " + path_ + " is a directory");
  std::ifstream in(path_);
  if (!in) throw StoreIO("cannot read cache " + path_);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto r = parse_record(line);
    if (!r) {
      ++corrupt_;
      if (warnings_) *warnings_ << "warning: " << path_ << ":" << number << ": skipping corrupt cache line\n";
      continue;
    }
    if (r->engine_version != version_) {
      ++stale_;
      continue;
    }
    const auto c = canonical(std::move(*r));
    entries_[key_of(c)] = c.value;
  }
  if (in.bad()) throw StoreIO("error reading cache " + path_);
}

std::optional<CacheRecord> JsonlStore::get(const CacheRecord& key) const {
  CacheRecord c = canonical(key);
  std::lock_guard lock(mutex_);
  const auto it = entries_.find(key_of(c));
  if (it == entries_.end()) return std::nullopt;
  c.value = it->second;
  c.engine_version = version_;
  return c;
}

void JsonlStore::put(const CacheRecord& record) {
  CacheRecord c = canonical(record);
  c.engine_version = version_;
  std::lock_guard lock(mutex_);
  const auto key = key_of(c);
  const auto it = entries_.find(key);
  if (it != entries_.end() && it->second == c.value) return;
  append_line(serialize(c));
  entries_[key] = c.value;
}

void JsonlStore::append_line(const std::string& line) {
  const int fd = ::open(path_.c_str(), O_WRONLY | O_APPEND | O_CREAT | O_CLOEXEC, 0644);
  if (fd < 0) throw StoreIO("cannot open cache " + path_ + " for writing: " + std::strerror(errno));
  struct Closer {
    int fd;
    ~Closer() {
      ::flock(fd, LOCK_UN);
      ::close(fd);
    }
  } closer{fd};
  if (::flock(fd, LOCK_EX) != 0) throw StoreIO("cannot lock cache " + path_);

  // A crashed writer may have left a partial line; start on a fresh one.
  std::string payload;
  struct stat st {};
  if (::fstat(fd, &st) == 0 && st.st_size > 0) {
    const int rfd = ::open(path_.c_str(), O_RDONLY | O_CLOEXEC);
    char last = '\n';
    if (rfd >= 0) {
      if (::pread(rfd, &last, 1, st.st_size - 1) != 1) last = '\n';
      ::close(rfd);
    }
    if (last != '\n') payload += '\n';
  }
  payload += line;
  payload += '\n';

  const char* p = payload.data();
  std::size_t left = payload.size();
  while (left > 0) {
    const ssize_t n = ::write(fd, p, left);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw StoreIO("cannot write cache " + path_ + ": " + std::strerror(errno));
    }
    p += n;
    left -= static_cast<std::size_t>(n);
  }
}

std::optional<ExactInt> JsonlStore::lookup(CoefficientKind kind, const Partition& lambda,
                                           const Partition& mu, const Partition& nu) {
  auto r = get({kind, lambda, mu, nu, 0, version_});
  if (!r) return std::nullopt;
  return r->value;
}

void JsonlStore::store(CoefficientKind kind, const Partition& lambda, const Partition& mu,
                       const Partition& nu, const ExactInt& value) {
  put({kind, lambda, mu, nu, value, version_});
}

std::size_t JsonlStore::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

std::string resolve_cache_path(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("KRONCAVE_CACHE"); env && *env) return env;
  return "./kroncave-cache.jsonl";
}

}  // namespace kroncave
