#include <doctest.h>

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "kroncave/errors.hpp"
#include "kroncave/store.hpp"

using namespace kroncave;
namespace fs = std::filesystem;

namespace {

struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& name) {
    path = fs::temp_directory_path() / ("kroncave-test-" + std::to_string(::getpid()) + "-" + name);
    fs::remove(path);
  }
  ~TempFile() { fs::remove(path); }
  std::string str() const { return path.string(); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("partition text") {
  CHECK(parse_partition_text("3,3,1,1") == Partition{3, 3, 1, 1});
  CHECK(parse_partition_text("-").empty());
  CHECK(parse_partition_text(" 2, 1 ") == Partition{2, 1});
  CHECK(parse_partition_text("10") == Partition{10});

  auto position = [](const std::string& s) -> long {
    try {
      parse_partition_text(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position("1,2") == 2);
  CHECK(position("2,0") == 2);
  CHECK(position("2,-1") == 2);
  CHECK(position("") == 0);
  CHECK(position("2,,1") == 2);
  CHECK(position("2,1,") == 4);
  CHECK(position("a") == 0);
  CHECK(position("3 1") == 2);
  CHECK(position("- 1") == 2);
  for (const auto& p : partitions_up_to(7)) CHECK(parse_partition_text(to_string(p)) == p);
}

TEST_CASE("record serialization") {
  const CacheRecord r{CoefficientKind::kron, {2, 2}, {2, 2}, {2, 2}, 1, "v1"};
  const std::string line = serialize(r);
  CHECK(line == R"({"kind":"kron","lambda":"2,2","mu":"2,2","nu":"2,2","value":"1","engineVersion":"v1"})");
  CHECK(parse_record(line) == r);
  const ExactInt big = (ExactInt(1) << 200) + 7;
  const CacheRecord b{CoefficientKind::redkron, {}, {1}, {1}, big, "v1"};
  CHECK(parse_record(serialize(b))->value == big);
  CHECK_FALSE(parse_record("not json"));
  CHECK_FALSE(parse_record(R"({"kind":"kron"})"));
  CHECK_FALSE(parse_record(R"({"kind":"bad","lambda":"-","mu":"-","nu":"-","value":"1","engineVersion":"v"})"));
  CHECK_FALSE(parse_record(R"({"kind":"kron","lambda":"1,2","mu":"-","nu":"-","value":"1","engineVersion":"v"})"));
  CHECK_FALSE(parse_record(R"({"kind":"kron","lambda":"-","mu":"-","nu":"-","value":"x1","engineVersion":"v"})"));
}

TEST_CASE("canonical argument order") {
  const auto a = canonical({CoefficientKind::kron, {1, 1, 1}, {3}, {2, 1}, 0, ""});
  CHECK(a.lambda == Partition{3});
  CHECK(a.mu == Partition{2, 1});
  CHECK(a.nu == Partition{1, 1, 1});
  const auto b = canonical({CoefficientKind::lr, {1, 1}, {2}, {2, 1, 1}, 0, ""});
  CHECK(b.lambda == Partition{2});
  CHECK(b.mu == Partition{1, 1});
  CHECK(b.nu == Partition{2, 1, 1});
}

TEST_CASE("store round trip") {
  TempFile file("roundtrip.jsonl");
  {
    JsonlStore store(file.str(), "v1");
    CHECK(store.size() == 0);
    CHECK_FALSE(store.lookup(CoefficientKind::kron, {2, 2}, {2, 2}, {2, 2}));
    const CacheRecord r{CoefficientKind::kron, {2, 2}, {2, 2}, {2, 2}, 1, "v1"};
    store.put(r);
    CHECK(store.get(r) == r);
    store.store(CoefficientKind::lr, {2}, {1}, {2, 1}, 1);
    CHECK(store.lookup(CoefficientKind::lr, {1}, {2}, {2, 1}) == ExactInt(1));
    // Re-storing an identical value does not grow the file.
    store.store(CoefficientKind::lr, {1}, {2}, {2, 1}, 1);
  }
  const std::string text = slurp(file.path);
  CHECK(std::count(text.begin(), text.end(), '\n') == 2);

  JsonlStore reopened(file.str(), "v1");
  CHECK(reopened.size() == 2);
  CHECK(reopened.lookup(CoefficientKind::kron, {2, 2}, {2, 2}, {2, 2}) == ExactInt(1));

  JsonlStore other_version(file.str(), "v2");
  CHECK(other_version.size() == 0);
  CHECK(other_version.stale_lines() == 2);
  CHECK_FALSE(other_version.lookup(CoefficientKind::kron, {2, 2}, {2, 2}, {2, 2}));
}

TEST_CASE("corrupt and partial lines are skipped with a warning") {
  TempFile file("corrupt.jsonl");
  {
    std::ofstream out(file.path);
    out << serialize({CoefficientKind::redkron, {1}, {1}, {1}, 1, "v1"}) << "\n";
    out << "{garbage\n";
    out << "\n";
    out << R"({"kind":"redkron","lambda":"1","mu":"1","nu":"2","val)";  // torn write, no newline
  }
  std::ostringstream warnings;
  JsonlStore store(file.str(), "v1", &warnings);
  CHECK(store.size() == 1);
  CHECK(store.corrupt_lines() == 2);
  CHECK(warnings.str().find("corrupt.jsonl:2") != std::string::npos);
  CHECK(warnings.str().find("corrupt.jsonl:4") != std::string::npos);

  // The next append starts on a fresh line, so both records survive.
  store.store(CoefficientKind::redkron, {1}, {1}, {2}, 1);
  JsonlStore reread(file.str(), "v1");
  CHECK(reread.size() == 2);
  CHECK(reread.corrupt_lines() == 2);
}

TEST_CASE("unwritable stores raise StoreIO") {
  const fs::path dir = fs::temp_directory_path() / "kroncave-no-such-dir" / "x" / "cache.jsonl";
  JsonlStore store(dir.string(), "v1");
  CHECK_THROWS_AS(store.store(CoefficientKind::kron, {1}, {1}, {1}, 1), StoreIO);
  TempFile d("as-directory");
  fs::create_directories(d.path);
  CHECK_THROWS_AS(JsonlStore(d.str(), "v1"), StoreIO);
  fs::remove_all(d.path);
}

TEST_CASE("cache hits equal cold computation on random queries") {
  TempFile file("random.jsonl");
  const auto shapes = partitions_up_to(3);
  std::mt19937 rng(12345);
  std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
  std::vector<std::array<Partition, 3>> queries;
  for (int i = 0; i < 100; ++i) queries.push_back({shapes[pick(rng)], shapes[pick(rng)], shapes[pick(rng)]});

  std::vector<ExactInt> cold;
  {
    Engine engine;
    JsonlStore store(file.str(), engine.version());
    engine.attach_cache(&store);
    for (const auto& q : queries) cold.push_back(engine.reduced_kronecker(q[0], q[1], q[2]));
  }
  Engine warm;
  JsonlStore store(file.str(), warm.version());
  CHECK(store.size() > 0);
  warm.attach_cache(&store);
  for (std::size_t i = 0; i < queries.size(); ++i) {
    const auto& q = queries[i];
    CHECK(warm.reduced_kronecker(q[2], q[0], q[1]) == cold[i]);
  }
}

TEST_CASE("several writers share one file") {
  TempFile file("writers.jsonl");
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < 4; ++t) {
      pool.emplace_back([&, t] {
        JsonlStore store(file.str(), "v1");
        for (int i = 1; i <= 25; ++i) store.store(CoefficientKind::kron, {t + 1}, {i}, {i}, t * 100 + i);
      });
    }
  }
  JsonlStore all(file.str(), "v1");
  CHECK(all.corrupt_lines() == 0);
  CHECK(all.size() == 100);
}

TEST_CASE("cache path resolution") {
  CHECK(resolve_cache_path(std::string("x.jsonl")) == "x.jsonl");
  ::setenv("KRONCAVE_CACHE", "/tmp/env.jsonl", 1);
  CHECK(resolve_cache_path(std::nullopt) == "/tmp/env.jsonl");
  CHECK(resolve_cache_path(std::string("y")) == "y");
  ::unsetenv("KRONCAVE_CACHE");
  CHECK(resolve_cache_path(std::nullopt) == "./kroncave-cache.jsonl");
}
