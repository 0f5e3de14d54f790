#include "kroncave/partition.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "kroncave/errors.hpp"

namespace kroncave {

ExactInt parse_decimal(const std::string& text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw std::invalid_argument("empty integer literal");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') throw std::invalid_argument("malformed integer: " + text);
  }
  ExactInt v(text.substr(i));
  return text[0] == '-' ? ExactInt(-v) : v;
}

ExactInt factorial(int n) {
  ExactInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

namespace {

void validate(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) {
      throw InvalidPartition("partition parts must be positive, got " + std::to_string(parts[i]));
    }
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw InvalidPartition("partition parts must be weakly decreasing");
    }
  }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  validate(parts_);
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_multiset(std::vector<int> parts) {
  if (std::any_of(parts.begin(), parts.end(), [](int p) { return p < 0; })) {
    throw InvalidPartition("negative part");
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

Partition Partition::row(int n) { return n > 0 ? Partition{n} : Partition{}; }

Partition Partition::column(int n) { return Partition(std::vector<int>(std::max(n, 0), 1)); }

std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(),
                                                a.parts_.begin(), a.parts_.end());
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : p) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h ^ static_cast<std::size_t>(p.length());
}

std::string to_string(const Partition& p) {
  if (p.empty()) return "-";
  std::string s;
  for (int v : p) {
    if (!s.empty()) s += ',';
    s += std::to_string(v);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }

Partition pad(const Partition& lambda, int d) {
  if (d < min_pad(lambda)) {
    throw PadTooSmall("pad(" + to_string(lambda) + ", " + std::to_string(d) + "): need d >= " +
                      std::to_string(min_pad(lambda)));
  }
  std::vector<int> parts;
  parts.reserve(lambda.parts().size() + 1);
  parts.push_back(d - lambda.size());
  parts.insert(parts.end(), lambda.begin(), lambda.end());
  if (parts.front() == 0) parts.erase(parts.begin());  // only when lambda is empty and d == 0
  return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols(static_cast<std::size_t>(lambda.part(0)), 0);
  for (int v : lambda) {
    for (int c = 0; c < v; ++c) ++cols[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(cols));
}

Partition midpoint(const Partition& lambda, const Partition& mu, MidpointMode mode) {
  const std::size_t len = static_cast<std::size_t>(std::max(lambda.length(), mu.length()));
  std::vector<int> parts(len);
  for (std::size_t i = 0; i < len; ++i) {
    const int sum = lambda.part(i) + mu.part(i);
    switch (mode) {
      case MidpointMode::exact:
        if (sum % 2 != 0) {
          throw NotIntegral("(" + to_string(lambda) + " + " + to_string(mu) +
                            ")/2 is not a partition");
        }
        parts[i] = sum / 2;
        break;
      case MidpointMode::ceil:
        parts[i] = (sum + 1) / 2;
        break;
      case MidpointMode::floor:
        parts[i] = sum / 2;
        break;
    }
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

Partition union_of(const Partition& lambda, const Partition& mu) {
  std::vector<int> parts(lambda.begin(), lambda.end());
  parts.insert(parts.end(), mu.begin(), mu.end());
  return Partition::from_multiset(std::move(parts));
}

Partition union_of(std::span<const Partition> partitions) {
  std::vector<int> parts;
  for (const auto& p : partitions) parts.insert(parts.end(), p.begin(), p.end());
  return Partition::from_multiset(std::move(parts));
}

std::pair<Partition, Partition> sort_split(const Partition& lambda, const Partition& mu) {
  auto halves = interleave_split(union_of(lambda, mu), 2);
  return {std::move(halves[0]), std::move(halves[1])};
}

std::vector<Partition> interleave_split(const Partition& lambda, int n) {
  if (n < 1) throw std::invalid_argument("interleave_split needs n >= 1");
  std::vector<std::vector<int>> buckets(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
    buckets[i % static_cast<std::size_t>(n)].push_back(lambda.parts()[i]);
  }
  std::vector<Partition> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.emplace_back(std::move(b));
  return out;
}

Partition scaled(const Partition& lambda, int k) {
  if (k < 0) throw std::invalid_argument("scale factor must be nonnegative");
  if (k == 0) return {};
  std::vector<int> parts(lambda.begin(), lambda.end());
  for (int& v : parts) v *= k;
  return Partition(std::move(parts));
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (std::size_t i = 0; i < inner.parts().size(); ++i) {
    if (inner.parts()[i] > outer.parts()[i]) return false;
  }
  return true;
}

ExactInt syt_count(const Partition& lambda) {
  const Partition cols = conjugate(lambda);
  ExactInt hooks = 1;
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
    for (int j = 0; j < lambda.parts()[i]; ++j) {
      const int arm = lambda.parts()[i] - j - 1;
      const int leg = cols.part(static_cast<std::size_t>(j)) - static_cast<int>(i) - 1;
      hooks *= arm + leg + 1;
    }
  }
  ExactInt quotient, remainder;
  boost::multiprecision::divide_qr(factorial(lambda.size()), hooks, quotient, remainder);
  if (remainder != 0) throw InternalNonIntegral("hook product does not divide n!");
  return quotient;
}

Partition DoubleHookShape::reassemble() const {
  std::vector<int> parts;
  if (n4 > 0) parts.push_back(n4);
  if (n3 > 0) parts.push_back(n3);
  parts.insert(parts.end(), static_cast<std::size_t>(d2), 2);
  parts.insert(parts.end(), static_cast<std::size_t>(d1), 1);
  return Partition(std::move(parts));
}

std::optional<DoubleHookShape> double_hook_decompose(const Partition& nu) {
  if (nu.part(2) >= 3) return std::nullopt;
  DoubleHookShape shape;
  shape.n4 = nu.part(0);
  shape.n3 = nu.part(1);
  for (std::size_t i = 2; i < nu.parts().size(); ++i) {
    if (nu.parts()[i] == 2) {
      ++shape.d2;
    } else {
      ++shape.d1;
    }
  }
  return shape;
}

bool murnaghan_inequalities(const Partition& lambda, const Partition& mu, const Partition& nu) {
  const int a = lambda.size(), b = mu.size(), c = nu.size();
  return c <= a + b && b <= a + c && a <= b + c;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Standard successor in reverse-lexicographic order.
  std::vector<int> a{n};
  while (true) {
    out.emplace_back(a);
    std::size_t k = a.size();
    int rem = 0;
    while (k > 0 && a[k - 1] == 1) {
      ++rem;
      --k;
    }
    if (k == 0) break;
    a.resize(k);
    const int v = --a[k - 1];
    ++rem;
    while (rem > v) {
      a.push_back(v);
      rem -= v;
    }
    if (rem > 0) a.push_back(rem);
  }
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int m = 0; m <= n; ++m) {
    auto block = partitions_of(m);
    out.insert(out.end(), std::make_move_iterator(block.begin()),
               std::make_move_iterator(block.end()));
  }
  return out;
}

}  // namespace kroncave
