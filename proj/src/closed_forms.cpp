#include "kroncave/closed_forms.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace kroncave {

bool reachable(int x, int y, int u, int v) noexcept {
  const int run = x - u;
  const int rise = v - y;
  return run >= 0 && std::abs(rise) <= run && (run - rise) % 2 == 0;
}

ExactInt gamma(const GammaQuery& q) {
  if (q.a < 0 || q.b < 0 || q.c < 0 || q.d < 0) throw std::invalid_argument("gamma: negative box");
  long count = 0;
  const int u_max = std::min(q.a + q.b, q.x);
  for (int u = q.a; u <= u_max; ++u) {
    for (int v = q.c; v <= q.c + q.d; ++v) {
      if (reachable(q.x, q.y, u, v)) ++count;
    }
  }
  return count;
}

ExactInt reduced_two_row(int j, int k, const Partition& nu) {
  if (j < 0 || k < 0) throw std::invalid_argument("reduced_two_row: negative row length");
  if (nu.length() > 3) return 0;
  if (j > k) std::swap(j, k);
  const int n1 = nu.part(0), n2 = nu.part(1), n3 = nu.part(2);
  return gamma({n2 + n3, n1 - n2, n1 + n3 + 1, n2 - n3, j, k + 1});
}

namespace {

int indicator(bool p) { return p ? 1 : 0; }

}  // namespace

ExactInt reduced_hook(int j, int k, const Partition& nu) {
  if (j < 0 || k < 0) throw std::invalid_argument("reduced_hook: negative column length");
  if (j == 0 || k == 0) return indicator(nu == Partition::column(std::max(j, k)));

  // nu[n] is one row.
  if (nu.empty()) return indicator(j == k);

  // nu[n] = (n - d, 1^d) is a hook.
  if (nu == Partition::column(nu.size())) {
    const int d = nu.size();
    return indicator(j <= d + k) * indicator(d <= j + k) * indicator(k <= j + d);
  }

  // Any n large enough that the padded row dominates every other bound.
  const int n = 2 * (nu.size() + j + k) + 2;
  const auto shape = double_hook_decompose(pad(nu, n));
  if (!shape) return 0;

  // Compare halves as doubled integers: the bounds involve (j + k - x) / 2.
  const int x = shape->x();
  const int d1 = shape->d1;
  const int spread = std::abs(k - j);
  const int first = indicator(2 * (shape->n3 - 1) <= j + k - x && j + k - x <= 2 * shape->n4) *
                    indicator(spread <= d1);
  const int second = indicator(2 * shape->n3 <= j + k - x + 1 && j + k - x + 1 <= 2 * shape->n4) *
                     indicator(spread <= d1 + 1);
  return first + second;
}

}  // namespace kroncave
