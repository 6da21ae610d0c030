#include "gkz/polytope/cone.hpp"

#include "gkz/errors.hpp"

namespace gkz::polytope {

using exact::Rational;

bool cone_contains(const exact::IntMatrix& g, const exact::IntVector& target) {
  const std::size_t m = g.rows(), n = g.cols();
  if (target.size() != m) throw InvalidInput("cone membership: dimension mismatch");
  // Tableau columns: n structural, m artificial, 1 right-hand side.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = target[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rational(-g(i, j)) : Rational(g(i, j));
    t[i][n + i] = 1;
    t[i][n + m] = flip ? Rational(-target[i]) : Rational(target[i]);
    basis[i] = n + i;
  }
  // Phase-one objective: minimize the sum of artificials. Reduced cost of a
  // structural column is minus its column sum.
  std::vector<Rational> cost(width);
  for (std::size_t j = 0; j < width; ++j) {
    if (j >= n && j < n + m) continue;
    for (std::size_t i = 0; i < m; ++i) cost[j] -= t[i][j];
  }
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][n + m] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen for phase one
    Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    if (cost[enter] != 0) {
      Rational f = cost[enter];
      for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  return cost[n + m] == 0;
}

}  // namespace gkz::polytope
