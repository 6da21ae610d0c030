#include "gkz/polytope/catalog.hpp"

#include <algorithm>

namespace gkz::polytope::catalog {

namespace {

void compositions(unsigned total, unsigned parts, IntVector& prefix, std::vector<IntVector>& out) {
  if (parts == 1) {
    prefix.emplace_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned k = 0; k <= total; ++k) {
    prefix.emplace_back(k);
    compositions(total - k, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Configuration gauss_square() { return Configuration(IntMatrix{{1, 0, 1, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}}); }

Configuration scroll() {
  return Configuration(IntMatrix{{1, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 1}, {0, 1, 2, 0, 1, 2}});
}

Configuration simplex_multiple(unsigned r, unsigned q) {
  std::vector<IntVector> points;
  IntVector prefix;
  compositions(r, q + 1, prefix, points);
  std::sort(points.begin(), points.end(), [](const IntVector& a, const IntVector& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return Configuration(IntMatrix::from_columns(points));
}

Configuration product_of_simplices(unsigned p, unsigned q) {
  std::vector<IntVector> columns;
  for (unsigned i = 0; i <= p; ++i)
    for (unsigned j = 0; j <= q; ++j) {
      IntVector c(p + q + 1, 0);
      c[i] = 1;
      if (j > 0) c[p + j] = 1;
      columns.push_back(std::move(c));
    }
  return Configuration(IntMatrix::from_columns(columns));
}

Configuration wedge(long p, long q) {
  IntMatrix m{{1, 1, 1, 1, 1}, {0, p, q, 0, 0}, {0, 0, 0, p, q}};
  return Configuration(std::move(m));
}

Configuration seven_points(long p, long q) {
  IntMatrix m{{1, 1, 1, 1, 1, 1, 1}, {0, q, -p, 0, 0, 0, 0}, {0, 0, 0, q, -p, 0, 0}, {0, 0, 0, 0, 0, q, -p}};
  return Configuration(std::move(m));
}

Configuration six_points(long p, long q) {
  IntMatrix m{{1, 1, 1, 1, 1, 1}, {q, -p, 0, 0, 0, 0}, {0, 0, q, -p, 0, 0}, {0, 0, 0, 0, q, -p}};
  return Configuration(std::move(m));
}

}  // namespace gkz::polytope::catalog
