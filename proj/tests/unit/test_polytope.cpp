#include <doctest.h>

#include <algorithm>
#include <random>

#include "gkz/errors.hpp"
#include "gkz/polytope/catalog.hpp"
#include "gkz/polytope/cone.hpp"
#include "gkz/polytope/faces.hpp"

using namespace gkz;
using namespace gkz::polytope;
using Indices = std::vector<std::size_t>;

namespace {

bool has_face(const std::vector<Face>& faces, const Indices& idx) {
  return std::any_of(faces.begin(), faces.end(), [&](const Face& f) { return f.indices == idx; });
}

void check_witnesses(const Configuration& a, const std::vector<Face>& faces) {
  for (const auto& f : faces) {
    for (std::size_t j = 0; j < a.s(); ++j) {
      Rational v = 0;
      for (std::size_t i = 0; i < a.d(); ++i) v += f.w[i] * Rational(a.matrix()(i, j));
      if (f.contains(j)) {
        CHECK(v == f.c);
      } else {
        CHECK(v < f.c);
      }
    }
  }
}

/// Applies a random unimodular row transformation and column permutation.
Configuration scramble(const Configuration& a, std::mt19937_64& rng, std::vector<std::size_t>& perm) {
  IntMatrix m = a.matrix();
  std::uniform_int_distribution<int> coin(-2, 2);
  for (int step = 0; step < 6; ++step) {
    std::size_t i = static_cast<std::size_t>(rng() % m.rows()), k = static_cast<std::size_t>(rng() % m.rows());
    if (i == k) continue;
    int f = coin(rng);
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) += f * m(k, j);
  }
  perm.resize(m.cols());
  for (std::size_t j = 0; j < perm.size(); ++j) perm[j] = j;
  std::shuffle(perm.begin(), perm.end(), rng);
  return Configuration(m.select_columns(perm));
}

}  // namespace

TEST_CASE("configuration validation") {
  CHECK_THROWS_AS(Configuration(IntMatrix{{1, 1}, {0, 0}}), InvalidInput);
  CHECK_THROWS_AS(Configuration(IntMatrix{{1, 1, 1}, {0, 1, 1}}), InvalidInput);
  CHECK_THROWS_AS(Configuration(IntMatrix{{1, 2, 3}, {0, 1, 5}}), InvalidInput);
  CHECK_NOTHROW(Configuration(IntMatrix{{1}}));
  CHECK(catalog::simplex_multiple(2, 2).matrix() ==
        IntMatrix{{2, 1, 0, 1, 0, 0}, {0, 1, 2, 0, 1, 0}, {0, 0, 0, 1, 1, 2}});
}

TEST_CASE("cone membership") {
  IntMatrix g{{1, 0}, {0, 1}};
  CHECK(cone_contains(g, {2, 3}));
  CHECK_FALSE(cone_contains(g, {-1, 3}));
  CHECK(cone_contains(IntMatrix{{1, 1, 1}, {0, 1, 2}}, {1, 1}));
  CHECK_FALSE(cone_contains(IntMatrix{{1, 1}, {0, 2}}, {1, 3}));
}

TEST_CASE("faces of the Gauss square") {
  auto a = catalog::gauss_square();
  auto faces = facial_subsets(a);
  CHECK(faces.size() == 9);
  std::size_t vertices = 0, edges = 0;
  for (const auto& f : faces) {
    if (f.dimension == 0) ++vertices;
    if (f.dimension == 1) ++edges;
  }
  CHECK(vertices == 4);
  CHECK(edges == 4);
  check_witnesses(a, faces);
}

TEST_CASE("every subset of a unimodular simplex is a face") {
  Configuration a(IntMatrix::identity(4));
  auto faces = facial_subsets(a);
  CHECK(faces.size() == 15);
  check_witnesses(a, faces);
}

TEST_CASE("faces of the Veronese configuration") {
  auto a = catalog::simplex_multiple(2, 2);
  auto faces = facial_subsets(a);
  check_witnesses(a, faces);
  std::vector<Indices> vertex_faces;
  for (const auto& f : faces)
    if (f.dimension == 0) vertex_faces.push_back(f.indices);
  CHECK(vertex_faces == std::vector<Indices>{{0}, {2}, {5}});
  CHECK(has_face(faces, {0, 1, 2}));
  CHECK(has_face(faces, {0, 3, 5}));
  CHECK(has_face(faces, {2, 4, 5}));
}

TEST_CASE("face lattice is closed under intersection") {
  for (const auto& a : {catalog::simplex_multiple(3, 2), catalog::six_points(1, 1), catalog::product_of_simplices(1, 2),
                        catalog::wedge(1, 2)}) {
    auto faces = facial_subsets(a);
    check_witnesses(a, faces);
    for (const auto& f : faces)
      for (const auto& g : faces) {
        Indices meet;
        std::set_intersection(f.indices.begin(), f.indices.end(), g.indices.begin(), g.indices.end(),
                              std::back_inserter(meet));
        if (!meet.empty()) CHECK(has_face(faces, meet));
      }
  }
}

TEST_CASE("spanning subsets") {
  auto octa = catalog::six_points(1, 1);
  CHECK(is_spanning(octa, Indices{0, 1, 2, 3}));
  CHECK_FALSE(is_spanning(octa, Indices{0}));
  CHECK(smallest_face_containing(octa, Indices{0}).indices == Indices{0});
  auto w = catalog::wedge(1, 2);
  CHECK(is_spanning(w, Indices{1, 2, 3, 4}));
  FaceLattice lattice(octa);
  std::vector<Indices> spanning;
  for (std::size_t mask = 1; mask < 64; ++mask) {
    Indices s;
    for (std::size_t j = 0; j < 6; ++j)
      if (mask & (1u << j)) s.push_back(j);
    if (!lattice.is_spanning(s)) continue;
    for (std::size_t j = 0; j < 6; ++j) {
      if (mask & (1u << j)) continue;
      Indices t = s;
      t.push_back(j);
      std::sort(t.begin(), t.end());
      CHECK(lattice.is_spanning(t));
    }
  }
}

TEST_CASE("normalized volume") {
  CHECK(normalized_volume(catalog::gauss_square()) == 2);
  CHECK(normalized_volume(Configuration(IntMatrix::identity(3))) == 1);
  CHECK(normalized_volume(Configuration(IntMatrix{{1, 1, 1}, {0, 1, 2}})) == 2);
  CHECK(normalized_volume(catalog::simplex_multiple(2, 2)) == 4);
  CHECK(normalized_volume(catalog::simplex_multiple(3, 3)) == 27);
  CHECK(normalized_volume(catalog::product_of_simplices(1, 2)) == 3);
  CHECK(normalized_volume(catalog::six_points(1, 1)) == 4);
  CHECK(normalized_volume(catalog::scroll()) == 4);
}

TEST_CASE("normalized volume is invariant under coordinate changes") {
  std::mt19937_64 rng(42);
  for (const auto& a : {catalog::simplex_multiple(2, 2), catalog::wedge(1, 2), catalog::six_points(-1, 2)}) {
    Integer v = normalized_volume(a);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<std::size_t> perm;
      CHECK(normalized_volume(scramble(a, rng, perm)) == v);
    }
  }
}

TEST_CASE("interior points") {
  CHECK(interior_points(catalog::simplex_multiple(2, 2)).empty());
  auto a = catalog::simplex_multiple(3, 2);
  auto inner = interior_points(a);
  REQUIRE(inner.size() == 1);
  CHECK(a.column(inner[0]) == IntVector{1, 1, 1});
  CHECK(interior_points(catalog::gauss_square()).empty());
  CHECK(interior_points(catalog::seven_points(1, 2)) == Indices{0});
}

TEST_CASE("pyramids") {
  Configuration cone(IntMatrix{{1, 1, 1, 1}, {0, 1, 2, 0}, {0, 0, 0, 1}});
  CHECK(is_pyramid(cone) == std::optional<std::size_t>(3));
  CHECK_FALSE(is_pyramid(catalog::gauss_square()).has_value());
  CHECK(is_pyramid(Configuration(IntMatrix::identity(3))) == std::optional<std::size_t>(0));
}
