#include "gkz/polytope/faces.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gkz/errors.hpp"
#include "gkz/polytope/cone.hpp"

namespace gkz::polytope {

namespace {

Integer dot(const IntVector& w, const IntVector& a) {
  Integer s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * a[i];
  return s;
}

std::vector<std::size_t> intersect(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool includes(const std::vector<std::size_t>& big, std::span<const std::size_t> small) {
  for (auto j : small)
    if (!std::binary_search(big.begin(), big.end(), j)) return false;
  return true;
}

RatVector add(const RatVector& a, const RatVector& b) {
  RatVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

/// Calls visit(subset) for every k-subset of items in lexicographic order.
template <class Visit>
void for_each_subset(const std::vector<std::size_t>& items, std::size_t k, Visit visit) {
  if (k > items.size()) return;
  std::vector<std::size_t> pos(k);
  for (std::size_t i = 0; i < k; ++i) pos[i] = i;
  std::vector<std::size_t> chosen(k);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) chosen[i] = items[pos[i]];
    visit(chosen);
    std::size_t i = k;
    while (i > 0 && pos[i - 1] == items.size() - k + (i - 1)) --i;
    if (i == 0) return;
    ++pos[i - 1];
    for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
}

}  // namespace

bool Face::contains(std::size_t j) const { return std::binary_search(indices.begin(), indices.end(), j); }

FaceLattice::FaceLattice(const Configuration& a) : config_(a) {
  const std::size_t d = a.d(), s = a.s();
  const auto columns = a.matrix().column_vectors();
  for (std::size_t j = 0; j < s; ++j) {
    if (!cone_contains(a.matrix().without_column(j), columns[j])) vertices_.push_back(j);
  }

  if (d >= 2) {
    std::set<std::vector<std::size_t>> seen;
    for_each_subset(vertices_, d - 1, [&](const std::vector<std::size_t>& subset) {
      for (const auto& f : facets_)
        if (includes(f.indices, subset)) return;
      IntMatrix sub = a.matrix().select_columns(subset);
      if (exact::rank(sub) != d - 1) return;
      auto kernel = exact::integer_kernel(sub.transpose());
      IntVector w = kernel.front();
      bool pos = false, neg = false;
      std::vector<std::size_t> on;
      for (std::size_t j = 0; j < s; ++j) {
        Integer v = dot(w, columns[j]);
        if (v > 0) pos = true;
        if (v < 0) neg = true;
        if (v == 0) on.push_back(j);
      }
      if (pos && neg) return;
      if (pos)
        for (auto& x : w) x = -x;
      if (!seen.insert(on).second) return;
      Face f;
      f.indices = std::move(on);
      for (const auto& x : w) f.w.emplace_back(x);
      f.c = 0;
      f.dimension = d - 2;
      facets_.push_back(std::move(f));
    });
  }
  std::sort(facets_.begin(), facets_.end(), [](const Face& x, const Face& y) { return x.indices < y.indices; });

  std::map<std::vector<std::size_t>, Face> all;
  for (const auto& f : facets_) all.emplace(f.indices, f);
  std::vector<Face> frontier = facets_;
  while (!frontier.empty()) {
    std::vector<Face> next;
    for (const auto& f : frontier) {
      for (const auto& g : facets_) {
        auto meet = intersect(f.indices, g.indices);
        if (meet.empty() || all.count(meet)) continue;
        Face h;
        h.indices = meet;
        h.w = add(f.w, g.w);
        h.c = 0;
        h.dimension = affine_dimension(a, h.indices);
        all.emplace(meet, h);
        next.push_back(std::move(h));
      }
    }
    frontier = std::move(next);
  }
  Face whole;
  for (std::size_t j = 0; j < s; ++j) whole.indices.push_back(j);
  whole.w = RatVector(d, Rational(0));
  whole.c = 0;
  whole.dimension = d - 1;
  all.emplace(whole.indices, whole);
  for (auto& [key, face] : all) faces_.push_back(std::move(face));
}

const Face& FaceLattice::improper_face() const {
  for (const auto& f : faces_)
    if (f.indices.size() == config_.s()) return f;
  throw Error("face lattice lacks the improper face");
}

Face FaceLattice::smallest_face_containing(std::span<const std::size_t> subset) const {
  if (subset.empty()) throw InvalidInput("smallest face of the empty set");
  for (auto j : subset)
    if (j >= config_.s()) throw InvalidInput("column index out of range");
  const Face* best = &improper_face();
  for (const auto& f : faces_)
    if (f.indices.size() < best->indices.size() && includes(f.indices, subset)) best = &f;
  return *best;
}

bool FaceLattice::is_spanning(std::span<const std::size_t> subset) const {
  return smallest_face_containing(subset).indices.size() == config_.s();
}

std::vector<std::size_t> FaceLattice::interior_points() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < config_.s(); ++j) {
    bool on_boundary = false;
    for (const auto& f : facets_)
      if (f.contains(j)) {
        on_boundary = true;
        break;
      }
    if (!on_boundary) out.push_back(j);
  }
  return out;
}

std::vector<const Face*> FaceLattice::facets_of(const Face& f) const {
  std::vector<const Face*> out;
  for (const auto& g : faces_)
    if (g.dimension + 1 == f.dimension && g.indices.size() < f.indices.size() && includes(f.indices, g.indices))
      out.push_back(&g);
  return out;
}

std::vector<Face> facial_subsets(const Configuration& a) { return FaceLattice(a).faces(); }

Face smallest_face_containing(const Configuration& a, std::span<const std::size_t> subset) {
  return FaceLattice(a).smallest_face_containing(subset);
}

bool is_spanning(const Configuration& a, std::span<const std::size_t> subset) {
  return FaceLattice(a).is_spanning(subset);
}

std::vector<std::size_t> interior_points(const Configuration& a) { return FaceLattice(a).interior_points(); }

std::optional<std::size_t> is_pyramid(const Configuration& a) {
  for (std::size_t j = 0; j < a.s(); ++j)
    if (exact::rank(a.matrix().without_column(j)) < a.d()) return j;
  return std::nullopt;
}

namespace {

std::vector<std::vector<std::size_t>> pull(const FaceLattice& lattice, const Face& f) {
  const auto& vertices = lattice.vertices();
  std::size_t apex = 0;
  bool found = false;
  for (auto j : f.indices)
    if (std::binary_search(vertices.begin(), vertices.end(), j)) {
      apex = j;
      found = true;
      break;
    }
  if (!found) throw Error("face without a vertex");
  if (f.dimension == 0) return {{apex}};
  std::vector<std::vector<std::size_t>> out;
  for (const Face* g : lattice.facets_of(f)) {
    if (g->contains(apex)) continue;
    for (auto& simplex : pull(lattice, *g)) {
      simplex.insert(simplex.begin(), apex);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> pulling_triangulation(const Configuration&, const FaceLattice& lattice) {
  return pull(lattice, lattice.improper_face());
}

Integer normalized_volume(const Configuration& a) {
  FaceLattice lattice(a);
  Integer total = 0;
  for (const auto& simplex : pulling_triangulation(a, lattice)) {
    total += abs(exact::determinant(a.matrix().select_columns(simplex)));
  }
  Integer index = exact::lattice_index(a.matrix());
  return total / index;
}

}  // namespace gkz::polytope
