#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gkz/polytope/configuration.hpp"

namespace gkz::polytope {

/// A nonempty face of conv(A) given by the indices of the columns on it and
/// a supporting functional: <w, a_j> = c for j in the face and < c for every
/// other column. The improper face carries w = 0.
struct Face {
  std::vector<std::size_t> indices;
  RatVector w;
  Rational c;
  std::size_t dimension = 0;

  bool contains(std::size_t j) const;
};

/// The complete face lattice of conv(A), computed once.
///
/// Vertices are found with an exact cone-membership test, facets by brute
/// force over hyperplanes spanned by d - 1 linearly independent vertices, and
/// all other faces by closing the facets under intersection.
class FaceLattice {
 public:
  explicit FaceLattice(const Configuration& a);

  /// All nonempty faces, including the improper face, sorted
  /// lexicographically by index set.
  const std::vector<Face>& faces() const noexcept { return faces_; }
  const std::vector<Face>& facets() const noexcept { return facets_; }
  const std::vector<std::size_t>& vertices() const noexcept { return vertices_; }

  Face smallest_face_containing(std::span<const std::size_t> subset) const;
  bool is_spanning(std::span<const std::size_t> subset) const;
  std::vector<std::size_t> interior_points() const;

  /// Faces of the given face that have dimension one less.
  std::vector<const Face*> facets_of(const Face& f) const;
  const Face& improper_face() const;

 private:
  Configuration config_;
  std::vector<std::size_t> vertices_;
  std::vector<Face> facets_;
  std::vector<Face> faces_;
};

std::vector<Face> facial_subsets(const Configuration& a);
Face smallest_face_containing(const Configuration& a, std::span<const std::size_t> subset);
bool is_spanning(const Configuration& a, std::span<const std::size_t> subset);

/// Columns lying in the relative interior of conv(A).
std::vector<std::size_t> interior_points(const Configuration& a);

/// Smallest index j whose removal drops the rank, if any.
std::optional<std::size_t> is_pyramid(const Configuration& a);

/// Volume of conv(A) normalized so that a simplex whose vertices form a basis
/// of the lattice generated by the columns has volume 1. Computed from a
/// pulling triangulation.
Integer normalized_volume(const Configuration& a);

/// The simplices (as column index lists of length d) of the pulling
/// triangulation that always pulls the smallest-index vertex.
std::vector<std::vector<std::size_t>> pulling_triangulation(const Configuration& a, const FaceLattice& lattice);

}  // namespace gkz::polytope
