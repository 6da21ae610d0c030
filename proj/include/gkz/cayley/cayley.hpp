#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gkz/circuits/circuit.hpp"
#include "gkz/polytope/configuration.hpp"

namespace gkz::cayley {

using exact::IntMatrix;
using exact::IntVector;
using exact::Integer;
using polytope::Configuration;

/// A presentation of A as the Cayley configuration of factors A_0, ..., A_r.
///
/// Column j of A belongs to exactly one group G_i. The difference vectors
/// a_j - a_{base_i} (j in G_i) span a lattice of rank k = d - r - 1, and the
/// factor coordinates of a_j are its coordinates in a basis of that lattice,
/// read off from a Smith normal form U * D * V of the difference matrix D.
/// Factors are stored as r x |G_i| matrices (columns are points of Z^r; rows
/// k..r-1 are zero) after flipping each coordinate axis so its first nonzero
/// value is positive and translating each factor to have minimum 0 in every
/// coordinate.
struct CayleyStructure {
  std::size_t r = 0;
  std::vector<std::vector<std::size_t>> groups;
  std::vector<IntMatrix> factors;
  std::vector<std::size_t> base_points;
  /// First k rows of U: the projection of Z^d onto the difference lattice.
  IntMatrix projection;
  /// Nonzero Smith invariants of the difference matrix.
  IntVector invariants;
  /// The matrix whose rows are the r + 1 group indicators followed by the k
  /// factor coordinate rows; it has the same integer kernel as A.
  IntMatrix assembled;

  /// Rank of the difference lattice.
  std::size_t lattice_rank() const { return projection.rows(); }
};

struct DetectOptions {
  /// Cap on the number of 0/1 functionals tried (2^d of them) and, separately,
  /// on the number of nodes of the partition search. BudgetExceeded past it.
  std::uint64_t max_subsets = std::uint64_t{1} << 16;
};

/// Column subsets whose 0/1 indicator lies in the rational row span of A,
/// excluding the empty set and the full set, sorted lexicographically.
std::vector<std::vector<std::size_t>> row_span_indicators(const Configuration& a, const DetectOptions& options = {});

/// All Cayley presentations with factors of dimension at most r, sorted by r
/// decreasing and then lexicographically by partition.
std::vector<CayleyStructure> detect_cayley(const Configuration& a, const DetectOptions& options = {});

/// The Cayley configuration of the given factors (each an r x n_i matrix of
/// column points), with the group indicator rows first. Dependent rows are
/// dropped so the result is a valid configuration whenever the points are
/// distinct.
Configuration cayley_configuration(const std::vector<IntMatrix>& factors);

/// Affine dimension of the Minkowski sum of the factors indexed by subset.
std::size_t minkowski_dimension(const CayleyStructure& cs, const std::vector<std::size_t>& subset);

struct Essentiality {
  bool essential = false;
  /// First violating proper subset I (by size, then lexicographically).
  std::vector<std::size_t> violating;
};

/// Every nonempty proper subset I of {0..r} has Minkowski dimension >= |I|.
Essentiality is_essential(const CayleyStructure& cs);

/// A subset I (possibly all of {0..r}) with Minkowski dimension <= |I| - 2,
/// which makes the resultant variety of codimension at least two.
std::optional<std::vector<std::size_t>> resultant_defect(const CayleyStructure& cs);

/// (r, q) when A is the set of all lattice points of a simplex whose edges
/// have lattice length r, with q + 1 vertices, measured in the lattice
/// generated by A.
std::optional<std::pair<Integer, std::size_t>> detect_simplex_multiple(const Configuration& a);

enum class Verdict { Rational, NotRational, ConjecturallyNotRational, Degenerate };

std::string to_string(Verdict v);

struct Classification {
  Verdict verdict = Verdict::ConjecturallyNotRational;
  /// Short rule identifier, e.g. "essential-cayley".
  std::string rule;
  /// Plain-language statement of the result that decided the verdict.
  std::string citation;
  std::optional<CayleyStructure> cayley;
  std::optional<circuits::Circuit> circuit;
  std::optional<std::size_t> apex;
  std::optional<std::size_t> interior_point;
  std::vector<std::size_t> defect_subset;
  std::optional<std::pair<Integer, std::size_t>> simplex_multiple;
  std::string note;
};

/// Decision cascade: pyramid, degenerate Cayley structure, essential Cayley
/// structure, unbalanced spanning circuit, interior point, dimension at most
/// four, and otherwise the conjectural verdict.
Classification classify(const Configuration& a, const DetectOptions& options = {});

}  // namespace gkz::cayley
