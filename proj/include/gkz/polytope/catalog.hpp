#pragma once

#include "gkz/polytope/configuration.hpp"

namespace gkz::polytope::catalog {

/// Delta_1 x Delta_1 as the matrix [[1,0,1,0],[0,1,0,1],[0,1,1,0]].
Configuration gauss_square();

/// Two triples of equidistant points on parallel lines: the Cayley
/// configuration of {0,1,2} and {0,1,2}.
Configuration scroll();

/// All lattice points of r * Delta_q in dilation coordinates: the vectors of
/// Z^(q+1)_{>=0} with coordinate sum r, sorted by reversed coordinate tuple.
/// For (r, q) = (2, 2) this is the Veronese configuration.
Configuration simplex_multiple(unsigned r, unsigned q);

/// Delta_p x Delta_q; column (i, j) is listed with i varying slowest.
Configuration product_of_simplices(unsigned p, unsigned q);

/// The five-point wedge with parameters 1 <= p <= q.
Configuration wedge(long p, long q);

/// The origin together with the points q e_i and -p e_i, i = 1, 2, 3.
Configuration seven_points(long p, long q);

/// The points q e_i and -p e_i, i = 1, 2, 3: an octahedron for p > 0 and a
/// triangular prism for p < 0.
Configuration six_points(long p, long q);

}  // namespace gkz::polytope::catalog
