#pragma once

#include "gkz/exactalg/int_matrix.hpp"

namespace gkz::polytope {

/// Exact feasibility test for G * lambda = target with lambda >= 0: true when
/// the target lies in the cone spanned by the columns of G. Uses phase one of
/// the simplex method with Bland's rule over the rationals.
bool cone_contains(const exact::IntMatrix& generators, const exact::IntVector& target);

}  // namespace gkz::polytope
