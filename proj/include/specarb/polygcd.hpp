#pragma once

#include <vector>

#include "specarb/multipoly.hpp"

namespace specarb {

/// Greatest common divisor of two multivariate polynomials over Q,
/// normalized to leading coefficient 1 under graded-lex.  gcd(p, 0) is p
/// normalized; both arguments zero is rejected.
MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q);

/// Least common multiple of a nonempty list of nonzero polynomials,
/// normalized to leading coefficient 1.
MultiPoly poly_lcm(const std::vector<MultiPoly>& ps);

}  // namespace specarb
