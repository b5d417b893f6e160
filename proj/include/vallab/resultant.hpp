#pragma once

#include "vallab/poly.hpp"

namespace vallab {

/// Res(a,b) = lc(a)^deg(b) * prod b(alpha_i) over the roots of a, computed
/// exactly by fraction-free elimination (Bareiss) on the integer Sylvester
/// matrix after clearing denominators. Returns 0 when either input is the
/// zero polynomial.
Rational resultant(const Poly& a, const Poly& b);

/// R(X) = Res_Y(p(Y), q(X+Y)): the difference polynomial, of degree
/// deg(p)*deg(q), whose root multiset is {beta - alpha : p(alpha) = 0,
/// q(beta) = 0}. Requires p monic and both inputs nonzero. The elimination
/// runs over the ring Q[X] (Sylvester entries are polynomials in X).
Poly taylor_shift_resultant(const Poly& p, const Poly& q);

} // namespace vallab
