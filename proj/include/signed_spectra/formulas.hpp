#ifndef SIGNED_SPECTRA_FORMULAS_HPP
#define SIGNED_SPECTRA_FORMULAS_HPP

#include "signed_spectra/charpoly.hpp"

namespace signed_spectra {

/// Two of the closed forms are printed inconsistently in their source; the
/// `as_printed` variant reproduces the printed statement, `resolved` the
/// version that agrees with exact computation (selected by the test oracles).
enum class ClosedFormVariant { as_printed, resolved };

/// Characteristic polynomial of A(K_n, T_{s,t}^-):
/// (x+1)^(n-5) times a quintic in k = s+t+1, u = n-s-t-2.
/// Requires s,t >= 1 and n >= s+t+2.
IntPolynomial charpoly_double_star(int n, int s, int t);

/// Characteristic polynomial of A(K_n, linked-stars(a,b)^-), a+b = n >= 6,
/// 2 <= b <= n/2: (x+1)^(n-6) (x-1) times a quintic in a*b and n.
IntPolynomial charpoly_linked_stars(int n, int a, int b,
                                    ClosedFormVariant variant = ClosedFormVariant::resolved);

/// Characteristic polynomial of D^+-(S+_{2,n-2}) with all triangles of sign
/// tri_sign; n >= 5. The variant only matters for tri_sign = -1.
IntPolynomial charpoly_s_plus(int n, int tri_sign,
                              ClosedFormVariant variant = ClosedFormVariant::resolved);

/// Upper bound for the least signed distance eigenvalue at diameter d:
/// -2 for d = 2, -2-sqrt(2) for d = 3, -4(d-1)/3 for d >= 4.
double distance_bound(int d);

/// Balanced refinement -2d+3, stated for d >= 4.
double balanced_distance_bound(int d);

}  // namespace signed_spectra

#endif
