#ifndef RIESZMIX_SPECFUN_HPP
#define RIESZMIX_SPECFUN_HPP

#include "rieszmix/types.hpp"

namespace rieszmix {

/// log Gamma_Omega(s) = (r(r-1)/4) log(2 pi) + sum_i log Gamma(s_i - (i-1)/2).
/// Throws PoleError when some s_i - (i-1)/2 <= 0.
double log_gamma_omega(const ShapeVector& s);

/// log I(alpha, z), the modified Bessel function of the first kind.
/// Power series for z <= 30, log-domain asymptotic expansion above; negative
/// integer orders map to their positive counterparts.
double log_bessel_i(double alpha, double z);

/// g_b(x) = sum_k x^k / (k! Gamma(k+b)), truncated when the next term drops
/// below rel_tol times the running sum. Oracle for the Bessel identity
/// g_b(x) = x^{(1-b)/2} I(b-1, 2 sqrt(x)); never used on production paths.
double g_series(double b, double x, double rel_tol = 1e-16);

}  // namespace rieszmix

#endif  // RIESZMIX_SPECFUN_HPP
