#pragma once

namespace fracsrc {

// Gamma function on the real line via the Lanczos rational approximation
// (g = 6.0246800407767296, 13 terms; coefficients due to Godfrey as used in
// Boost.Math's lanczos13m53). Relative error below 1e-14 on (0, 170).
// Throws std::domain_error at the poles x = 0, -1, -2, ...
// Overflows to +inf above x ~ 171.62.
double gamma_fn(double x);

// log Gamma(x) for x > 0.
double log_gamma(double x);

// Entire reciprocal 1/Gamma(x); zero at the poles of Gamma.
double reciprocal_gamma(double x);

// sin(pi x), cos(pi x) with exact argument reduction (accurate near the
// zeros for large |x|, where sin(M_PI*x) loses all relative accuracy).
double sin_pi(double x);
double cos_pi(double x);

}  // namespace fracsrc
