#pragma once

#include <optional>

namespace fracsrc {

// Parameters of the two-parameter Mittag-Leffler function E_{alpha,beta}.
// Only the negative real axis is supported by the evaluator.
struct MLParams {
  double alpha;  // in (0, 1]
  double beta;   // > 0

  MLParams(double a, double b);  // validates, throws std::domain_error
};

// E_{alpha,beta}(z) for z <= 0. Relative accuracy ~1e-13 for |z| <= 5,
// absolute accuracy well below 1e-12 on the whole axis. Deterministic.
double ml_eval(const MLParams& p, double z);

// t^(alpha-1) E_{alpha,alpha}(-lambda t^alpha), the modal response kernel.
// Requires t > 0 (weakly singular at t = 0) and lambda >= 0.
double ml_kernel(double alpha, double lambda, double t);

// Leading long-time term 1/(Gamma(1-alpha) rho t^alpha).
double ml_asymptotic_leading(double alpha, double rho, double t);

namespace detail {

// Power series in binary128 with an a-posteriori cancellation guard.
// Empty when the series needs more than the term cap or the cancellation
// would push the summation noise above ~1e-17 relative.
std::optional<double> ml_series(double alpha, double beta, double z);

// Spectral-density integral on the cut (Gorenflo-Loutchko-Luchko form),
// valid for 0 < alpha < 1, beta < 1 + alpha, z < 0.
double ml_integral(double alpha, double beta, double z);

// Optimally truncated asymptotic expansion -sum_k z^-k / Gamma(beta-alpha k).
// Empty when the attainable truncation error is above ~1e-15.
std::optional<double> ml_asymptotic_series(double alpha, double beta, double z);

}  // namespace detail

}  // namespace fracsrc
