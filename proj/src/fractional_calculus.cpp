#include "fracsrc/fractional_calculus.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fracsrc/special_functions.hpp"

namespace fracsrc {

namespace {

void require_order(double order) {
  if (!(order > 0.0 && order < 1.0))
    throw std::domain_error("fractional order must lie in (0, 1)");
}

// Product-integration weights for J_order, exact for piecewise-linear input:
//   (J v)(t_i) = h^order/Gamma(order+2) *
//       [ c_i v_0 + sum_{m=1}^{i-1} d2_m v_{i-m} + v_i ],
//   d2_m = (m+1)^{order+1} - 2 m^{order+1} + (m-1)^{order+1},
//   c_i  = (i-1)^{order+1} - i^{order+1} + (order+1) i^order.
// All weights are nonnegative (second differences of a convex power).
struct ConvolutionWeights {
  double scale;              // h^order / Gamma(order+2)
  std::vector<double> d2;    // gap weights, index m >= 1
  std::vector<double> c0;    // weight of v_0 at row i

  ConvolutionWeights(double order, double h, int n) {
    scale = std::pow(h, order) / gamma_fn(order + 2.0);
    std::vector<double> p(n + 1);
    for (int m = 0; m <= n; ++m) p[m] = std::pow((double)m, order + 1.0);
    d2.assign(n, 0.0);
    for (int m = 1; m < n; ++m) d2[m] = p[m + 1] - 2.0 * p[m] + p[m - 1];
    c0.assign(n, 0.0);
    for (int i = 1; i < n; ++i)
      c0[i] = p[i - 1] - p[i] + (order + 1.0) * std::pow((double)i, order);
  }
};

}  // namespace

GridFunction rl_forward(double order, const GridFunction& v) {
  require_order(order);
  const int n = v.grid.n_steps;
  ConvolutionWeights w(order, v.grid.step(), n);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  for (int i = 1; i < n; ++i) {
    double s = v.values(i) + w.c0[i] * v.values(0);
    for (int m = 1; m < i; ++m) s += w.d2[m] * v.values(i - m);
    out(i) = w.scale * s;
  }
  return GridFunction(v.grid, std::move(out));
}

GridFunction reflect(const GridFunction& v) {
  return GridFunction(v.grid, v.values.reverse());
}

GridFunction rl_backward(double order, const GridFunction& v) {
  return reflect(rl_forward(order, reflect(v)));
}

GridFunction caputo(double order, const GridFunction& v) {
  require_order(order);
  const int n = v.grid.n_steps;
  if (n < 4) throw std::invalid_argument("caputo: need at least 4 nodes");
  double scale_inf = v.values.cwiseAbs().maxCoeff();
  if (std::fabs(v.values(0)) > 1e-12 * std::fmax(scale_inf, 1.0))
    throw std::invalid_argument("caputo: input must vanish at t = 0");

  ConvolutionWeights w(order, v.grid.step(), n);
  const double inv_scale = 1.0 / w.scale;

  // triangular solve of rl_forward(w) = v for two choices of w_0, then fix
  // w_0 so that it matches the quadratic extrapolation from nodes 1..3
  auto solve = [&](double w0, bool with_rhs) {
    Eigen::VectorXd x(n);
    x(0) = w0;
    for (int i = 1; i < n; ++i) {
      double s = (with_rhs ? v.values(i) * inv_scale : 0.0) - w.c0[i] * w0;
      for (int m = 1; m < i; ++m) s -= w.d2[m] * x(i - m);
      x(i) = s;
    }
    return x;
  };

  Eigen::VectorXd base = solve(0.0, true);
  Eigen::VectorXd sens = solve(1.0, false);
  double num = 3.0 * base(1) - 3.0 * base(2) + base(3);
  double den = 1.0 - (3.0 * sens(1) - 3.0 * sens(2) + sens(3));
  double w0 = std::fabs(den) > 1e-10 ? num / den : num;
  Eigen::VectorXd out = base + w0 * sens;
  out(0) = w0;
  return GridFunction(v.grid, std::move(out));
}

GridFunction regularize_source(double beta, const TemporalSource& mu,
                               const TemporalGrid& grid) {
  if (!(beta > 0.0 && beta < 1.0))
    throw std::domain_error("regularize_source: beta must lie in (0, 1)");
  mu.validate(grid.T);

  Eigen::VectorXd out = Eigen::VectorXd::Zero(grid.n_steps);
  if (mu.regular) {
    if (!(mu.regular->grid == grid))
      throw std::invalid_argument("regularize_source: regular part grid mismatch");
    out = rl_forward(beta, *mu.regular).values;
  }
  if (mu.atoms) {
    const double rg = reciprocal_gamma(beta);
    for (const auto& atom : mu.atoms->atoms)
      for (int i = 0; i < grid.n_steps; ++i) {
        double tau = grid.node(i) - atom.a;
        if (tau > 0.0) out(i) += atom.r * std::pow(tau, beta - 1.0) * rg;
      }
  }
  return GridFunction(grid, std::move(out));
}

GridFunction convolve(const GridFunction& g, const GridFunction& v) {
  if (!(g.grid == v.grid))
    throw std::invalid_argument("convolve: grid mismatch");
  const int n = g.grid.n_steps;
  const double h = g.grid.step();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  // exact cellwise integral of the product of two linear interpolants
  for (int i = 1; i < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < i; ++j) {
      double ga = g.values(j), dg = g.values(j + 1) - g.values(j);
      double va = v.values(i - j), dv = v.values(i - j - 1) - v.values(i - j);
      acc += ga * va + 0.5 * (ga * dv + va * dg) + dg * dv / 3.0;
    }
    out(i) = h * acc;
  }
  return GridFunction(g.grid, std::move(out));
}

}  // namespace fracsrc
