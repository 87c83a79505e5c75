#pragma once

#include "fracsrc/grid.hpp"

namespace fracsrc {

// Forward Riemann-Liouville integral J_order on a grid function: product
// integration that is exact for piecewise-linear inputs (exact moments of
// the (t-s)^(order-1) kernel on every cell). Node 0 maps to 0.
GridFunction rl_forward(double order, const GridFunction& v);

// Backward integral; identical quadrature reflected about t -> T-t.
GridFunction rl_backward(double order, const GridFunction& v);

// Time reversal (tau v)(t) = v(T-t).
GridFunction reflect(const GridFunction& v);

// Discrete Caputo derivative of order `order` for grid functions vanishing
// at t=0: the exact triangular inverse of rl_forward at nodes 1..n-1; node 0
// is filled by quadratic one-sided extrapolation. rl_forward(order,
// caputo(order, v)) reproduces v at all nodes to rounding.
GridFunction caputo(double order, const GridFunction& v);

// g = J_beta mu. The L2 part goes through rl_forward; each atom contributes
// the shifted power kernel r (t-a)^(beta-1)/Gamma(beta) evaluated exactly at
// the nodes (nodes with t <= a get 0). Requires beta in (0,1).
GridFunction regularize_source(double beta, const TemporalSource& mu,
                               const TemporalGrid& grid);

// Causal convolution (g*v)(t_i) = int_0^{t_i} g(s) v(t_i - s) ds, exact for
// piecewise-linear g and v.
GridFunction convolve(const GridFunction& g, const GridFunction& v);

}  // namespace fracsrc
