#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

namespace fracsrc {

// Uniform time grid on [0, T] with nodes t_i = i T/(n_steps-1).
struct TemporalGrid {
  double T = 1.0;
  int n_steps = 2;

  TemporalGrid() = default;
  TemporalGrid(double horizon, int steps);  // validates

  double step() const { return T / (n_steps - 1); }
  double node(int i) const { return T * i / (n_steps - 1); }
  bool operator==(const TemporalGrid& o) const {
    return T == o.T && n_steps == o.n_steps;
  }
};

// Scalar function sampled on a TemporalGrid.
struct GridFunction {
  TemporalGrid grid;
  Eigen::VectorXd values;

  GridFunction() = default;
  GridFunction(TemporalGrid g, Eigen::VectorXd v);  // validates size/finiteness
  static GridFunction zero(const TemporalGrid& g);

  // discrete L2(0,T) norm (trapezoid weights; exactly reflection-invariant)
  double l2_norm() const;
};

// Finite train of weighted Dirac atoms sum_k r_k delta_{a_k}.
struct DeltaAtom {
  double a;  // location in (0, T)
  double r;  // nonzero weight
};

struct DeltaTrain {
  std::vector<DeltaAtom> atoms;

  // checks: nonempty, strictly increasing locations inside (0, horizon),
  // nonzero weights; throws std::invalid_argument
  void validate(double horizon) const;
};

// Temporal source factor mu: an L2 grid part, an atomic part, or both.
struct TemporalSource {
  std::optional<GridFunction> regular;
  std::optional<DeltaTrain> atoms;

  bool is_pure_atomic() const { return atoms && !regular; }
  bool is_pure_regular() const { return regular && !atoms; }
  void validate(double horizon) const;  // variant-specific invariants
};

// Exponents of the fractional model: equation order alpha, transform order
// beta, optional fractional operator power theta.
struct FracParams {
  double alpha = 0.5;
  double beta = 0.75;
  double theta = 0.0;

  // relaxed check for plain operator work: alpha, beta in (0,1)
  std::optional<std::string> check_operators() const;
  // full constraint chain for the singular pipeline:
  // alpha <= beta < 1 and beta > 1/2; returns the violated inequality
  std::optional<std::string> check_singular_chain() const;
  void require_singular_chain() const;  // throws std::invalid_argument
};

}  // namespace fracsrc
