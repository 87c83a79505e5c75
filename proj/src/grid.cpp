#include "fracsrc/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace fracsrc {

TemporalGrid::TemporalGrid(double horizon, int steps) : T(horizon), n_steps(steps) {
  if (!(T > 0.0)) throw std::invalid_argument("TemporalGrid: horizon must be positive");
  if (n_steps < 2) throw std::invalid_argument("TemporalGrid: need at least 2 nodes");
}

GridFunction::GridFunction(TemporalGrid g, Eigen::VectorXd v)
    : grid(g), values(std::move(v)) {
  if (values.size() != grid.n_steps)
    throw std::invalid_argument("GridFunction: value count does not match grid");
  if (!values.allFinite())
    throw std::invalid_argument("GridFunction: values must be finite");
}

GridFunction GridFunction::zero(const TemporalGrid& g) {
  return GridFunction(g, Eigen::VectorXd::Zero(g.n_steps));
}

double GridFunction::l2_norm() const {
  const int n = grid.n_steps;
  double s = 0.5 * (values(0) * values(0) + values(n - 1) * values(n - 1));
  for (int i = 1; i < n - 1; ++i) s += values(i) * values(i);
  return std::sqrt(s * grid.step());
}

void DeltaTrain::validate(double horizon) const {
  if (atoms.empty()) throw std::invalid_argument("DeltaTrain: needs at least one atom");
  double prev = 0.0;
  for (const auto& atom : atoms) {
    if (!(atom.a > 0.0) || !(atom.a < horizon))
      throw std::invalid_argument("DeltaTrain: atom location outside (0, T)");
    if (!(atom.a > prev) && &atom != &atoms.front())
      throw std::invalid_argument("DeltaTrain: locations must be strictly increasing");
    if (atom.r == 0.0 || !std::isfinite(atom.r))
      throw std::invalid_argument("DeltaTrain: weights must be nonzero and finite");
    prev = atom.a;
  }
}

void TemporalSource::validate(double horizon) const {
  if (!regular && !atoms)
    throw std::invalid_argument("TemporalSource: empty source");
  if (regular && !(std::abs(regular->grid.T - horizon) <= 1e-12 * horizon))
    throw std::invalid_argument("TemporalSource: regular part horizon mismatch");
  if (atoms) atoms->validate(horizon);
}

std::optional<std::string> FracParams::check_operators() const {
  if (!(alpha > 0.0 && alpha < 1.0)) return "alpha in (0,1) violated";
  if (!(beta > 0.0 && beta < 1.0)) return "beta in (0,1) violated";
  return std::nullopt;
}

std::optional<std::string> FracParams::check_singular_chain() const {
  if (!(alpha > 0.0 && alpha < 1.0)) return "alpha in (0,1) violated";
  if (!(alpha <= beta)) return "alpha <= beta violated";
  if (!(beta < 1.0)) return "beta < 1 violated";
  if (!(beta > 0.5)) return "beta > 1/2 violated";
  if (!(theta >= 0.0)) return "theta >= 0 violated";
  return std::nullopt;
}

void FracParams::require_singular_chain() const {
  if (auto msg = check_singular_chain())
    throw std::invalid_argument("FracParams: " + *msg);
}

}  // namespace fracsrc
