#pragma once

#include <cmath>
#include <cstdlib>

namespace fracsrc {

// Adaptive Gauss-Kronrod 7/15 quadrature (QUADPACK dqk15 node set) with
// recursive bisection. Deterministic: the refinement path depends only on
// the integrand values. Returns the Kronrod estimate; *err_out (optional)
// receives the accumulated local error estimates.
namespace gk {

inline constexpr double kNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
};

inline constexpr double kWeightsK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

inline constexpr double kWeightsG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

template <class F>
void kronrod15(const F& f, double a, double b, double* result, double* err) {
  const double c = 0.5 * (a + b);
  const double hw = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - hw * kNodes[i]);
    fv[14 - i] = f(c + hw * kNodes[i]);
  }
  fv[7] = f(c);
  double resk = kWeightsK[7] * fv[7];
  double resg = kWeightsG[3] * fv[7];
  for (int i = 0; i < 7; ++i) {
    resk += kWeightsK[i] * (fv[i] + fv[14 - i]);
    if (i % 2 == 1) resg += kWeightsG[i / 2] * (fv[i] + fv[14 - i]);
  }
  *result = resk * hw;
  *err = std::fabs((resk - resg) * hw);
}

template <class F>
double adapt(const F& f, double a, double b, double tol, int depth,
             double* err_acc) {
  double r, e;
  kronrod15(f, a, b, &r, &e);
  if (e <= tol || depth <= 0) {
    *err_acc += e;
    return r;
  }
  double m = 0.5 * (a + b);
  return adapt(f, a, m, 0.5 * tol, depth - 1, err_acc) +
         adapt(f, m, b, 0.5 * tol, depth - 1, err_acc);
}

}  // namespace gk

// Integrate f over [a, b] to absolute tolerance abs_tol or relative
// tolerance rel_tol (whichever is looser against a first whole-interval
// estimate). max_depth bounds the bisection recursion.
template <class F>
double integrate_adaptive(const F& f, double a, double b, double abs_tol,
                          double rel_tol, int max_depth = 28,
                          double* err_out = nullptr) {
  if (a == b) return 0.0;
  double r0, e0;
  gk::kronrod15(f, a, b, &r0, &e0);
  double tol = std::fmax(abs_tol, rel_tol * std::fabs(r0));
  double err_acc = 0.0;
  double v = gk::adapt(f, a, b, tol, max_depth, &err_acc);
  if (err_out) *err_out = err_acc;
  return v;
}

}  // namespace fracsrc
