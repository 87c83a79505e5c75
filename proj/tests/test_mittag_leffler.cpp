#include "doctest.h"

#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "fracsrc/mittag_leffler.hpp"
#include "fracsrc/quadrature.hpp"
#include "fracsrc/special_functions.hpp"
#include "reference_values.hpp"

using namespace fracsrc;

TEST_CASE("ml_eval matches the high-precision reference table") {
  for (const auto& ref : kMLReference) {
    MLParams p(ref.alpha, ref.beta);
    double v = ml_eval(p, -ref.x);
    double tol = ref.x <= 5.0 ? 1e-12 * std::fabs(ref.value) + 1e-300
                              : 1e-12 + 1e-12 * std::fabs(ref.value);
    CAPTURE(ref.alpha);
    CAPTURE(ref.beta);
    CAPTURE(ref.x);
    CHECK(std::fabs(v - ref.value) <= tol);
  }
}

TEST_CASE("ml_eval spec anchor values") {
  CHECK(ml_eval(MLParams(0.5, 1.0), 0.0) == 1.0);
  CHECK(ml_eval(MLParams(1.0, 1.0), -1.0) ==
        doctest::Approx(0.36787944117144233).epsilon(1e-14));
  CHECK(ml_eval(MLParams(0.5, 1.0), -1.0) ==
        doctest::Approx(kE_half_1_at_m1).epsilon(1e-13));
  // classical identity E_{1/2,1}(-x) = exp(x^2) erfc(x)
  for (double x : {0.3, 1.0, 1.7}) {
    double expected = std::exp(x * x) * std::erfc(x);
    CHECK(ml_eval(MLParams(0.5, 1.0), -x) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("ml_eval rejects bad input") {
  CHECK_THROWS_AS(ml_eval(MLParams(0.5, 1.0), 0.25), std::domain_error);
  CHECK_THROWS_AS(MLParams(1.5, 1.0), std::domain_error);
  CHECK_THROWS_AS(MLParams(0.5, 0.0), std::domain_error);
  CHECK_THROWS_AS(MLParams(0.0, 1.0), std::domain_error);
}

TEST_CASE("ml_eval is deterministic bit-for-bit") {
  MLParams p(0.7, 0.7);
  for (double x : {0.1, 3.0, 5.5, 80.0, 2.0e4}) {
    double a = ml_eval(p, -x);
    double b = ml_eval(p, -x);
    CHECK(a == b);
  }
}

TEST_CASE("series and integral regimes agree in the overlap band") {
  for (double alpha : {0.5, 0.6, 0.7, 0.8, 0.9}) {
    for (double beta : {1.0, alpha}) {
      for (double x = 4.0; x <= 6.0; x += 0.25) {
        auto s = detail::ml_series(alpha, beta, -x);
        REQUIRE(s.has_value());
        double i = detail::ml_integral(alpha, beta, -x);
        CAPTURE(alpha);
        CAPTURE(beta);
        CAPTURE(x);
        CHECK(std::fabs(*s - i) <= 1e-10);
      }
    }
  }
}

TEST_CASE("E_{1,1}(-x) equals exp(-x) to 1e-12 on [0,50]") {
  MLParams p(1.0, 1.0);
  for (int i = 0; i <= 500; ++i) {
    double x = 0.1 * i;
    CHECK(std::fabs(ml_eval(p, -x) - std::exp(-x)) <= 1e-12 * std::exp(-x));
  }
}

TEST_CASE("complete monotonicity samples: nonincreasing, nonnegative") {
  for (double alpha : {0.3, 0.5, 0.8, 0.95}) {
    MLParams p(alpha, 1.0);
    double prev = 1.0 + 1e-15;
    for (int k = 0; k <= 120; ++k) {
      double x = std::pow(10.0, -6.0 + 0.1 * k);  // 1e-6 .. 1e6
      double v = ml_eval(p, -x);
      CHECK(v >= 0.0);
      CHECK(v <= prev);
      prev = v;
    }
  }
}

TEST_CASE("ml_kernel values and guards") {
  CHECK(ml_kernel(0.5, 0.0, 4.0) == doctest::Approx(0.28209479177387814).epsilon(1e-13));
  CHECK(ml_kernel(1.0, 2.0, 1.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-13));
  CHECK(ml_kernel(0.5, 1.0, 1.0) == doctest::Approx(kE_half_half_at_m1).epsilon(1e-12));
  CHECK_THROWS_AS(ml_kernel(0.5, 1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(ml_kernel(0.5, 1.0, -2.0), std::domain_error);
  CHECK_THROWS_AS(ml_kernel(0.5, -1.0, 1.0), std::domain_error);
}

TEST_CASE("ml_kernel nonnegative over a wide parameter sweep") {
  for (double alpha : {0.3, 0.5, 0.8})
    for (double lambda : {0.0, 1.0, 10.0, 100.0})
      for (int k = 0; k <= 60; ++k) {
        double t = std::pow(10.0, -4.0 + 0.1 * k);
        CHECK(ml_kernel(alpha, lambda, t) >= 0.0);
      }
}

TEST_CASE("derivative identity: lambda K = -d/dt E_{alpha,1}(-lambda t^alpha)") {
  for (double alpha : {0.4, 0.6, 0.8}) {
    MLParams p(alpha, 1.0);
    for (double lambda : {1.0, 10.0}) {
      for (double t : {0.3, 1.0, 2.5}) {
        auto E = [&](double s) { return ml_eval(p, -lambda * std::pow(s, alpha)); };
        double h = 1e-4;
        double fd = -(E(t + h) - E(t - h)) / (2.0 * h);
        double lhs = lambda * ml_kernel(alpha, lambda, t);
        CHECK(lhs == doctest::Approx(fd).epsilon(5e-7));
      }
    }
  }
}

TEST_CASE("integral identity: int_0^T lambda K dt = 1 - E_{alpha,1}(-lambda T^alpha)") {
  // graded quadrature via t = u^(1/alpha): the integrand becomes analytic
  for (double alpha : {0.4, 0.75}) {
    MLParams pk(alpha, alpha);
    MLParams p1(alpha, 1.0);
    for (double lambda : {1.0, 10.0, 100.0}) {
      double T = 1.0;
      auto f = [&](double u) { return ml_eval(pk, -lambda * u); };
      double val = lambda / alpha *
                   integrate_adaptive(f, 0.0, std::pow(T, alpha), 1e-13, 1e-13);
      double expected = 1.0 - ml_eval(p1, -lambda * std::pow(T, alpha));
      CHECK(val == doctest::Approx(expected).epsilon(1e-9));
    }
  }
}

TEST_CASE("uniform decay bound E_{alpha,1}(-x) <= C/(1+x) with a single C") {
  for (double alpha : {0.3, 0.5, 0.8}) {
    MLParams p(alpha, 1.0);
    // calibrate on a coarse grid, assert on a fine one
    double C = 0.0;
    for (int k = 0; k <= 24; ++k) {
      double x = std::pow(10.0, -3.0 + 0.25 * k);
      C = std::fmax(C, ml_eval(p, -x) * (1.0 + x));
    }
    for (int k = 0; k <= 240; ++k) {
      double x = std::pow(10.0, -3.0 + 0.025 * k);
      CHECK(ml_eval(p, -x) <= 1.02 * C / (1.0 + x));
    }
  }
}

TEST_CASE("ml_asymptotic_leading: closed form and long-time accuracy") {
  CHECK(ml_asymptotic_leading(0.5, 1.0, 1.0) ==
        doctest::Approx(0.5641895835477563).epsilon(1e-14));
  CHECK(ml_asymptotic_leading(0.5, 4.0, 1.0) ==
        doctest::Approx(0.14104739588693908).epsilon(1e-14));
  CHECK_THROWS_AS(ml_asymptotic_leading(0.5, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(ml_asymptotic_leading(0.5, 1.0, -1.0), std::domain_error);

  // calibrate the second-order constant on a sweep, then check the claim
  double alpha = 0.3, rho = 10.0;
  MLParams p(alpha, 1.0);
  double C = 0.0;
  for (double t : {10.0, 100.0, 1000.0, 10000.0}) {
    double resid = std::fabs(ml_eval(p, -rho * std::pow(t, alpha)) -
                             ml_asymptotic_leading(alpha, rho, t));
    C = std::fmax(C, resid * rho * rho * std::pow(t, 2.0 * alpha));
  }
  for (double t : {20.0, 300.0, 5000.0}) {
    double resid = std::fabs(ml_eval(p, -rho * std::pow(t, alpha)) -
                             ml_asymptotic_leading(alpha, rho, t));
    CHECK(resid <= 1.05 * C / (rho * rho * std::pow(t, 2.0 * alpha)));
  }
}
