#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ptspec/error.hpp"
#include "ptspec/oracle.hpp"

using namespace ptspec;
using namespace ptspec::oracle;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// K1 of the regular solution of u'' = [A1 sech^2 + B1 csch^2 - K1] u.
double pt_regular_level(double A1, double B1, double alpha, int n) {
  const double a2 = alpha * alpha;
  const double b = n + 0.5 + 0.25 * std::sqrt(1.0 + 4.0 * B1 / a2) -
                   0.25 * std::sqrt(1.0 - 4.0 * A1 / a2);
  return -4.0 * a2 * b * b;
}

}  // namespace

TEST_CASE("quadrature on smooth, endpoint-singular and infinite ranges") {
  CHECK(rel(quadrature([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 1e-14), 2.0) <
        1e-13);
  CHECK(rel(quadrature([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-13), 2.0 / 3.0) <
        1e-12);
  CHECK(rel(quadrature_to_infinity([](double x) { return std::exp(-x); }, 0.0, 1e-13), 1.0) <
        1e-12);
  CHECK(rel(quadrature_to_infinity([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 1e-13),
            0.5 * std::numbers::pi) < 1e-12);
  CHECK(quadrature([](double) { return 1.0; }, 2.0, 2.0, 1e-12) == 0.0);
}

TEST_CASE("quadrature reports non-convergence with its best estimate") {
  QuadratureOptions tight;
  tight.max_intervals = 8;
  try {
    (void)quadrature([](double x) { return std::sin(1.0 / x) / x; }, 1e-4, 1.0, 1e-14, tight);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.kind() == ErrorKind::no_convergence);
    CHECK(std::isfinite(e.best_estimate()));
    CHECK(e.error_estimate() > 0.0);
  }
}

TEST_CASE("finite differences") {
  auto f = [](double x) { return std::sin(x); };
  const auto d1 = finite_difference(f, 1.0, 1, 0.1);
  const auto d2 = finite_difference(f, 1.0, 2, 0.1);
  CHECK(std::abs(d1.value - std::cos(1.0)) < 1e-12);
  CHECK(std::abs(d2.value + std::sin(1.0)) < 1e-9);
  CHECK(d1.error < 1e-10);
  CHECK_THROWS_AS(finite_difference(f, 1.0, 3, 0.1), Error);
  CHECK_THROWS_AS(finite_difference(f, 1.0, 1, 0.0), Error);
}

TEST_CASE("shooting: odd harmonic-oscillator states") {
  RadialProblem p;
  p.potential = [](double r) { return r * r; };
  p.r_max = 10.0;
  for (int n = 0; n < 3; ++n) {
    const auto res = shoot_eigenvalue(p, n, 0.0, 20.0, 1e-10);
    CHECK(rel(res.E, 4.0 * n + 3.0) < 1e-9);
    CHECK(res.nodes == n);
  }
}

TEST_CASE("shooting: regular Poschl-Teller levels") {
  const double A1 = -60.0;
  const double B1 = 2.0;
  const double alpha = 1.0;
  const RadialProblem p = pt_radial_problem(A1, B1, alpha, 30.0);
  const double bottom = pt_regular_level(A1, B1, alpha, 0) - 5.0;
  for (int n = 0; n < 3; ++n) {
    const auto res = shoot_eigenvalue(p, n, bottom, -1e-3, 1e-10);
    CHECK(rel(res.E, pt_regular_level(A1, B1, alpha, n)) < 1e-9);
    CHECK(res.error_estimate <= 1e-9 * std::abs(res.E));
  }
}

TEST_CASE("raw radial problem with l = 0 matches the approximated one") {
  const RadialProblem a = pt_radial_problem(-40.0, 1.2, 0.9, 30.0);
  const RadialProblem b = pt_raw_radial_problem(-40.0, 1.2, 0.9, 0, 30.0);
  const auto ra = shoot_eigenvalue(a, 1, -60.0, -1e-3, 1e-10);
  const auto rb = shoot_eigenvalue(b, 1, -60.0, -1e-3, 1e-10);
  CHECK(rel(ra.E, rb.E) < 1e-9);
}

TEST_CASE("shooting reports a bracket that misses the level") {
  const RadialProblem p = pt_radial_problem(-60.0, 2.0, 1.0, 30.0);
  const double e0 = pt_regular_level(-60.0, 2.0, 1.0, 0);
  try {
    (void)shoot_eigenvalue(p, 2, e0 - 1.0, e0 + 1.0, 1e-10);
    FAIL("expected node_count_mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::node_count_mismatch);
  }
}
