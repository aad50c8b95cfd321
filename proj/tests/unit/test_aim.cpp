#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ptspec/aim.hpp"
#include "ptspec/error.hpp"
#include "ptspec/jet.hpp"

using namespace ptspec;
using namespace ptspec::aim;

namespace {

PtAimParams pt_params(double A1, double B1, double alpha) {
  const double a2 = alpha * alpha;
  return {0.5 * (1.0 + std::sqrt(1.0 - 4.0 * A1 / a2)), 0.5 * (1.0 - std::sqrt(1.0 + 4.0 * B1 / a2)),
          alpha};
}

double k1_from_k2(const PtAimParams& p, double K2) {
  const double s = p.gamma + p.beta;
  return K2 - p.alpha * p.alpha * s * s;
}

}  // namespace

TEST_CASE("jet identities") {
  const double x0 = 0.7;
  const SeriesJet one = SeriesJet::constant(x0, 6, 1.0);
  const SeriesJet u = SeriesJet::variable(x0, 6) - SeriesJet::constant(x0, 6, x0);
  const SeriesJet j(x0, std::vector<double>{1.5, -2.0, 0.25, 3.0, 0.0, 1.0, -1.0});
  const SeriesJet prod = one * j;
  for (std::size_t i = 0; i <= 6; ++i) CHECK(prod[i] == j[i]);

  const SeriesJet d = jet_differentiate(u);
  CHECK(d[0] == 1.0);
  for (std::size_t i = 1; i <= 6; ++i) CHECK(d[i] == 0.0);

  const SeriesJet sq = (one + u) * (one - u);
  CHECK(sq[0] == 1.0);
  CHECK(sq[1] == 0.0);
  CHECK(sq[2] == -1.0);
  for (std::size_t i = 3; i <= 6; ++i) CHECK(sq[i] == 0.0);
}

TEST_CASE("jet mismatch and division errors") {
  const SeriesJet a = SeriesJet::constant(0.0, 4, 1.0);
  const SeriesJet b = SeriesJet::constant(0.5, 4, 1.0);
  const SeriesJet c = SeriesJet::constant(0.0, 5, 1.0);
  CHECK_THROWS_AS(a + b, Error);
  CHECK_THROWS_AS(a * c, Error);
  CHECK_THROWS_AS(a / SeriesJet::constant(0.0, 4, 0.0), Error);
  const SeriesJet q = SeriesJet::constant(0.0, 4, 1.0) / (a + SeriesJet::variable(0.0, 4));
  // 1/(1+x) = 1 - x + x^2 - ...
  for (std::size_t i = 0; i <= 4; ++i) CHECK(q[i] == doctest::Approx(i % 2 ? -1.0 : 1.0));
}

TEST_CASE("aim_iterate depth limits") {
  const auto p = make_pt_problem(pt_params(-20.0, 2.0, 1.0), 1.0, 6);
  CHECK_THROWS_AS(aim_iterate(p, -10.0, 0), Error);
  try {
    (void)aim_iterate(p, -10.0, 7);
    FAIL("expected depth error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::depth_exceeds_order);
  }
}

TEST_CASE("s0 identically zero keeps every delta at zero") {
  AimProblem p;
  p.x0 = 0.3;
  p.max_order = 12;
  p.lambda0 = [](double E) {
    return SeriesJet(0.3, std::vector<double>{E, 1.0, 0.5, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  };
  p.s0 = [](double) { return SeriesJet::constant(0.3, 12, 0.0); };
  for (int k = 1; k <= 4; ++k) CHECK(aim_delta(p, 1.7, k) == 0.0);
}

TEST_CASE("PT problem: first termination values") {
  const PtAimParams params = pt_params(-20.0, 2.0, 1.0);
  const double z0 = pt_expansion_point(-20.0, 2.0);
  const auto p = make_pt_problem(params, z0, default_order(6));
  const double scale = std::abs(aim_delta(p, k1_from_k2(params, 1.0), 1));
  CHECK(std::abs(aim_delta(p, k1_from_k2(params, 0.0), 1)) <= 1e-9 * scale);
  const double k2_level1 = -4.0 * (params.gamma + params.beta + 1.0);
  const double scale2 = std::abs(aim_delta(p, k1_from_k2(params, k2_level1 + 1.0), 2));
  CHECK(std::abs(aim_delta(p, k1_from_k2(params, k2_level1), 2)) <= 1e-9 * scale2);
}

TEST_CASE("scan finds the lowest levels and reports stability") {
  const PtAimParams params = pt_params(-30.0, 1.5, 1.0);
  const auto p = make_pt_problem(params, pt_expansion_point(-30.0, 1.5), default_order(8));
  const double lowest = pt_k1_closed_form(params, 0);
  const double top = pt_k1_closed_form(params, 3);
  const auto report = aim_eigen_scan(p, top - 3.0, lowest + 3.0, 8, 1e-9);
  REQUIRE(report.roots.size() >= 4);
  // spurious roots can appear between levels; they drift with depth
  for (int n = 0; n < 4; ++n) {
    const double expected = pt_k1_closed_form(params, n);
    const AimRoot* best = nullptr;
    for (const auto& r : report.roots) {
      if (!best || std::abs(r.value - expected) < std::abs(best->value - expected)) best = &r;
    }
    CHECK(std::abs(best->value - expected) / std::abs(expected) < 1e-8);
    CHECK(best->stability_gap <= 1e-8 * std::abs(expected));
  }
  for (const auto& r : report.roots) {
    bool physical = false;
    for (int n = 0; n < 4; ++n) {
      physical = physical || std::abs(r.value - pt_k1_closed_form(params, n)) < 1e-6;
    }
    if (!physical) CHECK(r.stability_gap > 1e-3);
  }
  CHECK_FALSE(report.converged());
}

TEST_CASE("empty bracket gives an empty unconverged report") {
  const PtAimParams params = pt_params(-30.0, 1.5, 1.0);
  const auto p = make_pt_problem(params, 1.0, default_order(6));
  const double k0 = pt_k1_closed_form(params, 0);
  const auto report = aim_eigen_scan(p, k0 + 1.0, k0 + 2.0, 6, 1e-9);
  CHECK(report.roots.empty());
  CHECK_FALSE(report.converged());
  CHECK_THROWS_AS(aim_eigen_scan(p, 1.0, 0.0, 6, 1e-9), Error);
  CHECK_THROWS_AS(aim_eigen_scan(p, 0.0, 1.0, 1, 1e-9), Error);
}

TEST_CASE("depth consistency of roots") {
  const PtAimParams params = pt_params(-25.0, 3.0, 0.8);
  const double tol = 1e-10;
  const double k1 = pt_k1_closed_form(params, 1);
  const auto p6 = make_pt_problem(params, 1.0, default_order(7));
  const auto r6 = aim_eigen_scan(p6, k1 - 1.0, k1 + 1.0, 6, tol);
  const auto r7 = aim_eigen_scan(p6, k1 - 1.0, k1 + 1.0, 7, tol);
  REQUIRE(r6.roots.size() == 1);
  REQUIRE(r7.roots.size() == 1);
  CHECK(std::abs(r6.roots[0].value - r7.roots[0].value) <= 10.0 * tol * std::abs(k1));
}

TEST_CASE("roots invariant under the rescaling x -> c x of the equation") {
  // y(x) -> y(c x) maps lambda0(x) -> c lambda0(c x) and s0(x) -> c^2 s0(c x).
  const PtAimParams params = pt_params(-25.0, 3.0, 0.8);
  const auto base = make_pt_problem(params, 1.2, default_order(6));
  const double c = 2.5;
  AimProblem scaled;
  scaled.x0 = base.x0 / c;
  scaled.max_order = base.max_order;
  auto rescale = [c](const SeriesJet& j, double factor) {
    std::vector<double> coeffs(j.coeffs().begin(), j.coeffs().end());
    double power = factor;
    for (double& v : coeffs) {
      v *= power;
      power *= c;
    }
    return SeriesJet(j.x0() / c, coeffs);
  };
  scaled.lambda0 = [&](double E) { return rescale(base.lambda0(E), c); };
  scaled.s0 = [&](double E) { return rescale(base.s0(E), c * c); };
  const double k1 = pt_k1_closed_form(params, 1);
  const auto a = aim_eigen_scan(base, k1 - 1.0, k1 + 1.0, 6, 1e-11);
  const auto b = aim_eigen_scan(scaled, k1 - 1.0, k1 + 1.0, 6, 1e-11);
  REQUIRE(a.roots.size() == 1);
  REQUIRE(b.roots.size() == 1);
  CHECK(std::abs(a.roots[0].value - b.roots[0].value) < 1e-9 * std::abs(k1));
}

TEST_CASE("termination pattern: quoted delta_3/delta_4 values fail, level values vanish") {
  const PtAimParams params = pt_params(-20.0, 2.0, 1.0);
  const auto rows = pt_delta_pattern(params, {0.7, 1.6}, 4);
  for (const auto& r : rows) {
    if (r.pattern == "level") CHECK(r.vanishes);
    if (r.pattern == "printed") CHECK(r.vanishes == (r.k <= 2));
  }
  // The level values follow K2(n) = -4 alpha^2 n (gamma + beta + n) for n = 1..4.
  const auto p = make_pt_problem(params, 1.1, default_order(8));
  for (int n = 1; n <= 4; ++n) {
    const double K2 = -4.0 * n * (params.gamma + params.beta + n);
    const double d = aim_delta(p, k1_from_k2(params, K2), 2 * n);
    const double ref = aim_delta(p, k1_from_k2(params, K2 + 0.3), 2 * n);
    CHECK(std::abs(d / ref) < 1e-8);
  }
}
