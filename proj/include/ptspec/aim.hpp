#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "ptspec/jet.hpp"

namespace ptspec::aim {

/// y'' = lambda0(x) y' + s0(x) y, with both coefficients supplied as Taylor
/// jets at a common point x0 for each value of the spectral parameter.
struct AimProblem {
  std::function<SeriesJet(double)> lambda0;
  std::function<SeriesJet(double)> s0;
  double x0 = 0.0;
  std::size_t max_order = 0;
};

/// Each iteration consumes one Taylor order; this keeps 8 valid orders at depth k.
constexpr std::size_t default_order(int depth) noexcept {
  return 2 * static_cast<std::size_t>(depth) + 8;
}

struct AimIterate {
  SeriesJet lambda;
  SeriesJet s;
  double delta = 0.0;  // delta_k at x0
};

/// Runs the recurrence k times and returns (lambda_k, s_k, delta_k(x0)).
/// Throws Error(depth_exceeds_order) when k > max_order and
/// Error(invalid_parameter) for k < 1.
AimIterate aim_iterate(const AimProblem& problem, double parameter, int k);

double aim_delta(const AimProblem& problem, double parameter, int k);

struct AimRoot {
  double value = 0.0;
  double residual = 0.0;
  /// |root at depth k - nearest root at depth k-1|; infinity if none was found.
  double stability_gap = std::numeric_limits<double>::infinity();
  bool converged = false;
};

struct AimScanReport {
  int k_used = 0;
  double tolerance = 0.0;
  std::vector<AimRoot> roots;  // ascending
  std::vector<std::string> warnings;

  /// False when no root was found or any root failed the stability test.
  bool converged() const noexcept;
};

struct AimScanOptions {
  std::size_t grid_points = 512;
};

/// Sign-change scan of parameter -> delta_k(x0) on a uniform grid over
/// [lo, hi], bisection of each bracket, and a depth k-1 stability check.
/// A bracket with no sign change yields an empty, unconverged report.
AimScanReport aim_eigen_scan(const AimProblem& problem, double lo, double hi, int k,
                             double tol, const AimScanOptions& options = {});

// --- Poschl-Teller problem in z = sinh(alpha r) -----------------------------

struct PtAimParams {
  double gamma = 0.0;
  double beta = 0.0;
  double alpha = 1.0;
};

/// The transformed radial equation for F(z) with the spectral parameter K1
/// (K2 = K1 + alpha^2 (gamma + beta)^2).
AimProblem make_pt_problem(const PtAimParams& params, double z0, std::size_t order);

/// z0 = sinh(alpha r_min) at the potential minimum when A < 0 < B < |A|;
/// otherwise 1 (the potential is monotone and has no interior minimum).
double pt_expansion_point(double A, double B);

/// K2 of the n-th exactly solvable level, -4 alpha^2 n (gamma + beta + n).
double pt_k2_closed_form(const PtAimParams& params, int n);
double pt_k1_closed_form(const PtAimParams& params, int n);

/// One candidate quantization value of K2 tested against delta_k.
struct DeltaPatternRow {
  int k = 0;
  /// "printed": K2 = 0 for k = 1 and -4 a^2 (gamma+beta+k-1) for k >= 2, the
  /// termination values as usually quoted; "level": K2 of level floor(k/2).
  std::string pattern;
  double K2 = 0.0;
  std::vector<double> delta;  // delta_k at each expansion point
  /// max over points of |delta_k(K2)| / |delta_k(K2 + alpha^2 / e)|.
  double relative_size = 0.0;
  bool vanishes = false;
};

/// Checks which K2 values actually terminate delta_k for k = 1..max_k at
/// several expansion points (a root must not depend on the point).
std::vector<DeltaPatternRow> pt_delta_pattern(const PtAimParams& params,
                                              const std::vector<double>& points, int max_k,
                                              double vanish_threshold = 1e-8);

}  // namespace ptspec::aim
