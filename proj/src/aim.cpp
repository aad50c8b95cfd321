#include "ptspec/aim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ptspec/error.hpp"

namespace ptspec::aim {

bool AimScanReport::converged() const noexcept {
  return !roots.empty() &&
         std::all_of(roots.begin(), roots.end(), [](const AimRoot& r) { return r.converged; });
}

AimIterate aim_iterate(const AimProblem& problem, double parameter, int k) {
  if (k < 1) throw Error(ErrorKind::invalid_parameter, "aim_iterate: k must be >= 1");
  if (static_cast<std::size_t>(k) > problem.max_order) {
    throw Error(ErrorKind::depth_exceeds_order,
                "aim_iterate: depth " + std::to_string(k) + " exceeds Taylor order " +
                    std::to_string(problem.max_order));
  }
  const SeriesJet lambda0 = problem.lambda0(parameter);
  const SeriesJet s0 = problem.s0(parameter);
  if (lambda0.order() != problem.max_order || s0.order() != problem.max_order ||
      lambda0.x0() != problem.x0 || s0.x0() != problem.x0) {
    throw Error(ErrorKind::mismatch, "aim_iterate: coefficient jets disagree with the problem");
  }

  SeriesJet lambda_prev = lambda0;
  SeriesJet s_prev = s0;
  SeriesJet lambda = lambda0;
  SeriesJet s = s0;
  for (int j = 1; j <= k; ++j) {
    lambda = jet_differentiate(lambda_prev) + s_prev + lambda0 * lambda_prev;
    s = jet_differentiate(s_prev) + s0 * lambda_prev;
    if (j < k) {
      lambda_prev = lambda;
      s_prev = s;
    }
  }
  const double delta = lambda.value() * s_prev.value() - lambda_prev.value() * s.value();
  return AimIterate{std::move(lambda), std::move(s), delta};
}

double aim_delta(const AimProblem& problem, double parameter, int k) {
  return aim_iterate(problem, parameter, k).delta;
}

namespace {

int sign_of(double v) { return (v > 0) - (v < 0); }

double bisect(const AimProblem& problem, int k, double a, double fa, double b, double tol) {
  for (int it = 0; it < 200 && (b - a) > tol; ++it) {
    const double m = 0.5 * (a + b);
    const double fm = aim_delta(problem, m, k);
    if (fm == 0.0) return m;
    if (sign_of(fm) == sign_of(fa)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

struct Bracket {
  std::size_t cell;  // sign change between grid[cell] and grid[cell+1]
  double root;
};

std::vector<Bracket> scan_depth(const AimProblem& problem, const std::vector<double>& grid,
                                int k, double tol, std::vector<std::string>* warnings) {
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = aim_delta(problem, grid[i], k);

  std::vector<Bracket> out;
  std::size_t last_cell = grid.size();
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const int sa = sign_of(values[i]);
    const int sb = sign_of(values[i + 1]);
    if (sa == 0) {
      out.push_back({i, grid[i]});
    } else if (sb != 0 && sa != sb) {
      if (warnings && last_cell + 1 == i) {
        warnings->push_back("adjacent grid cells " + std::to_string(i - 1) + " and " +
                            std::to_string(i) +
                            " both change sign; scan grid may be too coarse");
      }
      last_cell = i;
      out.push_back({i, bisect(problem, k, grid[i], values[i], grid[i + 1], tol)});
    }
  }
  if (sign_of(values.back()) == 0) out.push_back({grid.size() - 1, grid.back()});
  return out;
}

}  // namespace

AimScanReport aim_eigen_scan(const AimProblem& problem, double lo, double hi, int k,
                             double tol, const AimScanOptions& options) {
  if (!(lo < hi)) throw Error(ErrorKind::invalid_parameter, "aim_eigen_scan: need lo < hi");
  if (k < 2) throw Error(ErrorKind::invalid_parameter, "aim_eigen_scan: need k >= 2");
  if (!(tol > 0)) throw Error(ErrorKind::invalid_parameter, "aim_eigen_scan: tol must be > 0");
  const std::size_t npts = std::max<std::size_t>(options.grid_points, 2);

  std::vector<double> grid(npts);
  for (std::size_t i = 0; i < npts; ++i) {
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(npts - 1);
  }

  AimScanReport report;
  report.k_used = k;
  report.tolerance = tol;
  const double refine_tol = 0.1 * tol;
  const auto at_k = scan_depth(problem, grid, k, refine_tol, &report.warnings);
  if (at_k.empty()) {
    report.warnings.push_back("no sign change of delta_k on the bracket");
    return report;
  }
  const auto at_km1 = scan_depth(problem, grid, k - 1, refine_tol, nullptr);

  for (const auto& b : at_k) {
    AimRoot root;
    root.value = b.root;
    root.residual = aim_delta(problem, b.root, k);
    for (const auto& c : at_km1) {
      const std::size_t lo_cell = b.cell >= 2 ? b.cell - 2 : 0;
      if (c.cell < lo_cell || c.cell > b.cell + 2) continue;
      root.stability_gap = std::min(root.stability_gap, std::abs(c.root - b.root));
    }
    root.converged = root.stability_gap <= tol;
    report.roots.push_back(root);
  }
  return report;
}

AimProblem make_pt_problem(const PtAimParams& params, double z0, std::size_t order) {
  const auto [gamma, beta, alpha] = params;
  const SeriesJet z = SeriesJet::variable(z0, order);
  const SeriesJet one = SeriesJet::constant(z0, order, 1.0);
  const SeriesJet z2 = z * z;
  // F'' = -[(2g+1) z^2 + 2b (z^2+1)] / (z (z^2+1)) F' - K2 / (alpha^2 (1+z^2)) F
  const SeriesJet numerator = (2.0 * gamma + 2.0 * beta + 1.0) * z2 + SeriesJet::constant(z0, order, 2.0 * beta);
  const SeriesJet lambda0 = jet_scale(numerator / (z * (z2 + one)), -1.0);
  const SeriesJet inv_1pz2 = one / (one + z2);
  const double shift = alpha * alpha * (gamma + beta) * (gamma + beta);
  const double a2 = alpha * alpha;

  AimProblem problem;
  problem.x0 = z0;
  problem.max_order = order;
  problem.lambda0 = [lambda0](double) { return lambda0; };
  problem.s0 = [inv_1pz2, shift, a2](double k1) {
    return jet_scale(inv_1pz2, -(k1 + shift) / a2);
  };
  return problem;
}

double pt_expansion_point(double A, double B) {
  if (A < 0.0 && B > 0.0 && B < -A) {
    const double t = std::pow(B / -A, 0.25);  // tanh(alpha r_min)
    return t / std::sqrt(1.0 - t * t);
  }
  return 1.0;
}

double pt_k2_closed_form(const PtAimParams& p, int n) {
  return -4.0 * p.alpha * p.alpha * n * (p.gamma + p.beta + n);
}

double pt_k1_closed_form(const PtAimParams& p, int n) {
  const double s = p.gamma + p.beta + 2.0 * n;
  return -p.alpha * p.alpha * s * s;
}

std::vector<DeltaPatternRow> pt_delta_pattern(const PtAimParams& params,
                                              const std::vector<double>& points, int max_k,
                                              double vanish_threshold) {
  if (points.empty()) throw Error(ErrorKind::invalid_parameter, "pt_delta_pattern: no points");
  const double a2 = params.alpha * params.alpha;
  const double s = params.gamma + params.beta;
  const double offset = a2 / std::numbers::e;
  std::vector<DeltaPatternRow> rows;
  for (int k = 1; k <= max_k; ++k) {
    const double printed = k == 1 ? 0.0 : -4.0 * a2 * (s + k - 1);
    const double level = pt_k2_closed_form(params, k / 2);
    for (const auto& [name, K2] : {std::pair<const char*, double>{"printed", printed},
                                   std::pair<const char*, double>{"level", level}}) {
      DeltaPatternRow row;
      row.k = k;
      row.pattern = name;
      row.K2 = K2;
      for (double z0 : points) {
        const AimProblem problem = make_pt_problem(params, z0, default_order(k));
        const double d = aim_delta(problem, K2 - a2 * s * s, k);
        const double reference = aim_delta(problem, K2 + offset - a2 * s * s, k);
        row.delta.push_back(d);
        const double ratio = reference == 0.0 ? std::abs(d) : std::abs(d / reference);
        row.relative_size = std::max(row.relative_size, ratio);
      }
      row.vanishes = row.relative_size <= vanish_threshold;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace ptspec::aim
