// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: ptspec_acceptance <path-to-ptspec-cli> <source-dir>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ptspec/aim.hpp"
#include "ptspec/dirac.hpp"
#include "ptspec/error.hpp"
#include "ptspec/molecules.hpp"
#include "ptspec/oracle.hpp"
#include "ptspec/schrodinger.hpp"
#include "ptspec/specfun.hpp"
#include "ptspec/table2.hpp"
#include "ptspec/thermo.hpp"

namespace fs = std::filesystem;
using namespace ptspec;

namespace {

// Pinned tolerances.
constexpr double kAimRelTol = 1e-8;
constexpr double kAimMaxSeconds = 60.0;
constexpr double kShootRelTol = 1e-6;
constexpr double kReductionTol = 1e-12;
constexpr double kNrLimitTol = 1e-12;
constexpr double kMinConvergenceOrder = 1.0;
constexpr double kClassicalSumTol = 0.02;
constexpr double kUFdTol = 1e-6;
constexpr double kCFdTol = 1e-5;
constexpr double kIdentityTol = 1e-8;
constexpr double kLimitTol = 0.01;
constexpr double kDawsonIdentityTol = 1e-12;
constexpr double kQuadratureRefTol = 1e-10;
constexpr double kHyp2f1Tol = 1e-13;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

int run(const std::string& command) { return std::system((command + " >/dev/null 2>&1").c_str()); }

// --- 1 --------------------------------------------------------------------

Outcome aim_vs_closed_form() {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(20240611u);
  std::uniform_real_distribution<double> well(-40.0, -5.0);
  std::uniform_real_distribution<double> core(0.5, 6.0);
  std::uniform_real_distribution<double> range(0.5, 2.0);
  constexpr int kDepth = 10;
  double worst = 0.0;
  int matched = 0;
  for (int set = 0; set < 10; ++set) {
    const double alpha = range(rng);
    const double a2 = alpha * alpha;
    const double A1 = well(rng) * a2;
    const double B1 = core(rng) * a2;
    const aim::PtAimParams params{0.5 * (1.0 + std::sqrt(1.0 - 4.0 * A1 / a2)),
                                  0.5 * (1.0 - std::sqrt(1.0 + 4.0 * B1 / a2)), alpha};
    std::array<double, 4> levels{};
    for (int n = 0; n < 4; ++n) levels[n] = aim::pt_k1_closed_form(params, n);
    std::array<double, 4> sorted = levels;
    std::sort(sorted.begin(), sorted.end());
    double gap = sorted[3] - sorted[0];
    for (int i = 1; i < 4; ++i) gap = std::min(gap, sorted[i] - sorted[i - 1]);
    const auto problem = aim::make_pt_problem(params, aim::pt_expansion_point(A1, B1),
                                              aim::default_order(kDepth));
    aim::AimScanOptions opts;
    opts.grid_points = 2048;
    const auto report = aim::aim_eigen_scan(problem, sorted[0] - 0.5 * gap, sorted[3] + 0.5 * gap,
                                            kDepth, 1e-13, opts);
    for (double expected : levels) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& r : report.roots) best = std::min(best, std::abs(r.value - expected));
      const double err = best / std::max(std::abs(expected), a2);
      worst = std::max(worst, err);
      if (err <= kAimRelTol) ++matched;
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  // Which termination values make delta_k vanish.
  const aim::PtAimParams probe{0.5 * (1.0 + std::sqrt(81.0)), 0.5 * (1.0 - std::sqrt(9.0)), 1.0};
  const auto rows = aim::pt_delta_pattern(probe, {0.7, 1.6}, 4);
  bool level_ok = true;
  bool printed_fails_beyond_2 = true;
  for (const auto& r : rows) {
    if (r.pattern == "level") level_ok = level_ok && r.vanishes;
    if (r.pattern == "printed" && r.k >= 3) printed_fails_beyond_2 = printed_fails_beyond_2 && !r.vanishes;
  }
  out.pass = matched == 40 && seconds < kAimMaxSeconds && level_ok;
  out.detail = std::to_string(matched) + "/40 levels within " + sci(kAimRelTol) + " (max " +
               sci(worst) + "), " + sci(seconds) + " s; delta pattern: " +
               (level_ok ? "K2 = -4a^2 n(g+b+n), n = floor(k/2) confirmed" : "level pattern NOT confirmed") +
               (printed_fails_beyond_2 ? ", quoted delta3/delta4 values do not terminate" : "");
  return out;
}

// --- 2 --------------------------------------------------------------------

Outcome shooting_oracle() {
  Outcome out;
  std::mt19937 rng(7u);
  std::uniform_real_distribution<double> well(-80.0, -60.0);
  std::uniform_real_distribution<double> core(0.5, 4.0);
  std::uniform_real_distribution<double> range(0.6, 1.6);
  double worst = 0.0;
  double irregular_gap = 0.0;
  int matched = 0;
  int total = 0;
  for (int set = 0; set < 5; ++set) {
    const double alpha = range(rng);
    const double a2 = alpha * alpha;
    const double A1 = well(rng) * a2;
    const double B1 = core(rng) * a2;
    // hbar = 1, 2 mu = 1 so A1, B1 are the potential strengths
    const PTPotential pot{A1, B1, alpha};
    const NRContext ctx{0.5, 1.0, kD0};
    const auto problem = oracle::pt_radial_problem(A1, B1, alpha, 30.0 / alpha);
    for (int n = 0; n < 3; ++n) {
      ++total;
      const double closed = energy_nr(pot, ctx, n, 0, Branch::regular).E;
      const double irregular = energy_nr(pot, ctx, n, 0, Branch::irregular).E;
      try {
        const auto res = oracle::shoot_eigenvalue(problem, n, A1, -1e-6 * a2, 1e-10);
        const double err = std::abs(res.E - closed) / std::abs(closed);
        worst = std::max(worst, err);
        if (err <= kShootRelTol) ++matched;
        irregular_gap = std::max(irregular_gap, std::abs(irregular - res.E) / std::abs(res.E));
      } catch (const Error& e) {
        out.detail += std::string(" [set ") + std::to_string(set) + " n=" + std::to_string(n) +
                      ": " + e.what() + "]";
      }
    }
  }
  out.pass = matched == total;
  out.detail = std::to_string(matched) + "/" + std::to_string(total) +
               " regular-branch levels within " + sci(kShootRelTol) + " (max " + sci(worst) +
               "); irregular-branch closed form deviates from the shooting levels by up to " +
               sci(irregular_gap) + " (relative)" + out.detail;
  return out;
}

// --- 3 --------------------------------------------------------------------

Outcome dirac_reductions() {
  Outcome out;
  const SpecialCase kinds[] = {SpecialCase::swave_pspin,          SpecialCase::swave_spin,
                               SpecialCase::reflectionless_pspin, SpecialCase::reflectionless_spin,
                               SpecialCase::hyperbolic_mpt_pspin, SpecialCase::hyperbolic_mpt_spin};
  const SpecialCaseParams sets[] = {{10.0, 1.0, -2.0, 3.0, 1.0, 0},
                                    {8.0, 0.7, -1.5, 0.5, 2.0, 1},
                                    {6.0, 1.3, -4.0, 1.0, 1.5, 2},
                                    {25.0, 2.0, -0.5, 6.0, 0.3, 3}};
  constexpr int kGrid = 4001;
  double worst = 0.0;
  long compared = 0;
  long domain_mismatch = 0;
  for (const auto kind : kinds) {
    for (const auto& p : sets) {
      const auto sub = special_case_substitution(kind, p);
      for (int i = 0; i < kGrid; ++i) {
        const double E = -1.5 * p.M + 3.0 * p.M * i / (kGrid - 1);
        const auto reduced = special_case_residual(kind, E, p);
        const auto general = dirac_residual(sub.symmetry, E, sub.ctx, sub.pot, sub.n);
        if (reduced.has_value() != general.has_value()) {
          ++domain_mismatch;
          continue;
        }
        if (!reduced) continue;
        ++compared;
        const double scale = std::max({1.0, std::abs(p.M * p.M - E * E), std::abs(*reduced)});
        worst = std::max(worst, std::abs(*reduced - *general) / scale);
      }
    }
  }
  // spin(E; A, B, kappa, Cs) = pspin(-E; -A, -B, kappa + 1, -Cs)
  double worst_map = 0.0;
  long map_compared = 0;
  for (int kappa : {-3, -2, 1, 2, 4}) {
    for (const PTPotential pot : {PTPotential{-2.0, 3.0, 1.0}, PTPotential{-7.0, 0.4, 0.6}}) {
      DiracContext spin;
      spin.M = 5.0;
      spin.kappa = kappa;
      spin.Cs = 0.3;
      DiracContext pspin = spin;
      pspin.kappa = kappa + 1;
      pspin.Cps = -0.3;
      const PTPotential mirrored{-pot.A, -pot.B, pot.alpha};
      for (int i = 0; i < kGrid; ++i) {
        const double E = -12.0 + 24.0 * i / (kGrid - 1);
        const auto a = spin_residual(E, spin, pot, 1);
        const auto b = pspin_residual(-E, pspin, mirrored, 1);
        if (a.has_value() != b.has_value()) {
          ++domain_mismatch;
          continue;
        }
        if (!a) continue;
        ++map_compared;
        worst_map = std::max(worst_map, std::abs(*a - *b) / std::max(1.0, std::abs(*a)));
      }
    }
  }
  out.pass = worst <= kReductionTol && worst_map <= kReductionTol && domain_mismatch == 0 &&
             compared > 0 && map_compared > 0;
  out.detail = "6 reductions x 4 sets, " + std::to_string(compared) + " points: max " +
               sci(worst) + "; parameter map " + std::to_string(map_compared) + " points: max " +
               sci(worst_map) + "; domain mismatches " + std::to_string(domain_mismatch);
  return out;
}

// --- 4 --------------------------------------------------------------------

Outcome nonrelativistic_limit() {
  Outcome out;
  double worst = 0.0;
  for (const PTPotential pot :
       {PTPotential{-20.0, 1.5, 0.9}, PTPotential{-8.0, 0.2, 1.4}, PTPotential{-60.0, 4.0, 0.5}}) {
    for (double mu : {0.5, 3.5, 40.0}) {
      const NRContext ctx{mu, 1.0, kD0};
      for (int l = 0; l <= 3; ++l) {
        for (int n = 0; n <= 2; ++n) {
          const double a = nr_limit(pot, mu, n, l);
          const double b = energy_nr(pot, ctx, n, l, Branch::irregular).E;
          worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
        }
      }
    }
  }

  // Large M: binding energy E - M of the spin equation against the limit with mu = M.
  const PTPotential pot{-20.0, 1.5, 1.0};
  const double masses[] = {1e4, 1e5};
  double errs[2] = {0.0, 0.0};
  bool found = true;
  for (int i = 0; i < 2; ++i) {
    DiracContext ctx;
    ctx.M = masses[i];
    ctx.kappa = -1;
    const double target = nr_energy_general(pot, masses[i], 0, 0);
    const auto roots = solve_spin_binding(ctx, pot, 0, 2.0 * target, 0.5 * target, 1e-15);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& r : roots) {
      if (!r.excluded) best = std::min(best, std::abs(r.E - target));
    }
    found = found && std::isfinite(best);
    errs[i] = best / std::abs(target);
  }
  const double order = std::log10(errs[0] / errs[1]);
  out.pass = worst <= kNrLimitTol && found && order >= kMinConvergenceOrder;
  out.detail = "limit vs Schrodinger closed form: max " + sci(worst) +
               "; large-M relative error " + sci(errs[0]) + " (M=1e4) -> " + sci(errs[1]) +
               " (M=1e5), observed order " + sci(order);
  return out;
}

// --- 5 --------------------------------------------------------------------

Outcome thermodynamics() {
  Outcome out;
  const double tau = 1.0;
  const double zetas[] = {1.0, 5.0, 10.0, 20.0, 50.0, 60.0, 80.0, 100.0};
  std::vector<double> betas(64);
  for (int i = 0; i < 64; ++i) betas[i] = std::pow(10.0, -4.0 + 4.0 * i / 63.0);

  double sum_worst = 0.0;
  int sum_points = 0;
  double sum_worst_zeta = 0.0;
  double u_worst = 0.0;
  double c_worst = 0.0;
  double s_worst = 0.0;
  double f_worst = 0.0;
  for (double zeta : zetas) {
    const ThermoContext ctx{zeta, tau, 1.0, 0.0};
    auto lnZ = [&](double b) { return log_partition_closed(ctx, b); };
    auto U = [&](double b) { return mean_energy(ctx, b); };
    for (double beta : betas) {
      const double chi = thermo_chi(ctx, beta);
      if (zeta >= 50.0 && chi <= 1.0) {
        ++sum_points;
        const double closed = partition_closed(ctx, beta);
        const double dev = std::abs(partition_sum(ctx, beta) - closed) / closed;
        if (dev > sum_worst) {
          sum_worst = dev;
          sum_worst_zeta = zeta;
        }
      }
      const double h = 0.05 * beta;
      const double u = U(beta);
      const double u_fd = -oracle::finite_difference(lnZ, beta, 1, h).value;
      u_worst = std::max(u_worst, std::abs(u - u_fd) / std::abs(u));
      const double c = specific_heat(ctx, beta);
      const double c_fd = -ctx.k_B * beta * beta * oracle::finite_difference(U, beta, 1, h).value;
      c_worst = std::max(c_worst, std::abs(c - c_fd) / std::max(std::abs(c), 1e-12));
      const double s = entropy(ctx, beta);
      const double s_id = ctx.k_B * lnZ(beta) + ctx.k_B * beta * u;
      s_worst = std::max(s_worst, std::abs(s - s_id) / std::max(std::abs(s), std::abs(s_id)));
      const double f = free_energy(ctx, beta);
      const double f_id = u - s / (ctx.k_B * beta);
      f_worst = std::max(f_worst, std::abs(f - f_id) / (std::abs(u) + std::abs(s / beta)));
    }
  }

  double u_limit = 0.0;
  double c_limit = 0.0;
  for (double zeta : zetas) {
    const ThermoContext ctx{zeta, tau, 1.0, 0.0};
    const double beta0 = 1e-6 * tau * tau / (zeta * zeta);
    const double u_ref = -zeta * zeta / (3.0 * tau * tau);
    u_limit = std::max(u_limit, std::abs(mean_energy(ctx, beta0) - u_ref) / std::abs(u_ref));
    c_limit = std::max(c_limit, std::abs(specific_heat(ctx, beta0)) / ctx.k_B);
  }

  const bool sum_ok = sum_worst <= kClassicalSumTol;
  out.pass = sum_ok && u_worst <= kUFdTol && c_worst <= kCFdTol && s_worst <= kIdentityTol &&
             f_worst <= kIdentityTol && u_limit <= kLimitTol && c_limit <= kLimitTol;
  out.detail = "Z sum vs closed (" + std::to_string(sum_points) + " points, zeta>=50, chi<=1): max " +
               sci(sum_worst) + (sum_ok ? "" : " at zeta=" + sci(sum_worst_zeta) + " exceeds 2%") +
               "; U vs FD " + sci(u_worst) + "; C vs FD " + sci(c_worst) + "; S identity " +
               sci(s_worst) + "; F identity " + sci(f_worst) + "; U limit " + sci(u_limit) +
               "; C limit " + sci(c_limit);
  return out;
}

// --- 6 --------------------------------------------------------------------

Outcome special_functions() {
  Outcome out;
  double identity = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    const double x = 0.01 * i;
    const double lhs = specfun::erfi(x);
    const double rhs = 2.0 / std::sqrt(std::numbers::pi) * std::exp(x * x) * specfun::dawson(x);
    if (x > 0.0) identity = std::max(identity, std::abs(lhs - rhs) / std::abs(lhs));
  }
  const double integral =
      oracle::quadrature([](double y) { return std::exp(y * y); }, 0.0, 1.0, 1e-15);
  const double erfi_ref = 2.0 / std::sqrt(std::numbers::pi) * integral;
  const double dawson_ref = std::exp(-1.0) * integral;
  const double erfi_err = std::abs(specfun::erfi(1.0) - erfi_ref) / erfi_ref;
  const double dawson_err = std::abs(specfun::dawson(1.0) - dawson_ref) / dawson_ref;

  // exact rational term sums
  struct Case {
    int n;
    double b, c, z, exact;
  };
  const Case cases[] = {{3, 2.5, 1.5, 0.3, 49.0 / 1000.0},
                        {4, 3.0, 2.0, 0.5, -1.0 / 16.0},
                        {6, 2.5, 7.0 / 3.0, -2.25, 41251516613317.0 / 29007806464.0},
                        {9, -1.0 / 3.0, 0.2, 0.3, 54657040655.0 / 15075320832.0}};
  double hyp = 0.0;
  for (const auto& c : cases) {
    const double v = specfun::hyp2f1_terminating(c.n, c.b, c.c, c.z);
    hyp = std::max(hyp, std::abs(v - c.exact) / std::abs(c.exact));
  }
  out.pass = identity <= kDawsonIdentityTol && erfi_err <= kQuadratureRefTol &&
             dawson_err <= kQuadratureRefTol && hyp <= kHyp2f1Tol;
  out.detail = "erfi/dawson identity on [0,10] " + sci(identity) + "; erfi(1) vs quadrature " +
               sci(erfi_err) + "; dawson(1) vs quadrature " + sci(dawson_err) +
               "; 2F1 vs exact sums " + sci(hyp);
  return out;
}

// --- 7 --------------------------------------------------------------------

Outcome table_regeneration(const std::string& cli, const fs::path& source) {
  Outcome out;
  const fs::path dir = fs::temp_directory_path() / "ptspec_acceptance_t2";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path a = dir / "a.csv";
  const fs::path b = dir / "b.csv";
  const fs::path report = dir / "calibration.md";
  const int rc1 = run(cli + " table2 --out " + a.string() + " --calibration " + report.string());
  const int rc2 = run(cli + " table2 --out " + b.string());
  const std::string ta = read_text(a);
  const std::string tb = read_text(b);
  const bool deterministic = rc1 == 0 && rc2 == 0 && !ta.empty() && ta == tb;

  const auto lines = split(ta, '\n');
  std::map<std::string, int> per_molecule;
  bool i2_row = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split(lines[i], ',');
    if (f.size() < 8) continue;
    ++per_molecule[f[0]];
    if (f[0] == "I2" && f[1] == "0" && f[2] == "0" && f[7] == "-2.01518700249") i2_row = true;
  }
  bool grid_complete = per_molecule.size() == 12;
  for (const auto& [name, count] : per_molecule) grid_complete = grid_complete && count == 9;

  // reference molecular constants
  const std::vector<MoleculeParams> table1 = {
      {"I2", 63.452235020, 1.86430},  {"CO", 6.860586000, 2.29940},
      {"TiH", 0.987371000, 1.32408},  {"TiC", 9.606079000, 1.52550},
      {"N2", 7.003350000, 2.69860},   {"NO", 7.468441000, 2.75340},
      {"CrH", 0.988976000, 1.52179},  {"NiC", 9.974265000, 2.25297},
      {"O2", 7.997457504, 2.81510},   {"LiH", 0.880122100, 1.12800},
      {"VH", 0.988005000, 1.44370},   {"ScN", 10.68277100, 1.50680}};
  bool ingestion = bundled_molecules() == table1;
  try {
    ingestion = ingestion && load_molecules(source / "data" / "molecules.csv") == table1;
  } catch (const Error&) {
    ingestion = false;
  }

  const std::string rep = read_text(report);
  const std::string expected_report = calibration_report(bundled_molecules(), -2.0, 3.0);
  const std::string shipped = read_text(source / "docs" / "table2_calibration.md");
  std::size_t entry_rows = 0;
  for (const auto& line : split(rep, '\n')) {
    for (const auto& m : table1) {
      if (line.rfind("| " + m.name + " |", 0) == 0) ++entry_rows;
    }
  }
  const bool report_ok = rep == expected_report && shipped == expected_report && entry_rows >= 108;

  const auto results = calibrate_published_table(bundled_molecules(), -2.0, 3.0);
  const auto i2 = *find_molecule(bundled_molecules(), "I2");
  const double standard = convention_energy(i2, -2.0, 3.0, 0, 0, EnergyConvention{});

  out.pass = deterministic && grid_complete && i2_row && ingestion && report_ok;
  out.detail = std::string("byte-identical reruns ") + (deterministic ? "yes" : "NO") +
               "; 12 molecules x 9 (n,l) " + (grid_complete ? "yes" : "NO") + "; I2 printed row " +
               (i2_row ? "present" : "MISSING") + "; molecule ingestion " +
               (ingestion ? "exact" : "MISMATCH") + "; calibration report " +
               (report_ok ? "current" : "STALE OR MISSING") + " (best: " +
               results.front().convention.label() + ", max dev " +
               sci(results.front().max_rel_dev) + "; I2 n=0 l=0 standard constants " +
               sci(standard) + " eV vs printed -2.01518700249 eV)";
  fs::remove_all(dir);
  return out;
}

// --- 8 --------------------------------------------------------------------

using Table = std::vector<std::vector<std::string>>;

Table read_csv(const fs::path& p) {
  Table t;
  for (const auto& line : split(read_text(p), '\n')) {
    if (!line.empty()) t.push_back(split(line, ','));
  }
  return t;
}

// Rows grouped by molecule; each group keeps file order (ascending x).
std::map<std::string, std::vector<std::vector<double>>> columns_by_molecule(const Table& t,
                                                                           std::size_t first) {
  std::map<std::string, std::vector<std::vector<double>>> out;
  for (std::size_t i = 1; i < t.size(); ++i) {
    auto& cols = out[t[i][0]];
    cols.resize(t[i].size() - first);
    for (std::size_t j = first; j < t[i].size(); ++j) cols[j - first].push_back(std::stod(t[i][j]));
  }
  return out;
}

Outcome figure_data(const std::string& cli) {
  Outcome out;
  const fs::path dir = fs::temp_directory_path() / "ptspec_acceptance_fig";
  fs::remove_all(dir);
  const int rc = run(cli + " figure-data --out " + dir.string());
  int files = 0;
  for (int i = 1; i <= 11; ++i) {
    for (const auto& e : fs::directory_iterator(dir)) {
      char prefix[8];
      std::snprintf(prefix, sizeof prefix, "fig%02d_", i);
      if (e.path().filename().string().rfind(prefix, 0) == 0) {
        ++files;
        break;
      }
    }
  }

  bool z_increasing = true;
  for (const auto& [mol, cols] : columns_by_molecule(read_csv(dir / "fig03_Z_vs_zeta.csv"), 3)) {
    for (const auto& c : cols) {
      for (std::size_t i = 1; i < c.size(); ++i) z_increasing = z_increasing && c[i] > c[i - 1];
    }
  }
  bool u_nonincreasing = true;
  for (const auto& [mol, cols] : columns_by_molecule(read_csv(dir / "fig04_U_vs_beta.csv"), 3)) {
    for (const auto& c : cols) {
      for (std::size_t i = 1; i < c.size(); ++i) u_nonincreasing = u_nonincreasing && c[i] <= c[i - 1];
    }
  }
  int interior_max = 0;
  for (const auto& [mol, cols] : columns_by_molecule(read_csv(dir / "fig06_C_vs_beta.csv"), 3)) {
    for (const auto& c : cols) {
      const auto top = static_cast<std::size_t>(std::max_element(c.begin(), c.end()) - c.begin());
      if (top == 0 || top + 1 == c.size()) continue;
      bool single = true;
      for (std::size_t i = 1; i <= top; ++i) single = single && c[i] >= c[i - 1];
      for (std::size_t i = top + 1; i < c.size(); ++i) single = single && c[i] <= c[i - 1];
      if (single) ++interior_max;
    }
  }
  out.pass = rc == 0 && files == 11 && z_increasing && u_nonincreasing && interior_max >= 1;
  out.detail = std::to_string(files) + "/11 data sets; Z strictly increasing in zeta " +
               (z_increasing ? "yes" : "NO") + "; U nonincreasing in beta " +
               (u_nonincreasing ? "yes" : "NO") + "; (molecule, zeta) series with a single interior C maximum: " +
               std::to_string(interior_max);
  fs::remove_all(dir);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: %s <ptspec-cli> <source-dir>\n", argv[0]);
    return 2;
  }
  const std::string cli = argv[1];
  const fs::path source = argv[2];

  struct Criterion {
    const char* id;
    const char* name;
    std::function<Outcome()> check;
  };
  const Criterion criteria[] = {
      {"C1", "aim-closed-form", aim_vs_closed_form},
      {"C2", "shooting-oracle", shooting_oracle},
      {"C3", "dirac-reductions", dirac_reductions},
      {"C4", "nonrelativistic-limit", nonrelativistic_limit},
      {"C5", "thermodynamics", thermodynamics},
      {"C6", "special-functions", special_functions},
      {"C7", "table-regeneration", [&] { return table_regeneration(cli, source); }},
      {"C8", "figure-data", [&] { return figure_data(cli); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %s %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/8 criteria passed\n", 8 - failed);
  return failed == 0 ? 0 : 1;
}
