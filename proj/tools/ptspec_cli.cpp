// Command-line front end: every subcommand writes CSV (or a Markdown report)
// and reports failures as a single JSON record on stderr.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ptspec/aim.hpp"
#include "ptspec/dirac.hpp"
#include "ptspec/error.hpp"
#include "ptspec/figures.hpp"
#include "ptspec/format.hpp"
#include "ptspec/molecules.hpp"
#include "ptspec/oracle.hpp"
#include "ptspec/schrodinger.hpp"
#include "ptspec/table2.hpp"
#include "ptspec/thermo.hpp"

namespace fs = std::filesystem;
using namespace ptspec;

namespace {

struct Common {
  std::string molecules_path;
  RunConfig run;
  std::string out = "-";
  std::string format = "csv";
  bool n_set = false;
  bool l_set = false;
};

std::vector<MoleculeParams> molecules_of(const Common& c) {
  return c.molecules_path.empty() ? bundled_molecules() : load_molecules(c.molecules_path);
}

void emit(const Common& c, const std::string& text) {
  if (c.out == "-") {
    std::cout << text;
    std::cout.flush();
  } else {
    write_file_atomic(c.out, text);
  }
}

void add_common(CLI::App* app, Common& c, bool with_levels = true) {
  app->add_option("--molecules", c.molecules_path, "Molecule CSV (name,mu_amu,alpha_invA); bundled set if omitted");
  app->add_option("--A", c.run.A, "Well strength A in eV")->capture_default_str();
  app->add_option("--B", c.run.B, "Core strength B in eV")->capture_default_str();
  app->add_option("--hbar-c", c.run.hbar_c, "hbar*c in eV*Angstrom")->capture_default_str();
  app->add_option("--amu-ev", c.run.amu_to_ev, "Atomic mass unit in eV")->capture_default_str();
  if (with_levels) {
    app->add_option("--n", c.run.n_values, "Vibrational quantum numbers")->delimiter(',');
    app->add_option("--l", c.run.l_values, "Rotational quantum numbers")->delimiter(',');
  }
  app->add_option("--out", c.out, "Output path, '-' for stdout")->capture_default_str();
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv"}))->capture_default_str();
}

Branch parse_branch(const std::string& s) { return s == "regular" ? Branch::regular : Branch::irregular; }

// ---------------------------------------------------------------------------

void run_spectrum(const Common& c, const std::vector<std::string>& only, const std::string& branch) {
  const auto molecules = molecules_of(c);
  CsvTable table({"molecule", "n", "l", "E_eV", "zeta", "n_max", "flags"});
  for (const auto& m : molecules) {
    if (!only.empty() && std::find(only.begin(), only.end(), m.name) == only.end()) continue;
    const NRContext ctx = NRContext::from_amu(m.mu_amu, c.run.amu_to_ev, c.run.hbar_c);
    const PTPotential pot{c.run.A, c.run.B, m.alpha_invA};
    const Branch b = parse_branch(branch);
    for (int n : c.run.n_values) {
      for (int l : c.run.l_values) {
        const EnergyLevel level = energy_nr(pot, ctx, n, l, b);
        const LevelCount count = level_count(pot, ctx, l);
        // n_max is the bound behind the beyond_nmax flag of the chosen branch
        const int n_max = b == Branch::irregular ? count.n_max : regular_level_count(pot, ctx, l);
        table.add_row({m.name, std::to_string(n), std::to_string(l), format_significant(level.E),
                       format_significant(count.zeta), std::to_string(n_max),
                       describe_flags(level.flags)});
      }
    }
  }
  emit(c, table.to_string());
}

struct DiracArgs {
  double M = 5.0;
  double alpha = 1.0;
  int kappa = -1;
  std::string symmetry = "spin";
  double C = 0.0;
  std::string units = "natural";
  std::optional<double> lo;
  std::optional<double> hi;
  double tol = 1e-13;
};

void run_dirac(const Common& c, const DiracArgs& a) {
  DiracContext ctx;
  ctx.M = a.M;
  ctx.kappa = a.kappa;
  ctx.units = a.units == "ev-angstrom" ? DiracUnits::ev_angstrom : DiracUnits::natural;
  ctx.hbar_c = c.run.hbar_c;
  const Symmetry sym = a.symmetry == "pspin" ? Symmetry::pspin : Symmetry::spin;
  (sym == Symmetry::pspin ? ctx.Cps : ctx.Cs) = a.C;
  const PTPotential pot{c.run.A, c.run.B, a.alpha};
  const double lo = a.lo.value_or(-2.0 * std::abs(a.M));
  const double hi = a.hi.value_or(2.0 * std::abs(a.M));
  CsvTable table({"symmetry", "n", "kappa", "E", "residual", "bracket_lo", "bracket_hi", "excluded"});
  for (int n : c.run.n_values) {
    for (const auto& r : solve_levels(ctx, pot, n, sym, lo, hi, a.tol)) {
      table.add_row({a.symmetry, std::to_string(n), std::to_string(r.kappa),
                     format_significant(r.E, 15), format_significant(r.residual, 3),
                     format_significant(r.bracket_lo, 15), format_significant(r.bracket_hi, 15),
                     r.excluded ? "1" : "0"});
    }
  }
  emit(c, table.to_string());
}

struct ThermoArgs {
  std::string molecule = "N2";
  int l = 0;
  std::optional<double> zeta;
  std::optional<double> tau;
  std::vector<double> betas;
  bool with_sum = false;
  bool l_prefactor = false;
};

void run_thermo(const Common& c, const ThermoArgs& a) {
  ThermoContext ctx;
  if (!a.zeta || !a.tau) {
    const auto m = find_molecule(molecules_of(c), a.molecule);
    if (!m) throw Error(ErrorKind::validation, "unknown molecule '" + a.molecule + "'");
    const NRContext nr = NRContext::from_amu(m->mu_amu, c.run.amu_to_ev, c.run.hbar_c);
    ctx = thermo_context({c.run.A, c.run.B, m->alpha_invA}, nr, a.l, a.l_prefactor);
  }
  if (a.zeta) ctx.zeta = *a.zeta;
  if (a.tau) ctx.tau = *a.tau;
  const auto betas = a.betas.empty() ? log_grid(1e-4, 1.0, 64) : a.betas;
  std::vector<std::string> header{"beta", "chi", "Z", "lnZ", "U", "C", "F", "S"};
  if (a.with_sum) header.push_back("Z_sum");
  CsvTable table(header);
  for (double beta : betas) {
    const ThermoPoint p = thermo_point(ctx, beta);
    std::vector<std::string> row{format_significant(beta), format_significant(p.chi),
                                 format_significant(p.Z),  format_significant(p.lnZ),
                                 format_significant(p.U),  format_significant(p.C),
                                 format_significant(p.F),  format_significant(p.S)};
    if (a.with_sum) row.push_back(format_significant(partition_sum(ctx, beta)));
    table.add_row(std::move(row));
  }
  emit(c, table.to_string());
}

void run_table2(const Common& c, const std::string& calibration_path) {
  const auto molecules = molecules_of(c);
  const std::string csv = table2_csv(molecules, c.run);
  const std::string report = calibration_path.empty()
                                 ? std::string()
                                 : calibration_report(molecules, c.run.A, c.run.B);
  emit(c, csv);
  if (!calibration_path.empty()) {
    try {
      write_file_atomic(calibration_path, report);
    } catch (...) {
      if (c.out != "-") {
        std::error_code ec;
        fs::remove(c.out, ec);
      }
      throw;
    }
  }
}

void run_figure_data(const Common& c, const std::string& dir, const FigureConfig& cfg) {
  const auto files = figure_data(molecules_of(c), c.run, cfg);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::io, "cannot create " + dir + ": " + ec.message());
  std::vector<fs::path> written;
  try {
    for (const auto& [name, text] : files) {
      const fs::path path = fs::path(dir) / name;
      write_file_atomic(path, text);
      written.push_back(path);
    }
  } catch (...) {
    for (const auto& p : written) fs::remove(p, ec);
    throw;
  }
}

struct AimArgs {
  double A1 = -20.0;
  double B1 = 2.0;
  double alpha = 1.0;
  std::vector<int> levels{0, 1, 2, 3};
  int depth = 0;
  double tol = 1e-10;
  bool pattern = false;
};

void run_aim_verify(const Common& c, const AimArgs& a) {
  const double a2 = a.alpha * a.alpha;
  const double well = 1.0 - 4.0 * a.A1 / a2;
  const double core = 1.0 + 4.0 * a.B1 / a2;
  if (well < 0.0 || core < 0.0) throw Error(ErrorKind::discriminant, "exponents are complex");
  const aim::PtAimParams params{0.5 * (1.0 + std::sqrt(well)), 0.5 * (1.0 - std::sqrt(core)),
                                a.alpha};
  if (a.pattern) {
    CsvTable table({"k", "pattern", "K2", "delta_point1", "delta_point2", "relative_size", "vanishes"});
    const double z0 = aim::pt_expansion_point(a.A1, a.B1);
    for (const auto& r : aim::pt_delta_pattern(params, {z0, 2.0 * z0}, 4)) {
      table.add_row({std::to_string(r.k), r.pattern, format_significant(r.K2),
                     format_significant(r.delta[0]), format_significant(r.delta[1]),
                     format_significant(r.relative_size, 3), r.vanishes ? "1" : "0"});
    }
    emit(c, table.to_string());
    return;
  }
  const int max_n = a.levels.empty() ? 0 : *std::max_element(a.levels.begin(), a.levels.end());
  const int depth = a.depth > 0 ? a.depth : 2 * max_n + 4;
  const double z0 = aim::pt_expansion_point(a.A1, a.B1);
  const auto problem = aim::make_pt_problem(params, z0, aim::default_order(depth));
  CsvTable table({"n", "K1_closed_form", "K1_aim", "rel_dev", "stability_gap", "converged"});
  for (int n : a.levels) {
    const double K1 = aim::pt_k1_closed_form(params, n);
    const double half_gap = 0.5 * std::min(std::abs(K1 - aim::pt_k1_closed_form(params, n + 1)),
                                           n > 0 ? std::abs(K1 - aim::pt_k1_closed_form(params, n - 1))
                                                 : std::abs(K1) + a2);
    const double scale = std::max(std::abs(K1), a2);
    const auto report = aim::aim_eigen_scan(problem, K1 - half_gap, K1 + half_gap, depth,
                                            a.tol * scale);
    const aim::AimRoot* best = nullptr;
    for (const auto& r : report.roots) {
      if (!best || std::abs(r.value - K1) < std::abs(best->value - K1)) best = &r;
    }
    if (!best) {
      table.add_row({std::to_string(n), format_significant(K1), "", "", "", "0"});
      continue;
    }
    table.add_row({std::to_string(n), format_significant(K1, 15), format_significant(best->value, 15),
                   format_significant(std::abs(best->value - K1) / scale, 3),
                   format_significant(best->stability_gap, 3), best->converged ? "1" : "0"});
  }
  emit(c, table.to_string());
}

struct OracleArgs {
  double A1 = -60.0;
  double B1 = 2.0;
  double alpha = 1.0;
  std::vector<int> levels{0, 1, 2};
  double tol = 1e-9;
  double r_max = 0.0;
};

void run_oracle_check(const Common& c, const OracleArgs& a) {
  const double a2 = a.alpha * a.alpha;
  const double well = 1.0 - 4.0 * a.A1 / a2;
  const double core = 1.0 + 4.0 * a.B1 / a2;
  if (well < 0.0 || core < 0.0) throw Error(ErrorKind::discriminant, "exponents are complex");
  const double s_regular = 0.5 * (1.0 - std::sqrt(well)) + 0.5 * (1.0 + std::sqrt(core));
  const double s_irregular = 0.5 * (1.0 + std::sqrt(well)) + 0.5 * (1.0 - std::sqrt(core));
  const double r_max = a.r_max > 0.0 ? a.r_max : 40.0 / a.alpha;
  const auto problem = oracle::pt_radial_problem(a.A1, a.B1, a.alpha, r_max);
  CsvTable table({"n", "K1_regular_closed_form", "K1_shooting", "rel_dev", "nodes",
                  "K1_irregular_branch", "rel_gap_irregular_vs_regular"});
  for (int n : a.levels) {
    const double k_reg = -a2 * (s_regular + 2.0 * n) * (s_regular + 2.0 * n);
    const double k_irregular = -a2 * (s_irregular + 2.0 * n) * (s_irregular + 2.0 * n);
    if (!(s_regular + 2.0 * n < 0.0)) {
      throw Error(ErrorKind::validation, "level " + std::to_string(n) + " is not bound");
    }
    const double width = 0.5 * a2 * std::max(1.0, std::abs(s_regular + 2.0 * n));
    const auto shot = oracle::shoot_eigenvalue(problem, n, k_reg - width, std::min(k_reg + width, 0.0), a.tol);
    table.add_row({std::to_string(n), format_significant(k_reg, 15), format_significant(shot.E, 15),
                   format_significant(std::abs(shot.E - k_reg) / std::abs(k_reg), 3),
                   std::to_string(shot.nodes), format_significant(k_irregular, 15),
                   format_significant(std::abs(k_irregular - k_reg) / std::abs(k_reg), 6)});
  }
  emit(c, table.to_string());
}

int fail(const std::string& kind, const std::string& message, const std::string& command, int code) {
  nlohmann::json record{{"error", {{"kind", kind}, {"message", message}, {"command", command}}}};
  std::cerr << record.dump() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poschl-Teller spectra, thermodynamics and verification tools"};
  app.require_subcommand(1);

  Common spectrum_c, dirac_c, thermo_c, table2_c, figure_c, aim_c, oracle_c;

  auto* spectrum = app.add_subcommand("spectrum", "Nonrelativistic bound-state energies");
  add_common(spectrum, spectrum_c);
  std::vector<std::string> only;
  std::string branch = "irregular";
  spectrum->add_option("--molecule", only, "Restrict to these molecules");
  spectrum->add_option("--branch", branch, "Exponent branch")->check(CLI::IsMember({"irregular", "regular"}))->capture_default_str();

  auto* dirac = app.add_subcommand("dirac", "Relativistic levels under spin or p-spin symmetry");
  add_common(dirac, dirac_c);
  dirac_c.run.n_values = {0, 1, 2};
  DiracArgs dargs;
  dirac->add_option("--M", dargs.M, "Mass energy")->capture_default_str();
  dirac->add_option("--alpha", dargs.alpha, "Screening parameter")->capture_default_str();
  dirac->add_option("--kappa", dargs.kappa, "Spin-orbit quantum number (nonzero)")->capture_default_str();
  dirac->add_option("--symmetry", dargs.symmetry)->check(CLI::IsMember({"spin", "pspin"}))->capture_default_str();
  dirac->add_option("--C", dargs.C, "Symmetry constant C_s or C_ps")->capture_default_str();
  dirac->add_option("--units", dargs.units)->check(CLI::IsMember({"natural", "ev-angstrom"}))->capture_default_str();
  dirac->add_option("--E-lo", dargs.lo, "Lower end of the energy bracket (default -2M)");
  dirac->add_option("--E-hi", dargs.hi, "Upper end of the energy bracket (default 2M)");
  dirac->add_option("--tol", dargs.tol)->capture_default_str();

  auto* thermo = app.add_subcommand("thermo", "Partition function and thermodynamic functions");
  add_common(thermo, thermo_c, false);
  ThermoArgs targs;
  thermo->add_option("--molecule", targs.molecule)->capture_default_str();
  thermo->add_option("--l", targs.l, "Rotational quantum number used for zeta")->capture_default_str();
  thermo->add_option("--zeta", targs.zeta, "Override zeta");
  thermo->add_option("--tau", targs.tau, "Override tau");
  thermo->add_option("--beta", targs.betas, "Inverse temperatures (default: 64 log points in [1e-4, 1])")->delimiter(',');
  thermo->add_flag("--with-sum", targs.with_sum, "Add the finite level sum");
  thermo->add_flag("--l-prefactor", targs.l_prefactor, "Keep the rotational prefactor");

  auto* table2 = app.add_subcommand("table2", "Regenerate the molecular energy table");
  add_common(table2, table2_c);
  std::string calibration_path;
  table2->add_option("--calibration", calibration_path, "Also write the convention calibration report (Markdown)");

  auto* figures = app.add_subcommand("figure-data", "CSV series behind the eleven figures");
  add_common(figures, figure_c, false);
  FigureConfig fcfg;
  figures->add_option("--tau", fcfg.tau, "Use this tau for every molecule");
  figures->add_option("--energy-molecule", fcfg.energy_molecule)->capture_default_str();
  figures->add_option("--alpha-min", fcfg.alpha_min)->capture_default_str();
  figures->add_option("--alpha-max", fcfg.alpha_max)->capture_default_str();
  figures->add_option("--alpha-points", fcfg.alpha_points)->capture_default_str();
  figures->add_option("--beta-min", fcfg.beta_min)->capture_default_str();
  figures->add_option("--beta-max", fcfg.beta_max)->capture_default_str();
  figures->add_option("--beta-points", fcfg.beta_points)->capture_default_str();
  figures->add_option("--zeta-min", fcfg.zeta_min)->capture_default_str();
  figures->add_option("--zeta-max", fcfg.zeta_max)->capture_default_str();
  figures->add_option("--zeta-points", fcfg.zeta_points)->capture_default_str();
  figures->add_option("--thermo-molecules", fcfg.thermo_molecules)->delimiter(',');

  auto* aim_cmd = app.add_subcommand("aim-verify", "Iteration-method eigenvalues against the closed form");
  add_common(aim_cmd, aim_c, false);
  AimArgs aargs;
  aim_cmd->add_option("--A1", aargs.A1, "Well coefficient 2 mu A / hbar^2")->capture_default_str();
  aim_cmd->add_option("--B1", aargs.B1, "Core coefficient")->capture_default_str();
  aim_cmd->add_option("--alpha", aargs.alpha)->capture_default_str();
  aim_cmd->add_option("--n", aargs.levels)->delimiter(',');
  aim_cmd->add_option("--depth", aargs.depth, "Iteration depth (default 2 max(n) + 4)");
  aim_cmd->add_option("--tol", aargs.tol, "Relative tolerance")->capture_default_str();
  aim_cmd->add_flag("--pattern", aargs.pattern, "Test the termination values of delta_1..delta_4");

  auto* oracle_cmd = app.add_subcommand("oracle-check", "Shooting solver against the regular closed form");
  add_common(oracle_cmd, oracle_c, false);
  OracleArgs oargs;
  oracle_cmd->add_option("--A1", oargs.A1)->capture_default_str();
  oracle_cmd->add_option("--B1", oargs.B1)->capture_default_str();
  oracle_cmd->add_option("--alpha", oargs.alpha)->capture_default_str();
  oracle_cmd->add_option("--n", oargs.levels)->delimiter(',');
  oracle_cmd->add_option("--tol", oargs.tol)->capture_default_str();
  oracle_cmd->add_option("--r-max", oargs.r_max, "Outer radius (default 40/alpha)");

  std::string command;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), argc > 1 ? argv[1] : "", 2);
  }

  try {
    if (*spectrum) {
      command = "spectrum";
      run_spectrum(spectrum_c, only, branch);
    } else if (*dirac) {
      command = "dirac";
      run_dirac(dirac_c, dargs);
    } else if (*thermo) {
      command = "thermo";
      run_thermo(thermo_c, targs);
    } else if (*table2) {
      command = "table2";
      run_table2(table2_c, calibration_path);
    } else if (*figures) {
      command = "figure-data";
      run_figure_data(figure_c, figure_c.out == "-" ? "figure-data" : figure_c.out, fcfg);
    } else if (*aim_cmd) {
      command = "aim-verify";
      run_aim_verify(aim_c, aargs);
    } else if (*oracle_cmd) {
      command = "oracle-check";
      run_oracle_check(oracle_c, oargs);
    }
  } catch (const Error& e) {
    return fail(std::string(to_string(e.kind())), e.what(), command, 1);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), command, 1);
  }
  return 0;
}
