#include "ptspec/figures.hpp"

#include <cmath>
#include <functional>
#include <future>
#include <utility>

#include "ptspec/error.hpp"
#include "ptspec/format.hpp"
#include "ptspec/thermo.hpp"

namespace ptspec {
namespace {

const MoleculeParams& require_molecule(const std::vector<MoleculeParams>& molecules,
                                       const std::string& name) {
  for (const auto& m : molecules) {
    if (m.name == name) return m;
  }
  throw Error(ErrorKind::validation, "figure-data: molecule '" + name + "' not in dataset");
}

std::string series_name(const char* prefix, double v) {
  return std::string(prefix) + format_significant(v, 6);
}

using ThermoQuantity = std::function<double(const ThermoContext&, double)>;

// Quantity against beta, one column per zeta in the series.
std::string versus_beta(const std::vector<MoleculeParams>& mols, const RunConfig& run,
                        const FigureConfig& cfg, const ThermoQuantity& q) {
  std::vector<std::string> header{"molecule", "tau", "beta"};
  for (double z : cfg.zeta_series) header.push_back(series_name("zeta_", z));
  CsvTable table(header);
  const auto betas = log_grid(cfg.beta_min, cfg.beta_max, cfg.beta_points);
  for (const auto& name : cfg.thermo_molecules) {
    const double tau = cfg.tau.value_or(molecule_tau(require_molecule(mols, name), run));
    for (double beta : betas) {
      std::vector<std::string> row{name, format_significant(tau), format_significant(beta)};
      for (double z : cfg.zeta_series) {
        row.push_back(format_significant(q(ThermoContext{z, tau, 1.0, 0.0}, beta)));
      }
      table.add_row(std::move(row));
    }
  }
  return table.to_string();
}

// Quantity against zeta, one column per beta in the series.
std::string versus_zeta(const std::vector<MoleculeParams>& mols, const RunConfig& run,
                        const FigureConfig& cfg, const ThermoQuantity& q) {
  std::vector<std::string> header{"molecule", "tau", "zeta"};
  for (double b : cfg.beta_series) header.push_back(series_name("beta_", b));
  CsvTable table(header);
  const auto zetas = linear_grid(cfg.zeta_min, cfg.zeta_max, cfg.zeta_points);
  for (const auto& name : cfg.thermo_molecules) {
    const double tau = cfg.tau.value_or(molecule_tau(require_molecule(mols, name), run));
    for (double zeta : zetas) {
      std::vector<std::string> row{name, format_significant(tau), format_significant(zeta)};
      for (double b : cfg.beta_series) {
        row.push_back(format_significant(q(ThermoContext{zeta, tau, 1.0, 0.0}, b)));
      }
      table.add_row(std::move(row));
    }
  }
  return table.to_string();
}

}  // namespace

std::vector<double> linear_grid(double lo, double hi, int points) {
  if (points < 2 || !(lo < hi)) throw Error(ErrorKind::invalid_parameter, "bad grid");
  std::vector<double> g(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (points - 1);
  g.back() = hi;
  return g;
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (!(lo > 0.0)) throw Error(ErrorKind::invalid_parameter, "log grid needs lo > 0");
  auto g = linear_grid(std::log(lo), std::log(hi), points);
  for (double& x : g) x = std::exp(x);
  g.front() = lo;
  g.back() = hi;
  return g;
}

double molecule_tau(const MoleculeParams& molecule, const RunConfig& run) {
  const double mu = molecule.mu_amu * run.amu_to_ev;
  return std::sqrt(mu / 2.0) / (molecule.alpha_invA * run.hbar_c);
}

std::map<std::string, std::string> figure_data(const std::vector<MoleculeParams>& molecules,
                                               const RunConfig& run, const FigureConfig& cfg) {
  std::map<std::string, std::string> files;

  {
    const MoleculeParams& m = require_molecule(molecules, cfg.energy_molecule);
    const NRContext ctx = NRContext::from_amu(m.mu_amu, run.amu_to_ev, run.hbar_c);
    std::vector<std::string> header{"alpha_invA"};
    for (int n : cfg.energy_levels) header.push_back("E_n" + std::to_string(n) + "_eV");
    CsvTable table(header);
    for (double alpha : linear_grid(cfg.alpha_min, cfg.alpha_max, cfg.alpha_points)) {
      std::vector<std::string> row{format_significant(alpha)};
      for (int n : cfg.energy_levels) {
        row.push_back(format_significant(energy_nr({run.A, run.B, alpha}, ctx, n, 0).E));
      }
      table.add_row(std::move(row));
    }
    files["fig01_energy_vs_alpha.csv"] = table.to_string();
  }

  const ThermoQuantity Z = [](const ThermoContext& c, double b) {
    return thermo_point(c, b).Z;
  };
  const ThermoQuantity U = mean_energy;
  const ThermoQuantity C = specific_heat;
  const ThermoQuantity F = free_energy;
  const ThermoQuantity S = entropy;
  using Builder = std::string (*)(const std::vector<MoleculeParams>&, const RunConfig&,
                                  const FigureConfig&, const ThermoQuantity&);
  const std::pair<const char*, std::pair<Builder, const ThermoQuantity*>> jobs[] = {
      {"fig02_Z_vs_beta.csv", {versus_beta, &Z}}, {"fig03_Z_vs_zeta.csv", {versus_zeta, &Z}},
      {"fig04_U_vs_beta.csv", {versus_beta, &U}}, {"fig05_U_vs_zeta.csv", {versus_zeta, &U}},
      {"fig06_C_vs_beta.csv", {versus_beta, &C}}, {"fig07_C_vs_zeta.csv", {versus_zeta, &C}},
      {"fig08_F_vs_beta.csv", {versus_beta, &F}}, {"fig09_F_vs_zeta.csv", {versus_zeta, &F}},
      {"fig10_S_vs_beta.csv", {versus_beta, &S}}, {"fig11_S_vs_zeta.csv", {versus_zeta, &S}},
  };
  // Each data set is independent; results are collected in a fixed order.
  std::vector<std::future<std::string>> pending;
  for (const auto& [name, job] : jobs) {
    pending.push_back(std::async(std::launch::async, job.first, std::cref(molecules),
                                 std::cref(run), std::cref(cfg), std::cref(*job.second)));
  }
  for (std::size_t i = 0; i < pending.size(); ++i) files[jobs[i].first] = pending[i].get();
  return files;
}

}  // namespace ptspec
