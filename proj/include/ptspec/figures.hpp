#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ptspec/molecules.hpp"
#include "ptspec/table2.hpp"

namespace ptspec {

struct FigureConfig {
  std::string energy_molecule = "N2";
  double alpha_min = 0.05;
  double alpha_max = 0.5;
  int alpha_points = 64;
  std::vector<int> energy_levels{1, 2, 3, 4};

  std::vector<std::string> thermo_molecules{"N2", "TiH", "NiC", "I2"};
  double beta_min = 1e-4;
  double beta_max = 1.0;
  int beta_points = 64;
  double zeta_min = 1.0;
  double zeta_max = 100.0;
  int zeta_points = 64;
  std::vector<double> zeta_series{10.0, 25.0, 50.0, 100.0};
  std::vector<double> beta_series{1e-4, 1e-3, 1e-2, 1e-1, 1.0};
  /// Replaces the molecule-derived tau for every thermodynamic series.
  std::optional<double> tau;
};

std::vector<double> linear_grid(double lo, double hi, int points);
std::vector<double> log_grid(double lo, double hi, int points);

/// File name -> CSV text for the eleven figure data sets:
///   fig01_energy_vs_alpha.csv
///   fig02_Z_vs_beta.csv, fig03_Z_vs_zeta.csv, fig04_U_vs_beta.csv, ...,
///   fig11_S_vs_zeta.csv (thermodynamic quantity against beta at fixed zeta,
///   then against zeta at fixed beta).
std::map<std::string, std::string> figure_data(const std::vector<MoleculeParams>& molecules,
                                               const RunConfig& run, const FigureConfig& config);

/// tau = sqrt(mu c^2 / 2) / (alpha hbar c), in eV^{-1/2}.
double molecule_tau(const MoleculeParams& molecule, const RunConfig& run);

}  // namespace ptspec
