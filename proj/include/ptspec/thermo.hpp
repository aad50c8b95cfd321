#pragma once

#include "ptspec/schrodinger.hpp"

namespace ptspec {

/// Classical-regime thermodynamics of the vibrational levels
/// E_n = -(2 a^2 hbar^2 / mu)(n - zeta)^2. Energies are in the units of 1/beta;
/// tau carries units of sqrt(beta).
struct ThermoContext {
  double zeta = 1.0;
  double tau = 1.0;
  double k_B = 1.0;
  /// (2 a^2 hbar^2 / mu) l(l+1) d0; zero drops the rotational prefactor
  /// e^{-beta * l_shift} of the partition function.
  double l_shift = 0.0;
};

/// tau = sqrt(mu/2) / (alpha hbar) from the molecule, zeta from the level count.
/// With include_l_prefactor the rotational prefactor is kept.
ThermoContext thermo_context(const PTPotential& pot, const NRContext& nr, int l,
                             bool include_l_prefactor = false);

double thermo_chi(const ThermoContext& ctx, double beta);

/// sum_{n=0}^{n_max} exp(((n - zeta) sqrt(beta) / tau)^2); n_max defaults to floor(zeta).
double partition_sum(const ThermoContext& ctx, double beta, int n_max);
double partition_sum(const ThermoContext& ctx, double beta);

/// sqrt(pi) tau erfi(chi) / (2 sqrt(beta)); throws Error(overflow) past the erfi range.
double partition_closed(const ThermoContext& ctx, double beta);

/// ln of partition_closed, finite for every chi > 0.
double log_partition_closed(const ThermoContext& ctx, double beta);

double mean_energy(const ThermoContext& ctx, double beta);
double specific_heat(const ThermoContext& ctx, double beta);
double free_energy(const ThermoContext& ctx, double beta);
double entropy(const ThermoContext& ctx, double beta);

struct ThermoPoint {
  double beta = 0.0;
  double chi = 0.0;
  double Z = 0.0;  // +inf once erfi leaves double range; lnZ stays finite
  double lnZ = 0.0;
  double U = 0.0;
  double C = 0.0;
  double F = 0.0;
  double S = 0.0;
};

ThermoPoint thermo_point(const ThermoContext& ctx, double beta);

}  // namespace ptspec
