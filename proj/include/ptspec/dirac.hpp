#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ptspec/schrodinger.hpp"

namespace ptspec {

enum class Symmetry : std::uint8_t { spin, pspin };
enum class DiracUnits : std::uint8_t { natural, ev_angstrom };

/// Only the constant belonging to the symmetry being solved is read.
struct DiracContext {
  double M = 1.0;
  double Cps = 0.0;
  double Cs = 0.0;
  int kappa = 1;
  DiracUnits units = DiracUnits::natural;
  double hbar_c = kDefaultHbarC;  // used in ev_angstrom mode
  double d0 = kD0;
};

/// Residual of the p-spin energy equation at energy E for level n.
/// Returns nullopt where one of the square-root arguments is negative.
std::optional<double> pspin_residual(double E, const DiracContext& ctx, const PTPotential& pot,
                                     int n);
std::optional<double> spin_residual(double E, const DiracContext& ctx, const PTPotential& pot,
                                    int n);
std::optional<double> dirac_residual(Symmetry symmetry, double E, const DiracContext& ctx,
                                     const PTPotential& pot, int n);

/// Same residual written in sum = M + E and diff = M - E, which stays accurate
/// when E is close to +M or -M.
std::optional<double> dirac_residual_split(Symmetry symmetry, double sum, double diff,
                                           const DiracContext& ctx, const PTPotential& pot,
                                           int n);

struct RelativisticRoot {
  int n = 0;
  int kappa = 0;
  double E = 0.0;
  Symmetry symmetry = Symmetry::spin;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double residual = 0.0;
  /// E sits on the energy the symmetry excludes (-M for p-spin, +M for spin).
  bool excluded = false;
};

struct DiracScanOptions {
  int grid_points = 4000;
};

/// Every sign change of the residual on [lo, hi], refined by bisection until
/// the bracket is below tol (relative to max(1, |E|)). Grid cells that touch
/// the complex domain are skipped. An empty result means no sign change;
/// Error(complex_domain) is thrown when no grid point is real-valued.
std::vector<RelativisticRoot> solve_levels(const DiracContext& ctx, const PTPotential& pot,
                                           int n, Symmetry symmetry, double lo, double hi,
                                           double tol, const DiracScanOptions& options = {});

/// Spin-symmetry levels written as E = M + eps and scanned over eps in [lo, hi];
/// the result carries eps in the E field. Used for the large-M limit.
std::vector<RelativisticRoot> solve_spin_binding(const DiracContext& ctx,
                                                 const PTPotential& pot, int n, double lo,
                                                 double hi, double tol,
                                                 const DiracScanOptions& options = {});

enum class SpecialCase : std::uint8_t {
  swave_pspin,
  swave_spin,
  reflectionless_pspin,
  reflectionless_spin,
  hyperbolic_mpt_pspin,
  hyperbolic_mpt_spin,
};

/// Inputs of the reduced equations (natural units). A and B are read by the
/// s-wave cases, eta by the reflectionless and hyperbolic ones; the hyperbolic
/// cases fix alpha = 1.
struct SpecialCaseParams {
  double M = 1.0;
  double alpha = 1.0;
  double A = 0.0;
  double B = 0.0;
  double eta = 0.0;
  int n = 0;
};

/// The reduced equation in the form M^2 - E^2 - 4 alpha^2 [ ... ]^2.
std::optional<double> special_case_residual(SpecialCase kind, double E,
                                            const SpecialCaseParams& params);

struct GeneralSubstitution {
  Symmetry symmetry;
  DiracContext ctx;
  PTPotential pot;
  int n;
};

/// The general problem a reduction corresponds to.
GeneralSubstitution special_case_substitution(SpecialCase kind, const SpecialCaseParams& params);

/// Nonrelativistic energy obtained from the spin equation with C_s = 0 by
/// M + E -> 2 mu, M - E -> -E_nl, kappa -> l (hbar = 1).
double nr_limit(const PTPotential& pot, double mu, int n, int l);

/// The closed forms of the nonrelativistic limit (hbar = 1): general,
/// reflectionless (B = 0, A = -eta(eta+1)/2, l = 0) and hyperbolic (alpha = 1,
/// A = 1/4 - eta^2, l = 0).
double nr_energy_general(const PTPotential& pot, double mu, int n, int l);
double nr_energy_reflectionless(double eta, double alpha, double mu, int n);
double nr_energy_hyperbolic(double eta, double mu, int n);

enum class SpinorComponent : std::uint8_t { upper, lower };

struct SpinorExponents {
  double a3 = 0.0;
  double b3 = 0.0;
  double gamma2 = 0.0;  // half the sinh exponent
  double beta2 = 0.0;   // half the cosh exponent
};

/// Exponents of the upper (spin) or lower (p-spin) component at energy E. The
/// regular branch takes the root that keeps sinh^{2 gamma2} finite at r = 0.
SpinorExponents spinor_exponents(SpinorComponent component, const DiracContext& ctx,
                                 const PTPotential& pot, double E,
                                 Branch branch = Branch::regular);

/// (2 beta2 + 1/2)_n cosh^{2 beta2}(ar) sinh^{2 gamma2}(ar) 2F1(-n, 2(beta2+gamma2)+n; 2 beta2 + 1/2; sinh^2(ar)).
double spinor_wavefunction(SpinorComponent component, const DiracContext& ctx,
                           const PTPotential& pot, int n, double E, double r,
                           Branch branch = Branch::regular);

}  // namespace ptspec
