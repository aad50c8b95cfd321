#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ptspec {

inline constexpr double kDefaultHbarC = 1973.29;          // eV * Angstrom
inline constexpr double kDefaultAmuToEv = 931.494061e6;   // eV / c^2 per amu
inline constexpr double kD0 = 1.0 / 12.0;

/// V(r) = A / cosh^2(alpha r) + B / sinh^2(alpha r).
///
/// Bound-state routines expect A < 0 (well) and B >= 0 (core); other signs
/// are accepted and surfaced through diagnostics, since special cases use B = 0.
/// Radial routines work on r in (0, inf).
struct PTPotential {
  double A = 0.0;      // eV
  double B = 0.0;      // eV
  double alpha = 1.0;  // 1 / Angstrom
};

/// Mass and unit constants of the nonrelativistic problem. With hbar_c = 1 and
/// `mu` in the same units as A, B this is the hbar = 1 system.
struct NRContext {
  double mu = 1.0;  // reduced mass energy mu c^2, eV
  double hbar_c = kDefaultHbarC;
  double d0 = kD0;

  static NRContext from_amu(double mu_amu, double amu_to_ev = kDefaultAmuToEv,
                            double hbar_c = kDefaultHbarC);

  /// 2 mu / hbar^2 in 1 / (eV Angstrom^2).
  double two_mu_over_hbar2() const noexcept { return 2.0 * mu / (hbar_c * hbar_c); }
};

/// Which pair of Frobenius exponents dresses the polynomial part.
///   irregular: gamma = (1 + sqrt(1 - 4A1/a^2))/2, beta = (1 - sqrt(1 + 4B1/a^2))/2
///   regular: gamma = (1 - sqrt(1 - 4A1/a^2))/2, beta = (1 + sqrt(1 + 4B1/a^2))/2
/// The regular pair is finite at r = 0 and decays at infinity.
enum class Branch : std::uint8_t { irregular, regular };

struct SpectralParams {
  double gamma = 0.0;
  double beta = 0.0;
  double A1 = 0.0;  // 1 / Angstrom^2
  double B1 = 0.0;
};

enum class LevelFlag : std::uint8_t {
  discriminant_edge = 1U << 0,
  beyond_nmax = 1U << 1,
  oracle_mismatch = 1U << 2,
};

struct EnergyLevel {
  int n = 0;
  int l = 0;
  double E = 0.0;  // eV
  std::uint8_t flags = 0;

  bool has(LevelFlag f) const noexcept { return (flags & static_cast<std::uint8_t>(f)) != 0; }
  void set(LevelFlag f) noexcept { flags |= static_cast<std::uint8_t>(f); }
};

std::string describe_flags(std::uint8_t flags);

double potential_value(const PTPotential& pot, double r);

/// 1/(alpha r)^2 - [4 d0 + 1/sinh^2(alpha r)]; the error of the centrifugal
/// approximation per unit alpha^2. Requires l >= 1 and r > 0.
double centrifugal_approx_residual(int l, double alpha, double r);

SpectralParams spectral_params(const PTPotential& pot, const NRContext& ctx, int l,
                               Branch branch = Branch::irregular);

/// Bound-state energy with the centrifugal approximation. The irregular branch is
/// the closed form printed for this model; the regular branch is the
/// spectrum of the physically regular solution and is what a shooting solver
/// reproduces.
EnergyLevel energy_nr(const PTPotential& pot, const NRContext& ctx, int n, int l,
                      Branch branch = Branch::irregular);

struct LevelCount {
  double zeta = 0.0;
  int n_max = 0;
  std::vector<std::string> diagnostics;
};

/// zeta = sqrt(1 + 8muB/(a hbar)^2)/4 - sqrt(1 - 8muA/(a hbar)^2)/4 - 1/2 + sqrt(l(l+1) d0),
/// n_max = floor(zeta), clamped to 0 (with a diagnostic) when zeta <= 0.
LevelCount level_count(const PTPotential& pot, const NRContext& ctx, int l);

/// Number of regular-branch bound states for angular momentum l
/// (levels with gamma + beta + 2n < 0).
int regular_level_count(const PTPotential& pot, const NRContext& ctx, int l);

enum class HypergeometricForm : std::uint8_t {
  /// 2F1(-n, beta+gamma+n; beta+1; -sinh(ar)) with the (-2)^n (beta+1)_n prefactor.
  as_printed,
  /// 2F1(-n, beta+gamma+n; beta+1/2; -sinh^2(ar)), the polynomial that solves
  /// the transformed radial equation.
  ode_consistent,
};

struct WavefunctionOptions {
  Branch branch = Branch::regular;
  HypergeometricForm form = HypergeometricForm::ode_consistent;
};

/// Unnormalized radial function cosh^gamma sinh^beta * 2F1(...).
/// Throws Error(singular_origin) for a negative sinh exponent at alpha r <= 1e-8.
double wavefunction_nr(const PTPotential& pot, const NRContext& ctx, int n, int l, double r,
                       const WavefunctionOptions& options = {});

}  // namespace ptspec
