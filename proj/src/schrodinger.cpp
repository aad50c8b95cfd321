#include "ptspec/schrodinger.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ptspec/error.hpp"
#include "ptspec/specfun.hpp"

namespace ptspec {
namespace {

// Relative size below which a square-root argument is treated as sitting on
// the edge of its domain.
constexpr double kEdgeTolerance = 1e-12;

double checked_sqrt(double arg, const char* what) {
  if (arg < 0.0) {
    throw Error(ErrorKind::discriminant,
                std::string(what) + ": negative square-root argument " + std::to_string(arg));
  }
  return std::sqrt(arg);
}

double log_cosh(double x) {
  const double ax = std::abs(x);
  return ax + std::log1p(std::exp(-2.0 * ax)) - std::numbers::ln2;
}

double log_sinh(double x) {
  // x > 0
  if (x < 1.0) return std::log(std::sinh(x));
  return x + std::log1p(-std::exp(-2.0 * x)) - std::numbers::ln2;
}

struct Roots {
  double well;  // sqrt(1 - 8 mu A / (alpha hbar)^2) = sqrt(1 - 4 A1/alpha^2)
  double core;  // sqrt((2l+1)^2 + 8 mu B / (alpha hbar)^2) = sqrt(1 + 4 B1/alpha^2)
  bool edge;
};

Roots radial_roots(const PTPotential& pot, const NRContext& ctx, int l) {
  const double x = 4.0 * ctx.two_mu_over_hbar2() / (pot.alpha * pot.alpha);
  const double well_arg = 1.0 - x * pot.A;
  const double core_arg = (2.0 * l + 1.0) * (2.0 * l + 1.0) + x * pot.B;
  Roots roots{checked_sqrt(well_arg, "energy_nr (well term)"),
              checked_sqrt(core_arg, "energy_nr (core term)"), false};
  roots.edge = well_arg <= kEdgeTolerance * (1.0 + std::abs(x * pot.A)) ||
               core_arg <= kEdgeTolerance * (1.0 + std::abs(x * pot.B));
  return roots;
}

void validate(const PTPotential& pot, const NRContext& ctx, int n, int l) {
  if (!(pot.alpha > 0.0)) throw Error(ErrorKind::invalid_parameter, "alpha must be > 0");
  if (!(ctx.mu > 0.0)) throw Error(ErrorKind::invalid_parameter, "mu must be > 0");
  if (n < 0 || l < 0) throw Error(ErrorKind::invalid_parameter, "n and l must be >= 0");
}

}  // namespace

NRContext NRContext::from_amu(double mu_amu, double amu_to_ev, double hbar_c) {
  return NRContext{mu_amu * amu_to_ev, hbar_c, kD0};
}

std::string describe_flags(std::uint8_t flags) {
  std::string out;
  auto add = [&](LevelFlag f, const char* name) {
    if (flags & static_cast<std::uint8_t>(f)) {
      if (!out.empty()) out += '|';
      out += name;
    }
  };
  add(LevelFlag::discriminant_edge, "discriminant_edge");
  add(LevelFlag::beyond_nmax, "beyond_nmax");
  add(LevelFlag::oracle_mismatch, "oracle_mismatch");
  return out;
}

double potential_value(const PTPotential& pot, double r) {
  if (r < 0.0 || std::isnan(r)) throw Error(ErrorKind::domain, "potential_value: r must be >= 0");
  const double x = pot.alpha * r;
  if (x == 0.0) {
    if (pot.B != 0.0) {
      throw Error(ErrorKind::singular_origin, "potential_value: B / sinh^2 diverges at r = 0");
    }
    return pot.A;
  }
  const double sech = 1.0 / std::cosh(x);
  const double csch = 1.0 / std::sinh(x);
  return pot.A * sech * sech + pot.B * csch * csch;
}

double centrifugal_approx_residual(int l, double alpha, double r) {
  if (l < 1) throw Error(ErrorKind::invalid_parameter, "centrifugal residual needs l >= 1");
  if (!(r > 0.0)) throw Error(ErrorKind::domain, "centrifugal residual needs r > 0");
  const double x = std::abs(alpha * r);
  if (x < 0.25) {
    // 1/x^2 - 1/3 - 1/sinh^2 x = -x^2/15 + 2x^4/189 - x^6/675 + 2x^8/10395 - ...
    const double x2 = x * x;
    return x2 * (-1.0 / 15.0 +
                 x2 * (2.0 / 189.0 +
                       x2 * (-1.0 / 675.0 + x2 * (2.0 / 10395.0 - x2 * 1382.0 / 58046625.0))));
  }
  const double csch = 1.0 / std::sinh(x);
  return 1.0 / (x * x) - (4.0 * kD0 + csch * csch);
}

SpectralParams spectral_params(const PTPotential& pot, const NRContext& ctx, int l,
                               Branch branch) {
  validate(pot, ctx, 0, l);
  const double a2 = pot.alpha * pot.alpha;
  SpectralParams p;
  p.A1 = ctx.two_mu_over_hbar2() * pot.A;
  p.B1 = ctx.two_mu_over_hbar2() * pot.B + l * (l + 1.0) * a2;
  const double well = checked_sqrt(1.0 - 4.0 * p.A1 / a2, "spectral_params (gamma)");
  const double core = checked_sqrt(1.0 + 4.0 * p.B1 / a2, "spectral_params (beta)");
  if (branch == Branch::irregular) {
    p.gamma = 0.5 * (1.0 + well);
    p.beta = 0.5 * (1.0 - core);
  } else {
    p.gamma = 0.5 * (1.0 - well);
    p.beta = 0.5 * (1.0 + core);
  }
  return p;
}

EnergyLevel energy_nr(const PTPotential& pot, const NRContext& ctx, int n, int l,
                      Branch branch) {
  validate(pot, ctx, n, l);
  const Roots roots = radial_roots(pot, ctx, l);
  const double prefactor = 2.0 * pot.alpha * pot.alpha * ctx.hbar_c * ctx.hbar_c / ctx.mu;
  const double shift = branch == Branch::irregular ? 0.25 * roots.well - 0.25 * roots.core
                                               : 0.25 * roots.core - 0.25 * roots.well;
  const double bracket = n + 0.5 + shift;

  EnergyLevel level{n, l, prefactor * (l * (l + 1.0) * ctx.d0 - bracket * bracket), 0};
  if (roots.edge) level.set(LevelFlag::discriminant_edge);
  const int bound = branch == Branch::irregular ? level_count(pot, ctx, l).n_max
                                            : regular_level_count(pot, ctx, l);
  if (n >= bound) level.set(LevelFlag::beyond_nmax);
  return level;
}

LevelCount level_count(const PTPotential& pot, const NRContext& ctx, int l) {
  validate(pot, ctx, 0, l);
  const double x = 8.0 * ctx.mu / (pot.alpha * pot.alpha * ctx.hbar_c * ctx.hbar_c);
  LevelCount out;
  out.zeta = 0.25 * checked_sqrt(1.0 + x * pot.B, "level_count (B term)") -
             0.25 * checked_sqrt(1.0 - x * pot.A, "level_count (A term)") - 0.5 +
             std::sqrt(l * (l + 1.0) * ctx.d0);
  if (out.zeta <= 0.0) {
    out.n_max = 0;
    out.diagnostics.push_back("zeta = " + std::to_string(out.zeta) +
                              " <= 0: no level satisfies n < zeta");
  } else {
    out.n_max = static_cast<int>(std::floor(out.zeta));
  }
  return out;
}

int regular_level_count(const PTPotential& pot, const NRContext& ctx, int l) {
  const SpectralParams p = spectral_params(pot, ctx, l, Branch::regular);
  // gamma + beta + 2n < 0
  const double s = p.gamma + p.beta;
  if (s >= 0.0) return 0;
  return static_cast<int>(std::ceil(-s / 2.0));
}

double wavefunction_nr(const PTPotential& pot, const NRContext& ctx, int n, int l, double r,
                       const WavefunctionOptions& options) {
  validate(pot, ctx, n, l);
  if (!(r > 0.0)) throw Error(ErrorKind::domain, "wavefunction_nr: r must be > 0");
  const SpectralParams p = spectral_params(pot, ctx, l, options.branch);
  const double x = pot.alpha * r;
  if (p.beta < 0.0 && x <= 1e-8) {
    throw Error(ErrorKind::singular_origin,
                "wavefunction_nr: sinh exponent " + std::to_string(p.beta) +
                    " diverges at the origin");
  }
  const double envelope = std::exp(p.gamma * log_cosh(x) + p.beta * log_sinh(x));
  const double sh = std::sinh(x);
  if (options.form == HypergeometricForm::as_printed) {
    const double prefactor = std::pow(-2.0, n) * specfun::pochhammer(p.beta + 1.0, n);
    return prefactor * envelope *
           specfun::hyp2f1_terminating(n, p.beta + p.gamma + n, p.beta + 1.0, -sh);
  }
  return envelope * specfun::hyp2f1_terminating(n, p.beta + p.gamma + n, p.beta + 0.5, -sh * sh);
}

}  // namespace ptspec
