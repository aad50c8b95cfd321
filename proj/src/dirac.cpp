#include "ptspec/dirac.hpp"

#include <cmath>
#include <functional>
#include <string>

#include "ptspec/error.hpp"
#include "ptspec/specfun.hpp"

namespace ptspec {
namespace {

// alpha expressed as an energy (natural units: alpha itself).
double alpha_energy(const DiracContext& ctx, const PTPotential& pot) {
  return ctx.units == DiracUnits::natural ? pot.alpha : pot.alpha * ctx.hbar_c;
}

void check_inputs(const DiracContext& ctx, const PTPotential& pot, int n) {
  if (ctx.kappa == 0) throw Error(ErrorKind::invalid_parameter, "kappa must be nonzero");
  if (n < 0) throw Error(ErrorKind::invalid_parameter, "n must be >= 0");
  if (!(pot.alpha > 0.0)) throw Error(ErrorKind::invalid_parameter, "alpha must be > 0");
}

// 4a^2 [d0 k(k -/+ 1) - (n + 1/2 + sqrt(r1)/4 - sqrt(r2)/4)^2] + other * x
std::optional<double> residual_core(Symmetry symmetry, double other, double x, double a,
                                    double A, double B, int kappa, double d0, int n) {
  const double a2 = a * a;
  double r1 = 0.0;
  double r2 = 0.0;
  double centrifugal = 0.0;
  if (symmetry == Symmetry::pspin) {
    r1 = 1.0 + 4.0 * A / a2 * x;
    r2 = (2.0 * kappa - 1.0) * (2.0 * kappa - 1.0) - 4.0 * B / a2 * x;
    centrifugal = d0 * kappa * (kappa - 1.0);
  } else {
    r1 = 1.0 - 4.0 * A / a2 * x;
    r2 = (2.0 * kappa + 1.0) * (2.0 * kappa + 1.0) + 4.0 * B / a2 * x;
    centrifugal = d0 * kappa * (kappa + 1.0);
  }
  if (r1 < 0.0 || r2 < 0.0) return std::nullopt;
  const double bracket = n + 0.5 + 0.25 * (std::sqrt(r1) - std::sqrt(r2));
  return 4.0 * a2 * (centrifugal - bracket * bracket) + other * x;
}

using Residual = std::function<std::optional<double>(double)>;

struct Bracketed {
  double root;
  double lo;
  double hi;
  double residual;
};

double refine(const Residual& f, double lo, double hi, double flo, double tol) {
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (hi - lo <= tol * std::max(1.0, std::abs(mid))) break;
    const auto fm = f(mid);
    // The real-valued domain is an interval, so an interior point of a cell
    // with real endpoints is real as well.
    if (!fm) break;
    if (*fm == 0.0) return mid;
    if ((*fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = *fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<Bracketed> scan(const Residual& f, double lo, double hi, double tol,
                            int grid_points) {
  if (!(lo < hi)) throw Error(ErrorKind::invalid_parameter, "solve_levels: need lo < hi");
  if (!(tol > 0.0)) throw Error(ErrorKind::invalid_parameter, "solve_levels: need tol > 0");
  if (grid_points < 2) throw Error(ErrorKind::invalid_parameter, "solve_levels: grid too small");
  std::vector<Bracketed> out;
  const double step = (hi - lo) / (grid_points - 1);
  std::optional<double> prev;
  double prev_x = lo;
  bool any_real = false;
  for (int i = 0; i < grid_points; ++i) {
    const double x = i == grid_points - 1 ? hi : lo + step * i;
    const auto fx = f(x);
    if (fx) {
      any_real = true;
      if (*fx == 0.0) {
        out.push_back({x, x, x, 0.0});
      } else if (prev && *prev != 0.0 && ((*prev < 0.0) != (*fx < 0.0))) {
        const double root = refine(f, prev_x, x, *prev, tol);
        out.push_back({root, prev_x, x, f(root).value_or(std::nan(""))});
      }
    }
    prev = fx;
    prev_x = x;
  }
  if (!any_real) {
    throw Error(ErrorKind::complex_domain,
                "solve_levels: residual is complex on the whole bracket");
  }
  return out;
}

}  // namespace

std::optional<double> dirac_residual_split(Symmetry symmetry, double sum, double diff,
                                           const DiracContext& ctx, const PTPotential& pot,
                                           int n) {
  check_inputs(ctx, pot, n);
  const double a = alpha_energy(ctx, pot);
  if (symmetry == Symmetry::pspin) {
    return residual_core(symmetry, sum, diff + ctx.Cps, a, pot.A, pot.B, ctx.kappa, ctx.d0, n);
  }
  return residual_core(symmetry, diff, sum - ctx.Cs, a, pot.A, pot.B, ctx.kappa, ctx.d0, n);
}

std::optional<double> dirac_residual(Symmetry symmetry, double E, const DiracContext& ctx,
                                     const PTPotential& pot, int n) {
  return dirac_residual_split(symmetry, ctx.M + E, ctx.M - E, ctx, pot, n);
}

std::optional<double> pspin_residual(double E, const DiracContext& ctx, const PTPotential& pot,
                                     int n) {
  return dirac_residual(Symmetry::pspin, E, ctx, pot, n);
}

std::optional<double> spin_residual(double E, const DiracContext& ctx, const PTPotential& pot,
                                    int n) {
  return dirac_residual(Symmetry::spin, E, ctx, pot, n);
}

std::vector<RelativisticRoot> solve_levels(const DiracContext& ctx, const PTPotential& pot,
                                           int n, Symmetry symmetry, double lo, double hi,
                                           double tol, const DiracScanOptions& options) {
  check_inputs(ctx, pot, n);
  const Residual f = [&](double E) { return dirac_residual(symmetry, E, ctx, pot, n); };
  const double excluded_energy = symmetry == Symmetry::pspin ? -ctx.M : ctx.M;
  std::vector<RelativisticRoot> roots;
  for (const Bracketed& b : scan(f, lo, hi, tol, options.grid_points)) {
    RelativisticRoot root{n, ctx.kappa, b.root, symmetry, b.lo, b.hi, b.residual, false};
    root.excluded = std::abs(b.root - excluded_energy) <=
                    10.0 * tol * std::max(1.0, std::abs(excluded_energy));
    roots.push_back(root);
  }
  return roots;
}

std::vector<RelativisticRoot> solve_spin_binding(const DiracContext& ctx,
                                                 const PTPotential& pot, int n, double lo,
                                                 double hi, double tol,
                                                 const DiracScanOptions& options) {
  check_inputs(ctx, pot, n);
  const Residual f = [&](double eps) {
    return dirac_residual_split(Symmetry::spin, 2.0 * ctx.M + eps, -eps, ctx, pot, n);
  };
  std::vector<RelativisticRoot> roots;
  for (const Bracketed& b : scan(f, lo, hi, tol, options.grid_points)) {
    RelativisticRoot root{n, ctx.kappa, b.root, Symmetry::spin, b.lo, b.hi, b.residual, false};
    root.excluded = std::abs(b.root) <= 10.0 * tol;
    roots.push_back(root);
  }
  return roots;
}

std::optional<double> special_case_residual(SpecialCase kind, double E,
                                            const SpecialCaseParams& p) {
  const double lhs = (p.M - E) * (p.M + E);
  double a = p.alpha;
  double bracket = 0.0;
  auto root_or_null = [](double arg) -> std::optional<double> {
    if (arg < 0.0) return std::nullopt;
    return std::sqrt(arg);
  };
  std::optional<double> s1;
  std::optional<double> s2;
  switch (kind) {
    case SpecialCase::swave_pspin:
      s1 = root_or_null(1.0 + 4.0 * p.A / (a * a) * (p.M - E));
      s2 = root_or_null(1.0 - 4.0 * p.B / (a * a) * (p.M - E));
      if (!s1 || !s2) return std::nullopt;
      bracket = p.n + 0.5 + 0.25 * *s1 - 0.25 * *s2;
      break;
    case SpecialCase::swave_spin:
      s1 = root_or_null(1.0 - 4.0 * p.A / (a * a) * (p.M + E));
      s2 = root_or_null(1.0 + 4.0 * p.B / (a * a) * (p.M + E));
      if (!s1 || !s2) return std::nullopt;
      bracket = p.n + 0.5 + 0.25 * *s1 - 0.25 * *s2;
      break;
    case SpecialCase::reflectionless_pspin:
      s1 = root_or_null(1.0 - 2.0 * p.eta * (p.eta + 1.0) / (a * a) * (p.M - E));
      if (!s1) return std::nullopt;
      bracket = p.n + 0.25 + 0.25 * *s1;
      break;
    case SpecialCase::reflectionless_spin:
      s1 = root_or_null(1.0 + 2.0 * p.eta * (p.eta + 1.0) / (a * a) * (p.M + E));
      if (!s1) return std::nullopt;
      bracket = p.n + 0.25 + 0.25 * *s1;
      break;
    case SpecialCase::hyperbolic_mpt_pspin:
      a = 1.0;
      s1 = root_or_null(1.0 + (1.0 - 4.0 * p.eta * p.eta) * (p.M - E));
      if (!s1) return std::nullopt;
      bracket = p.n + 0.25 + 0.25 * *s1;
      break;
    case SpecialCase::hyperbolic_mpt_spin:
      a = 1.0;
      s1 = root_or_null(1.0 - (1.0 - 4.0 * p.eta * p.eta) * (p.M + E));
      if (!s1) return std::nullopt;
      bracket = p.n + 0.25 + 0.25 * *s1;
      break;
  }
  return lhs - 4.0 * a * a * bracket * bracket;
}

GeneralSubstitution special_case_substitution(SpecialCase kind, const SpecialCaseParams& p) {
  DiracContext ctx;
  ctx.M = p.M;
  ctx.Cps = 0.0;
  ctx.Cs = 0.0;
  PTPotential pot{p.A, p.B, p.alpha};
  Symmetry symmetry = Symmetry::pspin;
  switch (kind) {
    case SpecialCase::swave_pspin:
      break;
    case SpecialCase::swave_spin:
      symmetry = Symmetry::spin;
      break;
    case SpecialCase::reflectionless_pspin:
    case SpecialCase::reflectionless_spin:
      pot = PTPotential{-0.5 * p.eta * (p.eta + 1.0), 0.0, p.alpha};
      symmetry = kind == SpecialCase::reflectionless_spin ? Symmetry::spin : Symmetry::pspin;
      break;
    case SpecialCase::hyperbolic_mpt_pspin:
    case SpecialCase::hyperbolic_mpt_spin:
      pot = PTPotential{0.25 - p.eta * p.eta, 0.0, 1.0};
      symmetry = kind == SpecialCase::hyperbolic_mpt_spin ? Symmetry::spin : Symmetry::pspin;
      break;
  }
  ctx.kappa = symmetry == Symmetry::pspin ? 1 : -1;
  return {symmetry, ctx, pot, p.n};
}

double nr_limit(const PTPotential& pot, double mu, int n, int l) {
  if (!(mu > 0.0)) throw Error(ErrorKind::invalid_parameter, "nr_limit: mu must be > 0");
  DiracContext ctx;
  ctx.M = mu;  // only sum and diff enter below
  ctx.Cs = 0.0;
  ctx.kappa = l == 0 ? -1 : l;
  // With M + E -> 2 mu the residual is linear in M - E -> -E_nl:
  // R = R(diff = 0) - 2 mu E_nl.
  const auto base = dirac_residual_split(Symmetry::spin, 2.0 * mu, 0.0, ctx, pot, n);
  if (!base) throw Error(ErrorKind::discriminant, "nr_limit: negative square-root argument");
  return *base / (2.0 * mu);
}

double nr_energy_general(const PTPotential& pot, double mu, int n, int l) {
  const double a2 = pot.alpha * pot.alpha;
  const double well = 1.0 - 8.0 * mu * pot.A / a2;
  const double core = (2.0 * l + 1.0) * (2.0 * l + 1.0) + 8.0 * mu * pot.B / a2;
  if (well < 0.0 || core < 0.0) {
    throw Error(ErrorKind::discriminant, "nr_energy_general: negative square-root argument");
  }
  const double bracket = n + 0.5 + 0.25 * std::sqrt(well) - 0.25 * std::sqrt(core);
  return 2.0 * a2 / mu * (l * (l + 1.0) * kD0 - bracket * bracket);
}

double nr_energy_reflectionless(double eta, double alpha, double mu, int n) {
  const double arg = 1.0 + 4.0 * mu * eta * (eta + 1.0) / (alpha * alpha);
  if (arg < 0.0) throw Error(ErrorKind::discriminant, "nr_energy_reflectionless: negative root");
  const double bracket = n + 0.25 + 0.25 * std::sqrt(arg);
  return -2.0 * alpha * alpha / mu * bracket * bracket;
}

double nr_energy_hyperbolic(double eta, double mu, int n) {
  const double arg = 1.0 - 2.0 * mu * (1.0 - 4.0 * eta * eta);
  if (arg < 0.0) throw Error(ErrorKind::discriminant, "nr_energy_hyperbolic: negative root");
  const double bracket = n + 0.25 + 0.25 * std::sqrt(arg);
  return -2.0 / mu * bracket * bracket;
}

SpinorExponents spinor_exponents(SpinorComponent component, const DiracContext& ctx,
                                 const PTPotential& pot, double E, Branch branch) {
  check_inputs(ctx, pot, 0);
  const double a = alpha_energy(ctx, pot);
  const double a2 = a * a;
  SpinorExponents ex;
  if (component == SpinorComponent::lower) {
    const double x = E - ctx.M - ctx.Cps;
    ex.a3 = x * pot.A / a2;
    ex.b3 = x * pot.B / a2 + ctx.kappa * (ctx.kappa - 1.0);
  } else {
    const double x = E + ctx.M - ctx.Cs;
    ex.a3 = x * pot.A / a2;
    ex.b3 = x * pot.B / a2 + ctx.kappa * (ctx.kappa + 1.0);
  }
  const double ra = 1.0 - 4.0 * ex.a3;
  const double rb = 1.0 + 4.0 * ex.b3;
  if (ra < 0.0 || rb < 0.0) {
    throw Error(ErrorKind::discriminant, "spinor_exponents: negative square-root argument");
  }
  ex.beta2 = 0.25 * (1.0 - std::sqrt(ra));
  ex.gamma2 = branch == Branch::regular ? 0.25 * (1.0 + std::sqrt(rb))
                                        : 0.25 * (1.0 - std::sqrt(rb));
  return ex;
}

double spinor_wavefunction(SpinorComponent component, const DiracContext& ctx,
                           const PTPotential& pot, int n, double E, double r, Branch branch) {
  check_inputs(ctx, pot, n);
  if (!(r > 0.0)) throw Error(ErrorKind::domain, "spinor_wavefunction: r must be > 0");
  const SpinorExponents ex = spinor_exponents(component, ctx, pot, E, branch);
  const double x = pot.alpha * r;
  if (ex.gamma2 < 0.0 && x <= 1e-8) {
    throw Error(ErrorKind::singular_origin,
                "spinor_wavefunction: sinh exponent diverges at the origin");
  }
  const double sh = std::sinh(x);
  const double c = 2.0 * ex.beta2 + 0.5;
  const double prefactor = specfun::pochhammer(c, n);
  const double envelope =
      std::exp(2.0 * ex.beta2 * std::log(std::cosh(x)) + 2.0 * ex.gamma2 * std::log(sh));
  return prefactor * envelope *
         specfun::hyp2f1_terminating(n, 2.0 * (ex.beta2 + ex.gamma2) + n, c, sh * sh);
}

}  // namespace ptspec
