#include "ptspec/thermo.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ptspec/error.hpp"
#include "ptspec/specfun.hpp"

namespace ptspec {
namespace {

constexpr double kSeriesSwitch = 0.5;
constexpr double kAsymptoticSwitch = 8.0;

void check(const ThermoContext& ctx, double beta) {
  if (!(ctx.tau > 0.0)) throw Error(ErrorKind::invalid_parameter, "thermo: tau must be > 0");
  if (!std::isfinite(ctx.zeta)) throw Error(ErrorKind::invalid_parameter, "thermo: zeta not finite");
  if (!(beta > 0.0)) throw Error(ErrorKind::domain, "thermo: beta must be > 0");
}

void check_closed(const ThermoContext& ctx, double beta) {
  check(ctx, beta);
  if (!(ctx.zeta > 0.0)) {
    throw Error(ErrorKind::domain, "thermo: closed forms need zeta > 0");
  }
}

// u = F(chi)/chi and q = 1 - u.
struct DawsonRatio {
  double u;
  double q;
};

DawsonRatio dawson_ratio(double chi) {
  const double q = specfun::one_minus_dawson_ratio(chi);
  const double u = chi < kSeriesSwitch ? 1.0 - q : specfun::dawson(chi) / chi;
  return {u, q};
}

// q - 2 chi^2 / 3 = -sum_{k>=2} (-2 chi^2)^k / (2k+1)!!
double q_minus_leading(double chi) {
  const double m = -2.0 * chi * chi;
  double term = m / 3.0;
  double sum = 0.0;
  for (int k = 2; k < 60; ++k) {
    term *= m / (2 * k + 1);
    sum -= term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

// C/k for large chi from the asymptotic Dawson series u = t * sum_k (2k-1)!! t^k,
// t = 1/(2 chi^2). The numerator 2u^2 - u + (2 chi^2 u - 1) starts at 4t^2, so
// it is summed coefficient by coefficient instead of as a difference.
double specific_heat_asymptotic(double chi) {
  constexpr int kTerms = 40;
  const double t = 1.0 / (2.0 * chi * chi);
  std::array<double, kTerms> a{};  // (2k-1)!!
  a[0] = 1.0;
  for (int k = 1; k < kTerms; ++k) a[k] = a[k - 1] * (2 * k - 1);
  double series = 0.0;   // S = sum a_k t^k
  double numerator = 0.0;  // sum_{k>=2} (a_k - a_{k-1} + 2 sum_i a_i a_{k-2-i}) t^{k-2}
  double power = 1.0;
  for (int k = 0; k < kTerms; ++k) {
    const double term = a[k] * power;
    series += term;
    if (k >= 2) {
      double square = 0.0;
      for (int i = 0; i <= k - 2; ++i) square += a[i] * a[k - 2 - i];
      const double c = (a[k] - a[k - 1] + 2.0 * square) * power / (t * t);
      numerator += c;
      if (std::abs(c) <= 1e-18 * std::abs(numerator) && term <= 1e-18 * series) break;
    }
    power *= t;
  }
  return numerator / (4.0 * series * series);
}

}  // namespace

ThermoContext thermo_context(const PTPotential& pot, const NRContext& nr, int l,
                             bool include_l_prefactor) {
  ThermoContext ctx;
  ctx.zeta = level_count(pot, nr, l).zeta;
  ctx.tau = std::sqrt(nr.mu / 2.0) / (pot.alpha * nr.hbar_c);
  if (include_l_prefactor) {
    ctx.l_shift = 2.0 * pot.alpha * pot.alpha * nr.hbar_c * nr.hbar_c / nr.mu * l * (l + 1.0) *
                  nr.d0;
  }
  return ctx;
}

double thermo_chi(const ThermoContext& ctx, double beta) {
  return ctx.zeta * std::sqrt(beta) / ctx.tau;
}

double partition_sum(const ThermoContext& ctx, double beta, int n_max) {
  check(ctx, beta);
  if (n_max < 0) throw Error(ErrorKind::invalid_parameter, "partition_sum: n_max must be >= 0");
  const double scale = std::sqrt(beta) / ctx.tau;
  constexpr double kMaxExponent = 709.0;
  double sum = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    const double y = (n - ctx.zeta) * scale;
    const double exponent = y * y - beta * ctx.l_shift;
    if (exponent > kMaxExponent) {
      throw Error(ErrorKind::overflow,
                  "partition_sum: term exponent " + std::to_string(exponent) + " overflows");
    }
    sum += std::exp(exponent);
  }
  return sum;
}

double partition_sum(const ThermoContext& ctx, double beta) {
  const double z = std::floor(ctx.zeta);
  return partition_sum(ctx, beta, z < 0.0 ? 0 : static_cast<int>(z));
}

double partition_closed(const ThermoContext& ctx, double beta) {
  check_closed(ctx, beta);
  const double chi = thermo_chi(ctx, beta);
  return 0.5 * std::sqrt(std::numbers::pi) * ctx.tau * specfun::erfi(chi) / std::sqrt(beta) *
         std::exp(-beta * ctx.l_shift);
}

double log_partition_closed(const ThermoContext& ctx, double beta) {
  check_closed(ctx, beta);
  const double chi = thermo_chi(ctx, beta);
  // ln Z = ln(tau/sqrt(beta)) + chi^2 + ln F(chi) = ln zeta + chi^2 + ln u
  const DawsonRatio r = dawson_ratio(chi);
  const double ln_u = chi < kSeriesSwitch ? std::log1p(-r.q) : std::log(r.u);
  return std::log(ctx.zeta) + chi * chi + ln_u - beta * ctx.l_shift;
}

double mean_energy(const ThermoContext& ctx, double beta) {
  check_closed(ctx, beta);
  const DawsonRatio r = dawson_ratio(thermo_chi(ctx, beta));
  // (1/(2 beta)) (1 - chi/F) = -q / (2 beta u)
  return -r.q / (2.0 * beta * r.u) + ctx.l_shift;
}

double specific_heat(const ThermoContext& ctx, double beta) {
  check_closed(ctx, beta);
  const double chi = thermo_chi(ctx, beta);
  if (chi >= kAsymptoticSwitch) return ctx.k_B * specific_heat_asymptotic(chi);
  const DawsonRatio r = dawson_ratio(chi);
  const double c2 = chi * chi;
  double numerator = 0.0;
  if (chi < kSeriesSwitch) {
    // 2u^2 - u - 1 + 2 chi^2 u rewritten in q so the O(chi^2) parts cancel exactly
    numerator = -3.0 * q_minus_leading(chi) + 2.0 * r.q * r.q - 2.0 * c2 * r.q;
  } else {
    numerator = 2.0 * r.u * r.u - r.u - 1.0 + 2.0 * c2 * r.u;
  }
  return ctx.k_B * numerator / (4.0 * r.u * r.u);
}

double free_energy(const ThermoContext& ctx, double beta) {
  return -log_partition_closed(ctx, beta) / beta;
}

double entropy(const ThermoContext& ctx, double beta) {
  return ctx.k_B * (log_partition_closed(ctx, beta) + beta * mean_energy(ctx, beta));
}

ThermoPoint thermo_point(const ThermoContext& ctx, double beta) {
  ThermoPoint p;
  p.beta = beta;
  p.chi = thermo_chi(ctx, beta);
  p.lnZ = log_partition_closed(ctx, beta);
  p.Z = p.lnZ > std::log(std::numeric_limits<double>::max())
            ? std::numeric_limits<double>::infinity()
            : std::exp(p.lnZ);
  p.U = mean_energy(ctx, beta);
  p.C = specific_heat(ctx, beta);
  p.F = -p.lnZ / beta;
  p.S = ctx.k_B * (p.lnZ + beta * p.U);
  return p;
}

}  // namespace ptspec
