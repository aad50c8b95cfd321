#include "ptspec/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ptspec/error.hpp"

namespace ptspec::specfun {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Below this |x| erfi uses its power series (all terms positive); above it the
// asymptotic expansion, whose smallest term is ~e^{-x^2}.
constexpr double kErfiSeriesLimit = 6.5;

double erfi_series(double x) {
  const double x2 = x * x;
  double power = x;  // x^{2k+1}/k!
  double sum = x;
  for (int k = 1; k < 2000; ++k) {
    power *= x2 / k;
    const double term = power / (2 * k + 1);
    sum += term;
    if (term < 0.25 * kEps * sum) break;
  }
  return 2.0 / std::sqrt(std::numbers::pi) * sum;
}

// sum_k (2k-1)!! / (2x^2)^k, truncated before the terms start growing.
double asymptotic_tail(double x) {
  const double inv = 1.0 / (2.0 * x * x);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double next = term * (2 * k - 1) * inv;
    if (next > term) break;
    term = next;
    sum += term;
    if (term < 0.25 * kEps * sum) break;
  }
  return sum;
}

// Rybicki's sampling-theorem representation with step h = 0.1; truncation of
// the Gaussian weights at e^{-(2i+1)^2 h^2} < 1e-18 and aliasing error
// ~exp(-(pi/2h)^2) are both far below double precision.
constexpr double kRybickiStep = 0.1;
constexpr int kRybickiTerms = 34;

const std::array<double, kRybickiTerms>& rybicki_weights() {
  static const std::array<double, kRybickiTerms> weights = [] {
    std::array<double, kRybickiTerms> w{};
    for (int i = 0; i < kRybickiTerms; ++i) {
      const double t = (2 * i + 1) * kRybickiStep;
      w[i] = std::exp(-t * t);
    }
    return w;
  }();
  return weights;
}

double dawson_taylor(double x) {
  // F(x) = x sum_k (-2x^2)^k / (2k+1)!!
  const double m = -2.0 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    term *= m / (2 * k + 1);
    sum += term;
    if (std::abs(term) < 0.25 * kEps * std::abs(sum)) break;
  }
  return x * sum;
}

}  // namespace

double erf(double x) { return std::erf(x); }

double erfi(double x) {
  if (!std::isfinite(x)) {
    throw Error(ErrorKind::domain, "erfi: non-finite argument");
  }
  const double ax = std::abs(x);
  if (ax > kErfiMaxArgument) {
    throw Error(ErrorKind::overflow,
                "erfi: |x| = " + std::to_string(ax) + " exceeds overflow threshold 26");
  }
  const double value = ax < kErfiSeriesLimit
                           ? erfi_series(ax)
                           : std::exp(ax * ax) / (ax * std::sqrt(std::numbers::pi)) *
                                 asymptotic_tail(ax);
  return x < 0 ? -value : value;
}

double log_erfi(double x) {
  if (!(x > 0.0)) throw Error(ErrorKind::domain, "log_erfi: requires x > 0");
  if (x < 1.0) return std::log(erfi(x));
  return std::log(2.0 / std::sqrt(std::numbers::pi)) + x * x + std::log(dawson(x));
}

double dawson(double x) {
  if (!std::isfinite(x)) {
    throw Error(ErrorKind::domain, "dawson: non-finite argument");
  }
  const double ax = std::abs(x);
  if (ax < 0.2) return dawson_taylor(x);
  if (ax > 1e7) {
    // Rybicki's offset index overflows int long before this; the tail is exact.
    return 1.0 / (2.0 * x) * asymptotic_tail(ax);
  }

  const auto& w = rybicki_weights();
  const double h = kRybickiStep;
  const double n0 = 2.0 * std::nearbyint(0.5 * ax / h);
  const double xp = ax - n0 * h;
  double e1 = std::exp(2.0 * xp * h);
  const double e2 = e1 * e1;
  double d1 = n0 + 1.0;
  double d2 = d1 - 2.0;
  CompensatedSum sum;
  for (int i = 0; i < kRybickiTerms; ++i) {
    sum.add(w[i] * (e1 / d1 + 1.0 / (d2 * e1)));
    d1 += 2.0;
    d2 -= 2.0;
    e1 *= e2;
  }
  const double value = std::exp(-xp * xp) * sum.value() / std::sqrt(std::numbers::pi);
  return x < 0 ? -value : value;
}

double one_minus_dawson_ratio(double x) {
  const double ax = std::abs(x);
  if (ax >= 0.5) return 1.0 - dawson(ax) / ax;
  // -sum_{k>=1} (-2x^2)^k / (2k+1)!!
  const double m = -2.0 * ax * ax;
  double term = 1.0;
  double sum = 0.0;
  for (int k = 1; k < 60; ++k) {
    term *= m / (2 * k + 1);
    sum -= term;
    if (std::abs(term) < 0.25 * kEps * std::abs(sum)) break;
  }
  return sum;
}

double ln_gamma(double x) {
  if (!(x > 0.0)) {
    throw Error(ErrorKind::domain, "ln_gamma: requires x > 0");
  }
  return std::lgamma(x);
}

double pochhammer(double s, int n) {
  if (n < 0) throw Error(ErrorKind::invalid_parameter, "pochhammer: n must be >= 0");
  double product = 1.0;
  for (int k = 0; k < n; ++k) product *= s + k;
  return product;
}

double hyp2f1_terminating(const TerminatingHypergeometricSpec& spec) {
  const auto [n, b, c, z] = spec;
  if (n < 0) {
    throw Error(ErrorKind::invalid_parameter, "hyp2f1_terminating: n must be >= 0");
  }
  for (int k = 0; k < n; ++k) {
    if (c + k == 0.0) {
      throw Error(ErrorKind::invalid_parameter,
                  "hyp2f1_terminating: c + " + std::to_string(k) +
                      " vanishes inside the summation range");
    }
  }
  CompensatedSum sum;
  double term = 1.0;
  sum.add(term);
  for (int k = 0; k < n; ++k) {
    term *= (k - n) * (b + k) / ((c + k) * (k + 1)) * z;
    sum.add(term);
  }
  const double value = sum.value();
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::overflow, "hyp2f1_terminating: non-finite result");
  }
  return value;
}

}  // namespace ptspec::specfun
