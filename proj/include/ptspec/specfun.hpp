#pragma once

namespace ptspec::specfun {

/// Largest |x| accepted by erfi; e^{x^2} stays inside double range up to here.
inline constexpr double kErfiMaxArgument = 26.0;

double erf(double x);

/// Imaginary error function. Throws Error(overflow) for |x| > kErfiMaxArgument.
double erfi(double x);

/// ln erfi(x) for x > 0, valid far beyond the erfi overflow threshold.
double log_erfi(double x);

/// Dawson integral F(x) = e^{-x^2} \int_0^x e^{y^2} dy.
double dawson(double x);

/// 1 - F(x)/x, accurate when x is small (where the direct difference cancels).
double one_minus_dawson_ratio(double x);

double ln_gamma(double x);

/// Rising factorial s(s+1)...(s+n-1), defined for every real s.
double pochhammer(double s, int n);

struct TerminatingHypergeometricSpec {
  int n = 0;
  double b = 0.0;
  double c = 1.0;
  double z = 0.0;
};

/// 2F1(-n, b; c; z) as the finite sum of n+1 terms.
double hyp2f1_terminating(const TerminatingHypergeometricSpec& spec);

inline double hyp2f1_terminating(int n, double b, double c, double z) {
  return hyp2f1_terminating(TerminatingHypergeometricSpec{n, b, c, z});
}

}  // namespace ptspec::specfun
