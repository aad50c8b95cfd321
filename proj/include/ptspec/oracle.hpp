#pragma once

#include <functional>

namespace ptspec::oracle {

using RealFunction = std::function<double(double)>;

struct QuadratureOptions {
  int max_intervals = 4000;
};

/// Adaptive Gauss-Kronrod (7/15) on [a, b]; stops once the summed error
/// estimate is below max(tol, tol * |I|). Throws ConvergenceError carrying the
/// best estimate when the interval budget runs out.
double quadrature(const RealFunction& f, double a, double b, double tol,
                  const QuadratureOptions& options = {});

/// The same on [a, inf), through x = a + t / (1 - t).
double quadrature_to_infinity(const RealFunction& f, double a, double tol,
                              const QuadratureOptions& options = {});

struct Derivative {
  double value = 0.0;
  double error = 0.0;
};

/// Central differences of order 1 or 2 with Richardson extrapolation over a
/// shrinking step sequence starting at h (Ridders' tableau).
Derivative finite_difference(const RealFunction& f, double x, int order, double h);

/// u''(r) = scale * (W(r) - E) u(r) on (r_min, r_max) with u ~ r^origin_power at
/// the inner end and u(r_max) = 0.
struct RadialProblem {
  RealFunction potential;
  double scale = 1.0;
  double origin_power = 1.0;
  double r_min = 1e-6;
  double r_max = 30.0;
  int mesh_points = 4000;
};

/// u'' = [A1/cosh^2(ar) + B1/sinh^2(ar) - K1] u with eigenvalue K1.
RadialProblem pt_radial_problem(double A1, double B1, double alpha, double r_max);

/// u'' = [A1/cosh^2(ar) + Bcore/sinh^2(ar) + l(l+1)/r^2 - K] u without the
/// centrifugal approximation.
RadialProblem pt_raw_radial_problem(double A1, double Bcore, double alpha, int l, double r_max);

struct ShootingOptions {
  int max_refinements = 7;
  int max_bisections = 200;
};

struct ShootingResult {
  double E = 0.0;
  double error_estimate = 0.0;  // change under the last mesh halving
  int mesh_points = 0;
  int nodes = 0;
};

/// Level n (n interior nodes) inside [lo, hi]. Node counting isolates the
/// level, bisection on the log-derivative mismatch at the outer turning point
/// refines it, and the mesh is halved until E moves by less than
/// tol * |E|. Errors: node_count_mismatch when [lo, hi] does not hold
/// level n, ConvergenceError when mesh halving does not settle.
ShootingResult shoot_eigenvalue(const RadialProblem& problem, int n, double lo, double hi,
                                double tol, const ShootingOptions& options = {});

}  // namespace ptspec::oracle
