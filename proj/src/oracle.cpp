#include "ptspec/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "ptspec/error.hpp"

namespace ptspec::oracle {
namespace {

// Kronrod 15-point nodes (nonnegative half) and weights; Gauss 7-point
// weights sit on the odd Kronrod nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod(const RealFunction& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

// ---- shooting ----

struct Mesh {
  double x0;
  double h;
  int size;
  double r(int i) const { return std::exp(x0 + h * i); }
};

// phi'' = g(x) phi with r = e^x and u = e^{x/2} phi
std::vector<double> coefficients(const RadialProblem& p, const Mesh& mesh, double E) {
  std::vector<double> g(static_cast<std::size_t>(mesh.size));
  for (int i = 0; i < mesh.size; ++i) {
    const double r = mesh.r(i);
    g[static_cast<std::size_t>(i)] = r * r * p.scale * (p.potential(r) - E) + 0.25;
  }
  return g;
}

constexpr double kRescaleAbove = 1e100;

// Outward Numerov from the power-law seed up to index `last` inclusive.
std::vector<double> integrate_out(const RadialProblem& p, const Mesh& mesh,
                                  const std::vector<double>& g, int last) {
  std::vector<double> phi(static_cast<std::size_t>(last + 1), 0.0);
  const double h2 = mesh.h * mesh.h / 12.0;
  phi[0] = 1.0;
  phi[1] = std::exp((p.origin_power - 0.5) * mesh.h);
  for (int i = 1; i < last; ++i) {
    const auto k = static_cast<std::size_t>(i);
    phi[k + 1] = (2.0 * phi[k] * (1.0 + 5.0 * h2 * g[k]) - phi[k - 1] * (1.0 - h2 * g[k - 1])) /
                 (1.0 - h2 * g[k + 1]);
    if (std::abs(phi[k + 1]) > kRescaleAbove) {
      for (std::size_t j = 0; j <= k + 1; ++j) phi[j] /= kRescaleAbove;
    }
  }
  return phi;
}

// Inward Numerov from phi(r_max) = 0 down to index `first`.
std::vector<double> integrate_in(const Mesh& mesh, const std::vector<double>& g, int first) {
  const auto n = static_cast<std::size_t>(mesh.size);
  std::vector<double> phi(n, 0.0);
  const double h2 = mesh.h * mesh.h / 12.0;
  phi[n - 1] = 0.0;
  phi[n - 2] = 1e-30;
  for (auto k = n - 2; k > static_cast<std::size_t>(first); --k) {
    phi[k - 1] = (2.0 * phi[k] * (1.0 + 5.0 * h2 * g[k]) - phi[k + 1] * (1.0 - h2 * g[k + 1])) /
                 (1.0 - h2 * g[k - 1]);
    if (std::abs(phi[k - 1]) > kRescaleAbove) {
      for (auto j = k - 1; j < n; ++j) phi[j] /= kRescaleAbove;
    }
  }
  return phi;
}

int sign_changes(const std::vector<double>& v, std::size_t begin, std::size_t end) {
  int count = 0;
  double last = 0.0;
  for (std::size_t i = begin; i < end; ++i) {
    if (v[i] == 0.0) continue;
    if (last != 0.0 && ((last < 0.0) != (v[i] < 0.0))) ++count;
    last = v[i];
  }
  return count;
}

// Nodes of the outward solution over the whole mesh (Dirichlet at r_max):
// at least n + 1 exactly when E lies above level n.
int dirichlet_nodes(const RadialProblem& p, const Mesh& mesh, double E) {
  const auto g = coefficients(p, mesh, E);
  const auto phi = integrate_out(p, mesh, g, mesh.size - 1);
  return sign_changes(phi, 0, phi.size() - 1);
}

int matching_index(const std::vector<double>& g, const Mesh& mesh) {
  int m = -1;
  for (int i = mesh.size - 1; i >= 0; --i) {
    if (g[static_cast<std::size_t>(i)] < 0.0) {
      m = i;
      break;
    }
  }
  if (m < 0) m = mesh.size / 2;
  return std::clamp(m, mesh.size / 10, mesh.size - 10);
}

struct Match {
  double mismatch;
  bool valid;
  int nodes;
};

Match match(const RadialProblem& p, const Mesh& mesh, double E) {
  const auto g = coefficients(p, mesh, E);
  const int m = matching_index(g, mesh);
  const auto out = integrate_out(p, mesh, g, m + 1);
  const auto in = integrate_in(mesh, g, m - 1);
  const auto k = static_cast<std::size_t>(m);
  if (out[k] == 0.0 || in[k] == 0.0) return {0.0, false, 0};
  const double d_out = (out[k + 1] - out[k - 1]) / out[k];
  const double d_in = (in[k + 1] - in[k - 1]) / in[k];
  const int nodes = sign_changes(out, 0, k + 1) +
                    sign_changes(in, k, static_cast<std::size_t>(mesh.size) - 1);
  return {d_out - d_in, true, nodes};
}

constexpr double kNumerovStep = 0.05;  // bound on h^2 |g| / 12

// Points needed so that Numerov stays stable at the deepest energy in the bracket.
int stable_points(const RadialProblem& p, double x0, double span, double lo) {
  constexpr int kSamples = 4096;
  double g_max = 0.0;
  for (int i = 0; i < kSamples; ++i) {
    const double r = std::exp(x0 + span * i / (kSamples - 1));
    g_max = std::max(g_max, std::abs(r * r * p.scale * (p.potential(r) - lo) + 0.25));
  }
  const double h = std::sqrt(12.0 * kNumerovStep / g_max);
  return static_cast<int>(std::ceil(span / h)) + 1;
}

struct LevelOnMesh {
  double E;
  int nodes;
};

LevelOnMesh level_on_mesh(const RadialProblem& p, const Mesh& mesh, int n, double lo, double hi,
                          const ShootingOptions& options) {
  if (dirichlet_nodes(p, mesh, lo) > n || dirichlet_nodes(p, mesh, hi) <= n) {
    throw Error(ErrorKind::node_count_mismatch,
                "shoot_eigenvalue: bracket [" + std::to_string(lo) + ", " + std::to_string(hi) +
                    "] does not contain level " + std::to_string(n));
  }
  // Sturm bisection: E_n is where the Dirichlet node count steps from n to n+1.
  // Switch to the smooth mismatch once it changes sign across the bracket.
  for (int it = 0; it < options.max_bisections; ++it) {
    const Match mlo = match(p, mesh, lo);
    const Match mhi = match(p, mesh, hi);
    if (mlo.valid && mhi.valid && (mlo.mismatch > 0.0) != (mhi.mismatch > 0.0) &&
        mlo.nodes == n && mhi.nodes == n) {
      double flo = mlo.mismatch;
      for (int j = it; j < options.max_bisections; ++j) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const Match mm = match(p, mesh, mid);
        if (!mm.valid) break;
        if ((mm.mismatch > 0.0) == (flo > 0.0)) {
          lo = mid;
          flo = mm.mismatch;
        } else {
          hi = mid;
        }
      }
      const double E = 0.5 * (lo + hi);
      return {E, match(p, mesh, E).nodes};
    }
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (dirichlet_nodes(p, mesh, mid) > n) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const double E = 0.5 * (lo + hi);
  return {E, match(p, mesh, E).nodes};
}

}  // namespace

double quadrature(const RealFunction& f, double a, double b, double tol,
                  const QuadratureOptions& options) {
  if (a == b) return 0.0;
  if (!(tol > 0.0)) throw Error(ErrorKind::invalid_parameter, "quadrature: tol must be > 0");
  if (a > b) return -quadrature(f, b, a, tol, options);
  std::priority_queue<Segment> heap;
  Segment first = gauss_kronrod(f, a, b);
  double total = first.value;
  double error = first.error;
  heap.push(first);
  int intervals = 1;
  while (error > std::max(tol, tol * std::abs(total))) {
    if (intervals >= options.max_intervals) {
      throw ConvergenceError("quadrature: interval budget exhausted", total, error);
    }
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw ConvergenceError("quadrature: interval cannot be split further", total, error);
    }
    const Segment left = gauss_kronrod(f, worst.a, mid);
    const Segment right = gauss_kronrod(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++intervals;
  }
  // Re-add in a fixed order so the result does not carry the running-sum drift.
  double sum = 0.0;
  std::vector<Segment> parts;
  while (!heap.empty()) {
    parts.push_back(heap.top());
    heap.pop();
  }
  std::sort(parts.begin(), parts.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
  for (const Segment& s : parts) sum += s.value;
  return sum;
}

double quadrature_to_infinity(const RealFunction& f, double a, double tol,
                              const QuadratureOptions& options) {
  const RealFunction mapped = [&](double t) {
    const double s = 1.0 - t;
    return f(a + t / s) / (s * s);
  };
  return quadrature(mapped, 0.0, 1.0, tol, options);
}

Derivative finite_difference(const RealFunction& f, double x, int order, double h) {
  if (order != 1 && order != 2) {
    throw Error(ErrorKind::invalid_parameter, "finite_difference: order must be 1 or 2");
  }
  if (!(h > 0.0)) throw Error(ErrorKind::invalid_parameter, "finite_difference: h must be > 0");
  constexpr int kSteps = 10;
  constexpr double kShrink = 1.4;
  constexpr double kShrink2 = kShrink * kShrink;
  const double fx = order == 2 ? f(x) : 0.0;
  auto central = [&](double step) {
    if (order == 1) return (f(x + step) - f(x - step)) / (2.0 * step);
    return (f(x + step) - 2.0 * fx + f(x - step)) / (step * step);
  };
  std::array<std::array<double, kSteps>, kSteps> table{};
  Derivative best{central(h), std::numeric_limits<double>::infinity()};
  table[0][0] = best.value;
  double step = h;
  for (int i = 1; i < kSteps; ++i) {
    step /= kShrink;
    table[0][i] = central(step);
    double factor = kShrink2;
    for (int j = 1; j <= i; ++j) {
      table[j][i] = (table[j - 1][i] * factor - table[j - 1][i - 1]) / (factor - 1.0);
      factor *= kShrink2;
      const double err = std::max(std::abs(table[j][i] - table[j - 1][i]),
                                  std::abs(table[j][i] - table[j - 1][i - 1]));
      if (err <= best.error) {
        best = {table[j][i], err};
      }
    }
    if (std::abs(table[i][i] - table[i - 1][i - 1]) >= 2.0 * best.error) break;
  }
  return best;
}

RadialProblem pt_radial_problem(double A1, double B1, double alpha, double r_max) {
  RadialProblem p;
  p.potential = [A1, B1, alpha](double r) {
    const double x = alpha * r;
    const double sech = 1.0 / std::cosh(x);
    const double csch = 1.0 / std::sinh(x);
    return A1 * sech * sech + B1 * csch * csch;
  };
  p.scale = 1.0;
  p.origin_power = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * B1 / (alpha * alpha)));
  p.r_min = 1e-6 / alpha;
  p.r_max = r_max;
  return p;
}

RadialProblem pt_raw_radial_problem(double A1, double Bcore, double alpha, int l, double r_max) {
  RadialProblem p;
  const double ll = l * (l + 1.0);
  p.potential = [A1, Bcore, alpha, ll](double r) {
    const double x = alpha * r;
    const double sech = 1.0 / std::cosh(x);
    const double csch = 1.0 / std::sinh(x);
    return A1 * sech * sech + Bcore * csch * csch + ll / (r * r);
  };
  p.scale = 1.0;
  p.origin_power = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * (Bcore / (alpha * alpha) + ll)));
  p.r_min = 1e-6 / alpha;
  p.r_max = r_max;
  return p;
}

ShootingResult shoot_eigenvalue(const RadialProblem& problem, int n, double lo, double hi,
                                double tol, const ShootingOptions& options) {
  if (n < 0) throw Error(ErrorKind::invalid_parameter, "shoot_eigenvalue: n must be >= 0");
  if (!(lo < hi)) throw Error(ErrorKind::invalid_parameter, "shoot_eigenvalue: need lo < hi");
  if (!(problem.r_min > 0.0) || !(problem.r_max > problem.r_min)) {
    throw Error(ErrorKind::invalid_parameter, "shoot_eigenvalue: need 0 < r_min < r_max");
  }
  if (problem.mesh_points < 64) {
    throw Error(ErrorKind::invalid_parameter, "shoot_eigenvalue: mesh too coarse");
  }
  const double x0 = std::log(problem.r_min);
  const double span = std::log(problem.r_max) - x0;
  int points = std::max(problem.mesh_points, stable_points(problem, x0, span, lo));
  double previous = 0.0;
  bool have_previous = false;
  for (int refinement = 0; refinement <= options.max_refinements; ++refinement) {
    const Mesh mesh{x0, span / (points - 1), points};
    const LevelOnMesh level = level_on_mesh(problem, mesh, n, lo, hi, options);
    if (level.nodes != n) {
      throw Error(ErrorKind::node_count_mismatch,
                  "shoot_eigenvalue: converged function has " + std::to_string(level.nodes) +
                      " nodes, expected " + std::to_string(n));
    }
    if (have_previous) {
      const double change = std::abs(level.E - previous);
      if (change <= tol * std::abs(level.E)) {
        return {level.E, change, points, level.nodes};
      }
    }
    previous = level.E;
    have_previous = true;
    points = 2 * points - 1;
  }
  throw ConvergenceError("shoot_eigenvalue: mesh refinement did not settle", previous,
                         std::numeric_limits<double>::infinity());
}

}  // namespace ptspec::oracle
