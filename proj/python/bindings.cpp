#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "ptspec/aim.hpp"
#include "ptspec/dirac.hpp"
#include "ptspec/error.hpp"
#include "ptspec/figures.hpp"
#include "ptspec/molecules.hpp"
#include "ptspec/oracle.hpp"
#include "ptspec/schrodinger.hpp"
#include "ptspec/specfun.hpp"
#include "ptspec/table2.hpp"
#include "ptspec/thermo.hpp"

namespace py = pybind11;
using namespace ptspec;

namespace {

Branch parse_branch(const std::string& s) {
  if (s == "irregular") return Branch::irregular;
  if (s == "regular") return Branch::regular;
  throw Error(ErrorKind::invalid_parameter, "branch must be 'irregular' or 'regular'");
}

Symmetry parse_symmetry(const std::string& s) {
  if (s == "spin") return Symmetry::spin;
  if (s == "pspin") return Symmetry::pspin;
  throw Error(ErrorKind::invalid_parameter, "symmetry must be 'spin' or 'pspin'");
}

NRContext molecule_context(double mu_amu, double hbar_c, double amu_to_ev) {
  return NRContext::from_amu(mu_amu, amu_to_ev, hbar_c);
}

py::dict level_dict(const EnergyLevel& level) {
  py::dict d;
  d["n"] = level.n;
  d["l"] = level.l;
  d["E"] = level.E;
  d["flags"] = describe_flags(level.flags);
  return d;
}

}  // namespace

PYBIND11_MODULE(_ptspec, m) {
  m.doc() = "Poschl-Teller spectra, thermodynamics and verification tools";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result([&]() {
    return py::object(py::reinterpret_steal<py::object>(
        PyErr_NewException("ptspec._ptspec.PtspecError", PyExc_RuntimeError, nullptr)));
  });
  m.attr("PtspecError") = error_type.get_stored();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object type = error_type.get_stored();
      py::object inst = type(to_string(e.kind()), e.what());
      PyErr_SetObject(type.ptr(), inst.ptr());
    }
  });

  m.attr("DEFAULT_HBAR_C") = kDefaultHbarC;
  m.attr("DEFAULT_AMU_TO_EV") = kDefaultAmuToEv;

  // special functions
  m.def("erfi", &specfun::erfi, py::arg("x"));
  m.def("dawson", &specfun::dawson, py::arg("x"));
  m.def("log_erfi", &specfun::log_erfi, py::arg("x"));
  m.def("hyp2f1_terminating",
        py::overload_cast<int, double, double, double>(&specfun::hyp2f1_terminating), py::arg("n"),
        py::arg("b"), py::arg("c"), py::arg("z"), "2F1(-n, b; c; z)");

  // nonrelativistic spectrum
  m.def(
      "potential",
      [](double A, double B, double alpha, double r) { return potential_value({A, B, alpha}, r); },
      py::arg("A"), py::arg("B"), py::arg("alpha"), py::arg("r"));
  m.def(
      "energy_nr",
      [](double A, double B, double alpha, double mu_amu, int n, int l, const std::string& branch,
         double hbar_c, double amu_to_ev) {
        return level_dict(energy_nr({A, B, alpha}, molecule_context(mu_amu, hbar_c, amu_to_ev), n,
                                    l, parse_branch(branch)));
      },
      py::arg("A"), py::arg("B"), py::arg("alpha"), py::arg("mu_amu"), py::arg("n"),
      py::arg("l") = 0, py::arg("branch") = "irregular", py::arg("hbar_c") = kDefaultHbarC,
      py::arg("amu_to_ev") = kDefaultAmuToEv);
  m.def(
      "level_count",
      [](double A, double B, double alpha, double mu_amu, int l, double hbar_c,
         double amu_to_ev) {
        const auto lc =
            level_count({A, B, alpha}, molecule_context(mu_amu, hbar_c, amu_to_ev), l);
        return py::make_tuple(lc.zeta, lc.n_max);
      },
      py::arg("A"), py::arg("B"), py::arg("alpha"), py::arg("mu_amu"), py::arg("l") = 0,
      py::arg("hbar_c") = kDefaultHbarC, py::arg("amu_to_ev") = kDefaultAmuToEv,
      "(zeta, n_max)");

  // iteration method and shooting oracle, hbar = 1 with 2 mu = 1
  m.def(
      "aim_eigenvalues",
      [](double A1, double B1, double alpha, double lo, double hi, int depth, double tol) {
        const double a2 = alpha * alpha;
        const aim::PtAimParams params{0.5 * (1.0 + std::sqrt(1.0 - 4.0 * A1 / a2)),
                                      0.5 * (1.0 - std::sqrt(1.0 + 4.0 * B1 / a2)), alpha};
        const auto problem = aim::make_pt_problem(params, aim::pt_expansion_point(A1, B1),
                                                  aim::default_order(depth));
        const auto report = aim::aim_eigen_scan(problem, lo, hi, depth, tol);
        std::vector<double> roots;
        for (const auto& r : report.roots) roots.push_back(r.value);
        return roots;
      },
      py::arg("A1"), py::arg("B1"), py::arg("alpha"), py::arg("lo"), py::arg("hi"),
      py::arg("depth") = 10, py::arg("tol") = 1e-12,
      "Roots of the termination condition in K1 on [lo, hi], ascending");
  m.def(
      "aim_closed_form",
      [](double A1, double B1, double alpha, int n) {
        const double a2 = alpha * alpha;
        const aim::PtAimParams params{0.5 * (1.0 + std::sqrt(1.0 - 4.0 * A1 / a2)),
                                      0.5 * (1.0 - std::sqrt(1.0 + 4.0 * B1 / a2)), alpha};
        return aim::pt_k1_closed_form(params, n);
      },
      py::arg("A1"), py::arg("B1"), py::arg("alpha"), py::arg("n"));
  m.def(
      "shoot_eigenvalue",
      [](double A1, double B1, double alpha, int n, double lo, double hi, double tol,
         double r_max) {
        const auto res = oracle::shoot_eigenvalue(
            oracle::pt_radial_problem(A1, B1, alpha, r_max), n, lo, hi, tol);
        return py::make_tuple(res.E, res.error_estimate);
      },
      py::arg("A1"), py::arg("B1"), py::arg("alpha"), py::arg("n"), py::arg("lo"),
      py::arg("hi"), py::arg("tol") = 1e-10, py::arg("r_max") = 30.0, "(E, error_estimate)");

  // relativistic levels (natural units)
  m.def(
      "dirac_levels",
      [](const std::string& symmetry, double M, double A, double B, double alpha, int kappa,
         int n, double C, std::optional<double> lo, std::optional<double> hi, double tol) {
        DiracContext ctx;
        ctx.M = M;
        ctx.kappa = kappa;
        const Symmetry sym = parse_symmetry(symmetry);
        (sym == Symmetry::spin ? ctx.Cs : ctx.Cps) = C;
        py::list out;
        for (const auto& r : solve_levels(ctx, {A, B, alpha}, n, sym, lo.value_or(-2.0 * M),
                                                 hi.value_or(2.0 * M), tol)) {
          py::dict d;
          d["E"] = r.E;
          d["residual"] = r.residual;
          d["excluded"] = r.excluded;
          out.append(d);
        }
        return out;
      },
      py::arg("symmetry"), py::arg("M"), py::arg("A"), py::arg("B"), py::arg("alpha"),
      py::arg("kappa"), py::arg("n"), py::arg("C") = 0.0, py::arg("lo") = py::none(), py::arg("hi") = py::none(),
      py::arg("tol") = 1e-12);
  m.def(
      "nr_limit",
      [](double A, double B, double alpha, double mu, int n, int l) {
        return nr_limit({A, B, alpha}, mu, n, l);
      },
      py::arg("A"), py::arg("B"), py::arg("alpha"), py::arg("mu"), py::arg("n"),
      py::arg("l") = 0, "Nonrelativistic energy from the spin equation (hbar = 1)");

  // thermodynamics
  m.def(
      "thermo_point",
      [](double zeta, double tau, double beta, double k_B) {
        const ThermoPoint p = thermo_point(ThermoContext{zeta, tau, k_B, 0.0}, beta);
        py::dict d;
        d["beta"] = p.beta;
        d["chi"] = p.chi;
        d["Z"] = p.Z;
        d["lnZ"] = p.lnZ;
        d["U"] = p.U;
        d["C"] = p.C;
        d["F"] = p.F;
        d["S"] = p.S;
        return d;
      },
      py::arg("zeta"), py::arg("tau"), py::arg("beta"), py::arg("k_B") = 1.0);
  m.def(
      "partition_sum",
      [](double zeta, double tau, double beta) {
        return partition_sum(ThermoContext{zeta, tau, 1.0, 0.0}, beta);
      },
      py::arg("zeta"), py::arg("tau"), py::arg("beta"));

  // molecules and generated tables
  m.def("molecules", [] {
    py::list out;
    for (const auto& mol : bundled_molecules()) {
      out.append(py::make_tuple(mol.name, mol.mu_amu, mol.alpha_invA));
    }
    return out;
  });
  m.def(
      "table2_csv", [](double A, double B) {
        RunConfig config;
        config.A = A;
        config.B = B;
        return table2_csv(bundled_molecules(), config);
      },
      py::arg("A") = -2.0, py::arg("B") = 3.0);
  m.def(
      "calibration_report",
      [](double A, double B) { return calibration_report(bundled_molecules(), A, B); },
      py::arg("A") = -2.0, py::arg("B") = 3.0);
  m.def(
      "figure_data",
      [](int points) {
        FigureConfig config;
        config.alpha_points = points;
        config.beta_points = points;
        config.zeta_points = points;
        return figure_data(bundled_molecules(), RunConfig{}, config);
      },
      py::arg("points") = 64, "File name -> CSV text of the eleven figure data sets");
}
