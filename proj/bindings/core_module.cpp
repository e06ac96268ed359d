#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "momunc/bounds.hpp"
#include "momunc/errors.hpp"
#include "momunc/quantum.hpp"
#include "momunc/renyi.hpp"
#include "momunc/specfun.hpp"
#include "momunc/suite.hpp"
#include "momunc/sweep.hpp"
#include "momunc/table_io.hpp"

namespace py = pybind11;
using namespace momunc;

namespace {

SystemKind system_from_name(const std::string& name) {
  if (name == "hydrogen") return SystemKind::hydrogen;
  if (name == "oscillator") return SystemKind::oscillator;
  throw std::invalid_argument("system must be 'hydrogen' or 'oscillator'");
}

py::dict row_to_dict(const SweepRow& r) {
  py::dict d;
  d["a"] = r.a;
  d["b"] = r.b;
  d["d"] = r.d;
  d["system"] = r.system == SystemKind::none
                    ? py::object(py::none())
                    : py::object(py::str(to_string(r.system)));
  d["n"] = r.n ? py::object(py::int_(*r.n)) : py::object(py::none());
  d["l"] = r.l ? py::object(py::int_(*r.l)) : py::object(py::none());
  d["product"] =
      r.product ? py::object(py::float_(*r.product)) : py::object(py::none());
  d["bound_C"] = r.bound_c;
  d["bound_D"] = r.bound_d;
  d["alpha_opt"] = r.alpha_opt;
  d["ratio"] = r.ratio ? py::object(py::float_(*r.ratio)) : py::object(py::none());
  return d;
}

py::list table_to_list(const SweepTable& t) {
  py::list rows;
  for (const SweepRow& r : t.rows) rows.append(row_to_dict(r));
  return rows;
}

py::dict report_to_dict(const SuiteReport& report) {
  py::list checks;
  for (const CheckResult& c : report.checks) {
    py::dict d;
    d["name"] = c.name;
    d["passed"] = c.passed;
    d["worst_residual"] = c.worst_residual;
    d["detail"] = c.detail;
    d["seconds"] = c.seconds;
    checks.append(d);
  }
  py::dict out;
  out["checks"] = checks;
  out["all_passed"] = report.all_passed();
  out["total_seconds"] = report.total_seconds;
  return out;
}

SweepOptions sweep_options(double tol, int grid, int threads) {
  SweepOptions opt;
  opt.optimizer = OptimizerOptions{grid, tol};
  opt.threads = threads;
  return opt;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Moment-based position-momentum uncertainty bounds: the optimized bound "
      "C(a,b), the classical bound D(a,b), exact hydrogenic and oscillator "
      "moments, maximum-entropy saturation oracles and figure-data sweeps.";

  py::register_exception<DivergentMomentError>(m, "DivergentMomentError",
                                               PyExc_ValueError);
  py::register_exception<UnsupportedSeriesError>(m, "UnsupportedSeriesError",
                                                 PyExc_ValueError);
  py::register_exception<SeriesPoleError>(m, "SeriesPoleError", PyExc_ValueError);
  py::register_exception<NoUncertaintyRelationError>(
      m, "NoUncertaintyRelationError", PyExc_ValueError);

  // special functions
  m.def("log_gamma", &specfun::log_gamma, py::arg("x"));
  m.def("digamma", &specfun::digamma, py::arg("x"));
  m.def("log_beta", &specfun::log_beta, py::arg("x"), py::arg("y"));
  m.def(
      "hyp_pfq_unit",
      [](const std::vector<double>& upper, const std::vector<double>& lower,
         double tol) {
        specfun::HypergeometricSpec spec{upper, lower, tol};
        return specfun::hyp_pfq_unit(spec);
      },
      py::arg("upper"), py::arg("lower"), py::arg("integer_tolerance") = 1e-9,
      "Terminating pFq at unit argument.");
  m.def("laguerre", &laguerre, py::arg("p"), py::arg("q"), py::arg("x"));
  m.def("gegenbauer", &gegenbauer, py::arg("p"), py::arg("q"), py::arg("x"));

  // entropic bounds
  m.def("conjugate", &conjugate_order, py::arg("alpha"),
        "alpha* = alpha/(2 alpha - 1)");
  m.def(
      "bound_B", [](double a) { return bound_B(RenyiIndex(a)); },
      py::arg("alpha"));
  m.def(
      "bound_Z",
      [](double a, double b) { return bound_Z(RenyiIndex(a), RenyiIndex(b)); },
      py::arg("alpha"), py::arg("beta"));
  m.def(
      "gaussian_power_product",
      [](double alpha, double sigma, int dim) {
        return gaussian_power_product(RenyiIndex(alpha), sigma, dim);
      },
      py::arg("alpha"), py::arg("sigma"), py::arg("dim") = 3);

  // moment bounds
  m.def(
      "bound_M",
      [](double l, double lam, int d) {
        return bound_M(l, RenyiIndex(lam), DimensionContext(d));
      },
      py::arg("l"), py::arg("lam"), py::arg("d"));
  m.def(
      "dlogM_dlambda",
      [](double l, double lam, int d) {
        return dlogM_dlambda(l, RenyiIndex(lam), DimensionContext(d));
      },
      py::arg("l"), py::arg("lam"), py::arg("d"));
  m.def(
      "classical_bound_D",
      [](double a, double b, int d) {
        return classical_bound_D(MomentOrders(a, b, DimensionContext(d)));
      },
      py::arg("a"), py::arg("b"), py::arg("d"));
  m.def(
      "search_domain",
      [](double a, int d) {
        const SearchInterval s = search_domain(a, DimensionContext(d));
        return py::make_tuple(s.lo, s.hi);
      },
      py::arg("a"), py::arg("d"));
  m.def(
      "objective",
      [](double a, double b, double alpha, int d) {
        return objective(a, b, RenyiIndex(alpha), DimensionContext(d));
      },
      py::arg("a"), py::arg("b"), py::arg("alpha"), py::arg("d"));
  m.def(
      "bound_product_2d",
      [](double a, double b, double alpha, double beta, int d) {
        return bound_product_2d(a, b, RenyiIndex(alpha), RenyiIndex(beta),
                                DimensionContext(d));
      },
      py::arg("a"), py::arg("b"), py::arg("alpha"), py::arg("beta"),
      py::arg("d"));

  py::class_<BoundResult>(m, "BoundResult")
      .def_property_readonly("value",
                             [](const BoundResult& r) { return r.value; })
      .def_property_readonly(
          "alpha_opt", [](const BoundResult& r) { return r.alpha_opt.value(); })
      .def_property_readonly("search_interval",
                             [](const BoundResult& r) {
                               return py::make_tuple(r.search_interval.lo,
                                                     r.search_interval.hi);
                             })
      .def_property_readonly(
          "evaluations", [](const BoundResult& r) { return r.evaluations; })
      .def("__repr__", [](const BoundResult& r) {
        return "BoundResult(value=" + format_number_roundtrip(r.value) +
               ", alpha_opt=" + format_number_roundtrip(r.alpha_opt.value()) +
               ")";
      });

  m.def(
      "bound_C",
      [](double a, double b, int d, double tol, int grid) {
        return bound_C(MomentOrders(a, b, DimensionContext(d)),
                       OptimizerOptions{grid, tol});
      },
      py::arg("a"), py::arg("b"), py::arg("d"), py::arg("tol") = 1e-10,
      py::arg("grid") = 256,
      "Optimized moment-uncertainty bound C(a,b) with its optimal Renyi index.");

  py::class_<MaxEntReport>(m, "MaxEntReport")
      .def_readonly("norm_error", &MaxEntReport::norm_error)
      .def_readonly("moment_error", &MaxEntReport::moment_error)
      .def_readonly("entropy_power_closed", &MaxEntReport::entropy_power_closed)
      .def_readonly("entropy_power_quadrature",
                    &MaxEntReport::entropy_power_quadrature)
      .def_readonly("residual_closed", &MaxEntReport::residual_closed)
      .def_readonly("residual_quadrature", &MaxEntReport::residual_quadrature)
      .def("residual", &MaxEntReport::residual);

  m.def(
      "maxent_verify",
      [](double l, double lam, int d, double moment) {
        return maxent_verify(l, RenyiIndex(lam), DimensionContext(d), moment);
      },
      py::arg("l"), py::arg("lam"), py::arg("d"), py::arg("moment"),
      "Saturation oracle for the stretched q-Gaussian maximizer.");

  // quantum systems
  py::class_<RadialFunction>(m, "RadialFunction")
      .def("__call__", &RadialFunction::operator())
      .def_property_readonly("dim", &RadialFunction::dim)
      .def_property_readonly("normalization", &RadialFunction::normalization);

  m.def(
      "hydrogen_radial_position",
      [](int d, int n, int l) {
        return hydrogen_radial_position(HydrogenState(d, n, l));
      },
      py::arg("d"), py::arg("n"), py::arg("l"));
  m.def(
      "hydrogen_radial_momentum",
      [](int d, int n, int l) {
        return hydrogen_radial_momentum(HydrogenState(d, n, l));
      },
      py::arg("d"), py::arg("n"), py::arg("l"));
  m.def(
      "oscillator_radial",
      [](int d, int n, int l) {
        return oscillator_radial(OscillatorState(d, n, l));
      },
      py::arg("d"), py::arg("n"), py::arg("l"));
  m.def(
      "hydrogen_moment_r",
      [](int d, int n, int l, double a) {
        return hydrogen_moment_r(HydrogenState(d, n, l), a);
      },
      py::arg("d"), py::arg("n"), py::arg("l"), py::arg("a"));
  m.def(
      "hydrogen_moment_p",
      [](int d, int n, int l, double b) {
        return hydrogen_moment_p(HydrogenState(d, n, l), b);
      },
      py::arg("d"), py::arg("n"), py::arg("l"), py::arg("b"));
  m.def(
      "oscillator_moment",
      [](int d, int n, int l, double order) {
        return oscillator_moment(OscillatorState(d, n, l), order);
      },
      py::arg("d"), py::arg("n"), py::arg("l"), py::arg("order"));
  m.def(
      "quadrature_moment",
      [](const RadialFunction& f, int d, double order) {
        return quadrature_moment(f, DimensionContext(d), order).value;
      },
      py::arg("f"), py::arg("d"), py::arg("order"));

  // sweeps
  m.def("preset_names", [] { return preset_names(); });
  m.def("preset_description", &preset_description, py::arg("name"));
  m.def(
      "run_preset",
      [](const std::string& name, int threads) {
        return table_to_list(
            run_preset(name, sweep_options(1e-10, 256, threads)));
      },
      py::arg("name"), py::arg("threads") = 0);
  m.def(
      "sweep_bounds",
      [](const std::vector<double>& a_values, double lo, double hi, int steps,
         int d, int threads) {
        return table_to_list(sweep_bounds(a_values, {lo, hi, steps},
                                          DimensionContext(d),
                                          sweep_options(1e-10, 256, threads)));
      },
      py::arg("a_values"), py::arg("b_lo"), py::arg("b_hi"), py::arg("b_steps"),
      py::arg("d"), py::arg("threads") = 0);
  m.def(
      "sweep_states",
      [](const std::string& system, int d, int n_max, int l_max, double a,
         double b, int threads) {
        return table_to_list(sweep_states(system_from_name(system), d, n_max,
                                          l_max, a, b,
                                          sweep_options(1e-10, 256, threads)));
      },
      py::arg("system"), py::arg("d"), py::arg("n_max"), py::arg("l_max"),
      py::arg("a"), py::arg("b"), py::arg("threads") = 0);

  // verification
  m.def(
      "run_invariant_suite",
      [](bool quick, int threads, unsigned seed) {
        SuiteConfig cfg;
        cfg.quick = quick;
        cfg.threads = threads;
        cfg.seed = seed;
        return report_to_dict(run_invariant_suite(cfg));
      },
      py::arg("quick") = false, py::arg("threads") = 0,
      py::arg("seed") = 20260808u);

  m.attr("__version__") = "0.1.0";
}
