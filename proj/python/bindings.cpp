#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "raintensity/characterize.hpp"
#include "raintensity/cli.hpp"
#include "raintensity/errors.hpp"
#include "raintensity/estimate.hpp"
#include "raintensity/fit.hpp"
#include "raintensity/gof.hpp"
#include "raintensity/grai.hpp"
#include "raintensity/json_io.hpp"
#include "raintensity/orders.hpp"

namespace py = pybind11;
using namespace raintensity;

namespace {

// The catalog type is a std::variant; pybind11's stl casters would try to
// convert it per-alternative, so the python-facing class wraps it instead.
struct Family {
  ParametricFamily d;
};

std::vector<double> to_vec(std::span<const double> s) {
  return {s.begin(), s.end()};
}

py::dict gof_to_dict(const GofReport& rep) {
  py::dict d;
  d["test"] = rep.test;
  d["statistic"] = rep.statistic;
  d["p_value"] = rep.p_value;
  if (rep.dof) d["dof"] = *rep.dof;
  py::list classes, merged;
  for (const auto& c : rep.classes)
    classes.append(py::make_tuple(c.lo, c.hi, c.observed, c.expected));
  for (const auto& c : rep.merged_classes)
    merged.append(py::make_tuple(c.lo, c.hi, c.observed, c.expected));
  d["classes"] = classes;
  d["merged_classes"] = merged;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "alpha-generalized reversed aging intensity analysis";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  py::class_<Family>(m, "ParametricFamily")
      .def(py::init([](const std::string& spec) { return Family{parse_family(spec)}; }),
           py::arg("spec"))
      .def("__repr__", [](const Family& f) { return to_string(f.d); })
      .def("cdf", [](const Family& f, double x) { return cdf(f.d, x); })
      .def("sf", [](const Family& f, double x) { return sf(f.d, x); })
      .def("pdf", [](const Family& f, double x) { return pdf(f.d, x); })
      .def("quantile", [](const Family& f, double p) { return quantile(f.d, p); })
      .def("support",
           [](const Family& f) {
             const Support s = support(f.d);
             return py::make_tuple(s.lo, s.hi);
           })
      .def("sample",
           [](const Family& f, std::size_t n, std::uint64_t seed) {
             return to_vec(sample(f.d, n, seed).values());
           },
           py::arg("n"), py::arg("seed"));

  m.def("parse_family",
        [](const std::string& spec) { return Family{parse_family(spec)}; },
        py::arg("spec"));
  m.def("reversed_hazard",
        [](const Family& f, double x) { return reversed_hazard(f.d, x); },
        py::arg("family"), py::arg("x"));
  m.def("cum_reversed_hazard_alpha",
        [](const Family& f, double alpha, double x) {
          return cum_reversed_hazard_alpha(f.d, alpha, x);
        },
        py::arg("family"), py::arg("alpha"), py::arg("x"));
  m.def("grai_alpha",
        [](const Family& f, double alpha, double x) {
          return grai_alpha(f.d, alpha, x);
        },
        py::arg("family"), py::arg("alpha"), py::arg("x"));
  m.def("ai_alpha",
        [](const Family& f, double alpha, double x) {
          return ai_alpha(f.d, alpha, x);
        },
        py::arg("family"), py::arg("alpha"), py::arg("x"));
  m.def("grai_value", &grai_value, py::arg("x"), py::arg("cdf"), py::arg("pdf"),
        py::arg("alpha"));
  m.def(
      "grai_general",
      [](const std::function<double(double)>& F_cdf,
         const std::function<double(double)>& F_pdf, double g_alpha, double x) {
        return grai_general(CdfModel{F_cdf, F_pdf}, pareto_transform(g_alpha), x);
      },
      py::arg("cdf"), py::arg("pdf"), py::arg("transform_alpha"), py::arg("x"),
      "G-generalized reversed aging intensity with G = W_alpha");

  py::class_<GraiCurve>(m, "GraiCurve")
      .def_static(
          "symbolic",
          [](const Family& f, double alpha) {
            return GraiCurve::symbolic(f.d, alpha);
          },
          py::arg("family"), py::arg("alpha"))
      .def_static(
          "tabulated",
          [](std::vector<double> xs, std::vector<double> vs,
             std::optional<double> alpha) {
            return GraiCurve::tabulated(std::move(xs), std::move(vs), alpha);
          },
          py::arg("grid"), py::arg("values"), py::arg("alpha") = py::none())
      .def("__call__", &GraiCurve::operator())
      .def_property_readonly("is_tabulated", &GraiCurve::is_tabulated)
      .def_property_readonly("alpha", &GraiCurve::alpha_hint)
      .def_property_readonly("grid",
                             [](const GraiCurve& c) { return to_vec(c.grid()); })
      .def_property_readonly(
          "values", [](const GraiCurve& c) { return to_vec(c.values()); });

  m.def("write_curve_tsv",
        [](const GraiCurve& c, const std::string& path,
           std::vector<double> xs) { write_curve_tsv(c, path, xs); },
        py::arg("curve"), py::arg("path"),
        py::arg("abscissae") = std::vector<double>{});
  m.def("read_curve_tsv", &read_curve_tsv, py::arg("path"));

  py::class_<Anchor>(m, "Anchor")
      .def(py::init<double, double>(), py::arg("a"), py::arg("k"))
      .def_readonly("a", &Anchor::a)
      .def_readonly("k", &Anchor::k);

  m.def("check_conditions",
        [](const GraiCurve& L, double alpha) {
          const ConditionReport rep = check_conditions(L, alpha);
          py::dict d;
          d["c1"] = to_string(rep.c1);
          d["c2"] = to_string(rep.c2);
          d["c3"] = to_string(rep.c3);
          d["detail"] = rep.detail;
          return d;
        },
        py::arg("curve"), py::arg("alpha"));

  py::class_<ReconstructedCdf>(m, "ReconstructedCdf")
      .def(py::init<GraiCurve, double, std::optional<Anchor>, double>(),
           py::arg("curve"), py::arg("alpha"), py::arg("anchor") = py::none(),
           py::arg("quad_tol") = 1e-9)
      .def("__call__", &ReconstructedCdf::operator())
      .def_property_readonly("alpha", &ReconstructedCdf::alpha)
      .def_property_readonly("used_extrapolation",
                             &ReconstructedCdf::used_extrapolation);

  m.def("reconstruct_neg", &reconstruct_neg, py::arg("curve"), py::arg("alpha"),
        py::arg("anchor"), py::arg("x"));
  m.def("reconstruct_zero", &reconstruct_zero, py::arg("curve"),
        py::arg("anchor"), py::arg("x"));
  m.def("reconstruct_pos", &reconstruct_pos, py::arg("curve"), py::arg("alpha"),
        py::arg("x"));
  m.def("roundtrip_error",
        [](const Family& f, double alpha, std::vector<double> grid,
           double tol) { return roundtrip_error(f.d, alpha, grid, tol); },
        py::arg("family"), py::arg("alpha"), py::arg("grid"),
        py::arg("quad_tol") = 1e-9);

  py::class_<Sample>(m, "Sample")
      .def(py::init<std::vector<double>, std::string>(), py::arg("values"),
           py::arg("source_label") = std::string{})
      .def_property_readonly("values",
                             [](const Sample& s) { return to_vec(s.values()); })
      .def("__len__", &Sample::size)
      .def("quantile", &Sample::quantile)
      .def_property_readonly("mean", &Sample::mean)
      .def_property_readonly("stddev", &Sample::stddev);

  m.def("ingest_csv", &ingest_csv, py::arg("path"));
  m.def("default_bandwidth", &default_bandwidth, py::arg("sample"));

  py::class_<KdeModel>(m, "KdeModel")
      .def(py::init<const Sample&, std::optional<double>>(), py::arg("sample"),
           py::arg("bandwidth") = py::none())
      .def_property_readonly("bandwidth", &KdeModel::bandwidth)
      .def("pdf", [](const KdeModel& m_, double x) { return kde_pdf(m_, x); })
      .def("cdf", [](const KdeModel& m_, double x) { return kde_cdf(m_, x); })
      .def("grai",
           [](const KdeModel& m_, double alpha, double x, double eps) {
             return empirical_grai(m_, alpha, x, eps);
           },
           py::arg("alpha"), py::arg("x"), py::arg("eps") = 1e-6);

  py::class_<GridSpec>(m, "GridSpec")
      .def(py::init([](double p_lo, double p_hi, int points, bool sample_points,
                       double eps) {
             GridSpec g;
             g.p_lo = p_lo;
             g.p_hi = p_hi;
             g.points = points;
             g.abscissae = sample_points ? GridSpec::Abscissae::sample_points
                                         : GridSpec::Abscissae::uniform;
             g.eps = eps;
             return g;
           }),
           py::arg("p_lo") = 0.05, py::arg("p_hi") = 0.95,
           py::arg("points") = 200, py::arg("sample_points") = false,
           py::arg("eps") = 1e-6);

  m.def("grai_grid",
        [](const KdeModel& m_, double alpha, const GridSpec& spec) {
          return grai_grid(m_, alpha, spec);
        },
        py::arg("kde"), py::arg("alpha"), py::arg("spec") = GridSpec{});

  py::enum_<ShapeModel>(m, "ShapeModel")
      .value("constant", ShapeModel::constant)
      .value("affine", ShapeModel::affine)
      .value("through_origin", ShapeModel::through_origin);

  m.def("fit_ls",
        [](const GraiCurve& c, ShapeModel model) {
          const LsCoefficients ls = fit_ls(c, model);
          py::dict d;
          d["intercept"] = ls.intercept;
          d["slope"] = ls.slope;
          d["residual_rms"] = ls.residual_rms;
          d["points_used"] = ls.points_used;
          return d;
        },
        py::arg("curve"), py::arg("model"));
  m.def("mle_lambda_invllog", &mle_lambda_invllog, py::arg("sample"),
        py::arg("gamma_hat"));
  m.def("mle_lambda_invmw", &mle_lambda_invmw, py::arg("sample"),
        py::arg("gamma_hat"), py::arg("delta_hat"));
  m.def("mle_lambda_invw2", &mle_lambda_invw2, py::arg("sample"),
        py::arg("beta_hat"));

  m.def("fit_pipeline",
        [](const Sample& s, double alpha, ShapeModel model,
           std::optional<double> bandwidth, const GridSpec& grid) {
          FitConfig cfg;
          cfg.bandwidth = bandwidth;
          cfg.grid = grid;
          const FitReport rep = fit_pipeline(s, alpha, model, cfg);
          py::dict d;
          d["alpha"] = rep.alpha;
          d["model"] = to_string(rep.model);
          d["intercept"] = rep.ls.intercept;
          d["slope"] = rep.ls.slope;
          d["residual_rms"] = rep.ls.residual_rms;
          d["points_used"] = rep.ls.points_used;
          d["scale_mle"] = rep.scale_mle;
          d["identified"] = to_string(rep.identified);
          d["bandwidth"] = rep.bandwidth;
          return d;
        },
        py::arg("sample"), py::arg("alpha"), py::arg("model"),
        py::arg("bandwidth") = py::none(), py::arg("grid") = GridSpec{});

  m.def("chi_square",
        [](const Sample& s, const Family& f, int k, double width, int n_params) {
          return gof_to_dict(chi_square(s, f.d, k, width, n_params));
        },
        py::arg("sample"), py::arg("family"), py::arg("classes"),
        py::arg("width"), py::arg("n_params"));
  m.def("chi_square_counts",
        [](std::vector<double> counts, double n_total, const Family& f,
           double width, int n_params) {
          return gof_to_dict(chi_square_counts(counts, n_total, f.d, width, n_params));
        },
        py::arg("counts"), py::arg("n_total"), py::arg("family"),
        py::arg("width"), py::arg("n_params"));
  m.def("ks_test",
        [](const Sample& s, const Family& f) {
          return gof_to_dict(ks_test(s, f.d));
        },
        py::arg("sample"), py::arg("family"));

  m.def("joint_interior_grid",
        [](const Family& x, const Family& y, int n, double p_lo, double p_hi) {
          return joint_interior_grid(x.d, y.d, n, p_lo, p_hi);
        },
        py::arg("family_x"), py::arg("family_y"), py::arg("n") = 512,
        py::arg("p_lo") = 0.001, py::arg("p_hi") = 0.999);
  m.def("rai_order_check",
        [](const Family& x, const Family& y, double alpha,
           std::vector<double> grid) {
          const OrderCheckResult res = rai_order_check(x.d, y.d, alpha, grid);
          py::dict d;
          d["direction"] = to_string(res.direction);
          d["alpha"] = res.alpha;
          d["max_signed_gap"] = res.max_signed_gap;
          d["crossings"] = res.crossings;
          return d;
        },
        py::arg("family_x"), py::arg("family_y"), py::arg("alpha"),
        py::arg("grid"));
  m.def("reciprocal_duality_check",
        [](const Family& f, double alpha, std::vector<double> grid) {
          return reciprocal_duality_check(f.d, reciprocal_of(f.d), alpha, grid);
        },
        py::arg("family"), py::arg("alpha"), py::arg("grid"),
        "Duality defect of a family against its own reciprocal law");
  m.def("implication_report",
        [](const Family& x, const Family& y, double beta,
           std::vector<double> grid) {
          const ImplicationReport rep = implication_report(x.d, y.d, beta, grid);
          py::dict d;
          d["premise_st"] = rep.premise_st;
          d["beta_direction"] = to_string(rep.beta_direction);
          d["premise_holds"] = rep.premise_holds();
          py::list checks;
          for (const auto& c : rep.checks) {
            py::dict item;
            item["alpha"] = c.alpha;
            item["holds"] = c.holds;
            if (c.counterexample_x) item["counterexample_x"] = *c.counterexample_x;
            checks.append(item);
          }
          d["checks"] = checks;
          return d;
        },
        py::arg("family_x"), py::arg("family_y"), py::arg("beta"),
        py::arg("grid"));
}
