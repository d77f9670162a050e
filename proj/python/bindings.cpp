#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "photofpt/analytic.hpp"
#include "photofpt/field.hpp"
#include "photofpt/mc.hpp"

namespace py = pybind11;
using namespace photofpt;

PYBIND11_MODULE(_core, m) {
    m.doc() = "First-passage counting rates of a threshold accumulator";

    py::register_exception<InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);
    py::register_exception<TruncationError>(m, "TruncationError", PyExc_ArithmeticError);

    py::class_<DetectorParams>(m, "DetectorParams")
        .def(py::init([](double e_m, double sigma, double i_s, double cross_section) {
                 DetectorParams p{e_m, sigma, i_s, cross_section};
                 p.validate();
                 return p;
             }),
             py::arg("e_m") = 1.0, py::arg("sigma") = 1.0, py::arg("i_s") = 0.0, py::arg("cross_section") = 1.0)
        .def_static("from_x",
                    [](double x, double e_m, double sigma, double a) {
                        return DetectorParams::from_x(DimensionlessIntensity(x), e_m, sigma, a);
                    },
                    py::arg("x"), py::arg("e_m") = 1.0, py::arg("sigma") = 1.0, py::arg("cross_section") = 1.0)
        .def_readwrite("e_m", &DetectorParams::e_m)
        .def_readwrite("sigma", &DetectorParams::sigma)
        .def_readwrite("i_s", &DetectorParams::i_s)
        .def_readwrite("cross_section", &DetectorParams::cross_section)
        .def_property_readonly("x", [](const DetectorParams& p) { return p.x().value(); })
        .def_property_readonly("time_unit", &DetectorParams::time_unit)
        .def("__repr__", [](const DetectorParams& p) {
            return "DetectorParams(e_m=" + std::to_string(p.e_m) + ", sigma=" + std::to_string(p.sigma) +
                   ", i_s=" + std::to_string(p.i_s) + ", cross_section=" + std::to_string(p.cross_section) + ")";
        });

    py::class_<SeriesControl>(m, "SeriesControl")
        .def(py::init<>())
        .def_readwrite("n_images", &SeriesControl::n_images)
        .def_readwrite("kl_max", &SeriesControl::kl_max)
        .def_readwrite("abs_tol", &SeriesControl::abs_tol)
        .def_readwrite("rel_tol", &SeriesControl::rel_tol);

    py::class_<SeriesValue>(m, "SeriesValue")
        .def_readonly("value", &SeriesValue::value)
        .def_readonly("tail", &SeriesValue::tail)
        .def_readonly("terms", &SeriesValue::terms)
        .def_readonly("converged", &SeriesValue::converged)
        .def("__float__", [](const SeriesValue& v) { return v.value; });

    py::class_<SurvivalFactors>(m, "SurvivalFactors")
        .def_readonly("t", &SurvivalFactors::t)
        .def_readonly("l_axis", &SurvivalFactors::l_axis)
        .def_readonly("k_axis", &SurvivalFactors::k_axis)
        .def_readonly("converged", &SurvivalFactors::converged)
        .def_property_readonly("survival", &SurvivalFactors::survival);

    m.def("mean_fpt_1d", &mean_fpt_1d, py::arg("params"));
    m.def("rate_1d", &rate_1d, py::arg("params"));
    m.def("rate_1d_asymptotic",
          [](const DetectorParams& p, const std::string& regime) {
              if (regime != "high" && regime != "low") throw InvalidParameter("regime must be 'high' or 'low'");
              return rate_1d_asymptotic(p, regime == "high" ? Regime::high : Regime::low);
          },
          py::arg("params"), py::arg("regime"));
    m.def("axis_survival_image", &axis_survival_image, py::arg("t"), py::arg("drift"), py::arg("params"),
          py::arg("ctrl") = SeriesControl{});
    m.def("axis_survival_spectral", &axis_survival_spectral, py::arg("t"), py::arg("params"),
          py::arg("ctrl") = SeriesControl{}, py::arg("drift") = 0.0);
    m.def("survival_3d", &survival_3d, py::arg("t"), py::arg("params"), py::arg("ctrl") = SeriesControl{});
    m.def("f3_series",
          [](double x, const SeriesControl& c) { return f3_series(DimensionlessIntensity(x), c); },
          py::arg("x"), py::arg("ctrl") = SeriesControl{});
    m.def("mean_fpt_3d", &mean_fpt_3d, py::arg("params"), py::arg("ctrl") = SeriesControl{});
    m.def("rate_3d", &rate_3d, py::arg("params"), py::arg("ctrl") = SeriesControl{});
    m.def("dark_fraction",
          [](double x, int dimension) {
              if (dimension != 1 && dimension != 3) throw InvalidParameter("dimension must be 1 or 3");
              return dark_fraction(DimensionlessIntensity(x), dimension == 1 ? Geometry::d1 : Geometry::d3);
          },
          py::arg("x"), py::arg("dimension") = 1);
    m.def("quantum_rate",
          [](double i_s, double eta, double k_const) { return quantum_rate(i_s, {eta, k_const}); },
          py::arg("i_s"), py::arg("eta") = 1.0, py::arg("k_const") = 1.0);

    m.def("g_tau", [](double tau) { return field::g_tau(tau); }, py::arg("tau"));
    m.def("g_tau_small", &field::g_tau_small, py::arg("tau"));
    m.def("g_tau_large", &field::g_tau_large, py::arg("tau"));
    m.def("moment_integral", [] {
        const auto r = field::moment_integral();
        return py::dict(py::arg("quadrature") = r.quadrature, py::arg("closed_form") = r.closed_form,
                        py::arg("agree") = r.agree);
    });
    m.def("sigma_const", [] {
        const auto s = field::sigma_const();
        return py::dict(py::arg("sigma2_time") = s.sigma2_time, py::arg("sigma2_frequency") = s.sigma2_frequency,
                        py::arg("sigma2_closed_form") = s.sigma2_closed_form,
                        py::arg("sigma") = s.sigma_frequency,
                        py::arg("relative_difference") = s.relative_difference, py::arg("agree") = s.agree);
    });

    py::class_<mc::FPTEstimate>(m, "FPTEstimate")
        .def_readonly("mean", &mc::FPTEstimate::mean)
        .def_readonly("std_err", &mc::FPTEstimate::std_err)
        .def_readonly("n_absorbed", &mc::FPTEstimate::n_absorbed)
        .def_readonly("n_censored", &mc::FPTEstimate::n_censored)
        .def_readonly("dt", &mc::FPTEstimate::dt_used)
        .def_property_readonly("reliable", &mc::FPTEstimate::reliable);

    py::class_<mc::RichardsonEstimate>(m, "RichardsonEstimate")
        .def_readonly("coarse", &mc::RichardsonEstimate::coarse)
        .def_readonly("fine", &mc::RichardsonEstimate::fine)
        .def_readonly("extrapolated", &mc::RichardsonEstimate::extrapolated);

    auto make_config = [](const DetectorParams& p, int dimension, const std::string& boundary, double dt,
                          std::int64_t n_paths, std::uint64_t seed) {
        return mc::MCConfig::make(p, dimension, mc::boundary_from_string(boundary), dt, n_paths, seed);
    };
    m.def(
        "simulate_fpt",
        [make_config](const DetectorParams& p, int dimension, const std::string& boundary, double dt,
                      std::int64_t n_paths, std::uint64_t seed, unsigned workers) {
            const auto cfg = make_config(p, dimension, boundary, dt, n_paths, seed);
            py::gil_scoped_release release;
            return mc::simulate_fpt(cfg, {workers});
        },
        py::arg("params"), py::arg("dimension") = 1, py::arg("boundary") = "interval", py::arg("dt") = 1e-3,
        py::arg("n_paths") = 100000, py::arg("seed") = mc::kDefaultSeed, py::arg("workers") = 0);
    m.def(
        "simulate_fpt_richardson",
        [make_config](const DetectorParams& p, int dimension, const std::string& boundary, double dt,
                      std::int64_t n_paths, std::uint64_t seed, unsigned workers) {
            const auto cfg = make_config(p, dimension, boundary, dt, n_paths, seed);
            py::gil_scoped_release release;
            return mc::simulate_fpt_richardson(cfg, {workers});
        },
        py::arg("params"), py::arg("dimension") = 1, py::arg("boundary") = "interval", py::arg("dt") = 1e-3,
        py::arg("n_paths") = 100000, py::arg("seed") = mc::kDefaultSeed, py::arg("workers") = 0);
    m.def("zscore", &mc::zscore, py::arg("analytic"), py::arg("estimate"));
    m.attr("DEFAULT_SEED") = mc::kDefaultSeed;
}
