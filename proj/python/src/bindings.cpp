#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "aqsl/channels.hpp"
#include "aqsl/config.hpp"
#include "aqsl/control.hpp"
#include "aqsl/error.hpp"
#include "aqsl/experiments.hpp"
#include "aqsl/geodesics.hpp"
#include "aqsl/metrics.hpp"
#include "aqsl/qsl.hpp"

namespace py = pybind11;
using namespace aqsl;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const CArray& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw Error(ErrorCode::DimensionMismatch, "expected a square matrix");
  const auto d = static_cast<std::size_t>(a.shape(0));
  return ComplexMatrix(d, std::vector<Complex>(a.data(), a.data() + d * d));
}

CArray to_array(const ComplexMatrix& m) {
  const auto d = static_cast<py::ssize_t>(m.dim());
  CArray out({d, d});
  std::copy(m.data().begin(), m.data().end(), out.mutable_data());
  return out;
}

DensityMatrix to_state(const CArray& a) { return DensityMatrix(to_matrix(a)); }

py::dict report_dict(const QslReport& r) {
  py::dict d;
  for (const auto& [key, value] : to_record(r)) d[py::str(key)] = value;
  d["metric"] = std::string(to_string(r.metric));
  for (const auto& [key, value] : std::initializer_list<std::pair<const char*, double>>{
           {"L", r.geodesic_distance}, {"ell", r.path_length}, {"action", r.action}, {"tau", r.tau},
           {"tau_geom", r.tau_geom}, {"tau_action", r.tau_action}, {"ratio_geom", r.ratio_geom},
           {"ratio_action", r.ratio_action}, {"delta", r.delta}, {"tau_qfi_sld", r.tau_qfi_sld},
           {"ratio_qfi_sld", r.ratio_qfi_sld}}) {
    d[key] = value;
  }
  return d;
}

Config make_config(const py::dict& settings) {
  Config c;
  for (const auto& [key, value] : settings) {
    apply_setting(c, py::str(key).cast<std::string>(), py::str(value).cast<std::string>());
  }
  validate(c);
  return c;
}

RampProfile make_ramp(const std::vector<double>& times, const std::vector<double>& p) { return RampProfile(times, p); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Geometric and action quantum speed limits for a qubit under generalized amplitude damping";

  static py::exception<Error> error(m, "AqslError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, py::make_tuple(std::string(to_string(e.code())), e.what()));
    }
  });

  // States and distances.
  m.def("pure_state_theta", [](double theta) { return to_array(pure_state_theta(theta).matrix()); }, py::arg("theta"),
        "Projector onto cos(theta)|0> + sin(theta)|1>.");
  m.def("steady_state", [](double beta) { return to_array(steady_state(GadcParams(beta)).matrix()); },
        py::arg("beta"));
  m.def("to_bloch", [](const CArray& rho) {
    const BlochVector r = to_bloch(to_state(rho));
    return py::make_tuple(r.x, r.y, r.z);
  });
  m.def("from_bloch", [](double x, double y, double z) { return to_array(from_bloch({x, y, z}).matrix()); });
  m.def("fidelity_root", [](const CArray& a, const CArray& b) { return fidelity_root(to_state(a), to_state(b)); });
  m.def("dist_qfi", [](const CArray& a, const CArray& b) { return dist_qfi(to_state(a), to_state(b)); });
  m.def("dist_wy", [](const CArray& a, const CArray& b) { return dist_wy(to_state(a), to_state(b)); });
  m.def("dist_td", [](const CArray& a, const CArray& b) { return dist_td(to_state(a), to_state(b)); });
  m.def(
      "geodesic_distance",
      [](const std::string& metric, const CArray& a, const CArray& b) {
        return geodesic_distance(parse_metric(metric), to_state(a), to_state(b));
      },
      py::arg("metric"), py::arg("rho"), py::arg("sigma"));
  m.def(
      "sld_qfi",
      [](const CArray& rho, const CArray& rho_dot, double reg) { return sld_qfi(to_state(rho), to_matrix(rho_dot), reg); },
      py::arg("rho"), py::arg("rho_dot"), py::arg("regularization") = 1e-12);

  // Channel.
  m.def("gadc_kraus", [](double p, double c) {
    std::vector<CArray> out;
    for (const auto& k : gadc_kraus(p, c)) out.push_back(to_array(k));
    return out;
  });
  m.def(
      "gadc_state",
      [](const CArray& rho0, double p, double beta) { return to_array(gadc_state(to_state(rho0), p, GadcParams(beta)).matrix()); },
      py::arg("rho0"), py::arg("p"), py::arg("beta"));
  m.def(
      "lindblad_propagate",
      [](const CArray& rho0, double t_final, std::size_t n_steps, double beta) {
        const DiscretizedPath path = lindblad_propagate(to_state(rho0), t_final, n_steps, GadcParams(beta));
        std::vector<CArray> states;
        for (const auto& s : path.states()) states.push_back(to_array(s.matrix()));
        return py::make_tuple(path.times(), states);
      },
      py::arg("rho0"), py::arg("t_final"), py::arg("n_steps"), py::arg("beta"),
      "RK4 integration of the thermal master equation; returns (times, states).");

  // Geodesics.
  m.def(
      "geodesic_point",
      [](const std::string& metric, const CArray& rho0, const CArray& rho_tau, double p) {
        return to_array(geodesic_generator(parse_metric(metric), to_state(rho0), to_state(rho_tau))(p).matrix());
      },
      py::arg("metric"), py::arg("rho0"), py::arg("rho_tau"), py::arg("p"));
  m.def(
      "geodesic_length_check",
      [](const std::string& metric, const CArray& rho0, const CArray& rho_tau, std::size_t n) {
        const auto c = geodesic_length_check(parse_metric(metric), to_state(rho0), to_state(rho_tau), n);
        return py::dict(py::arg("length") = c.length, py::arg("distance") = c.distance, py::arg("gap") = c.gap);
      },
      py::arg("metric"), py::arg("rho0"), py::arg("rho_tau"), py::arg("n_intervals") = 2000);

  // Speed limits along a GADC path.
  m.def(
      "gadc_report",
      [](double theta, double beta, const std::string& metric, const std::vector<double>& times,
         const std::vector<double>& p) {
        const PathGenerator gen = gadc_generator(pure_state_theta(theta), GadcParams(beta));
        return report_dict(action_qsl(sample_path(gen, make_ramp(times, p)), parse_metric(metric)));
      },
      py::arg("theta"), py::arg("beta"), py::arg("metric"), py::arg("times"), py::arg("p"),
      "QslReport of the GADC path from the pure state at theta, traversed on the given ramp.");
  m.def(
      "arc_length_ramp",
      [](double theta, double beta, const std::string& metric, double tau, std::size_t n) {
        const PathGenerator gen = gadc_generator(pure_state_theta(theta), GadcParams(beta));
        const RampProfile r = arc_length_reparametrize(gen, parse_metric(metric), tau, n);
        return py::make_tuple(r.times(), r.p_values());
      },
      py::arg("theta"), py::arg("beta"), py::arg("metric"), py::arg("tau") = 1.0, py::arg("n_intervals") = 2000);
  m.def(
      "optimize_ramp",
      [](double theta, double beta, const std::string& metric, const std::vector<double>& times,
         const std::vector<double>& p, std::size_t max_iterations, double tolerance) {
        const PathGenerator gen = gadc_generator(pure_state_theta(theta), GadcParams(beta));
        const OptimizeResult r =
            optimize_ramp(gen, parse_metric(metric), make_ramp(times, p), {max_iterations, tolerance, 0});
        return py::dict(py::arg("times") = r.ramp.times(), py::arg("p") = r.ramp.p_values(),
                        py::arg("history") = r.history, py::arg("iterations") = r.iterations);
      },
      py::arg("theta"), py::arg("beta"), py::arg("metric"), py::arg("times"), py::arg("p"),
      py::arg("max_iterations") = 100000, py::arg("tolerance") = 1e-10);
  m.def("uniform_ramp", [](std::size_t n, double tau) {
    const RampProfile r = RampProfile::uniform(n, tau);
    return py::make_tuple(r.times(), r.p_values());
  }, py::arg("n_intervals"), py::arg("tau") = 1.0);
  m.def("exponential_ramp", [](std::size_t n, double tau, double horizon) {
    const RampProfile r = RampProfile::exponential_clock(n, tau, horizon);
    return py::make_tuple(r.times(), r.p_values());
  }, py::arg("n_intervals"), py::arg("tau") = 1.0, py::arg("horizon") = 12.0);

  // Experiment drivers; settings use the same keys as the config file.
  m.def(
      "sweep_theta",
      [](const py::dict& settings) {
        py::list rows;
        for (const SweepRow& r : sweep_theta(make_config(settings))) {
          rows.append(py::dict(py::arg("theta") = r.theta, py::arg("metric") = std::string(to_string(r.metric)),
                               py::arg("L") = r.L, py::arg("ell") = r.ell, py::arg("ratio_geom") = r.ratio_geom,
                               py::arg("delta") = r.delta, py::arg("tightest") = r.tightest, py::arg("tie") = r.tie));
        }
        return rows;
      },
      py::arg("settings") = py::dict());
  m.def(
      "optimize_summary",
      [](const py::dict& settings) {
        Config c = make_config(settings);
        c.profile_points = 0;
        py::list rows;
        for (const OptimizeRow& r : optimize_experiment(c).summary) {
          rows.append(py::dict(py::arg("theta") = r.theta, py::arg("metric") = std::string(to_string(r.metric)),
                               py::arg("ratio_geom_sq") = r.ratio_geom_sq,
                               py::arg("ratio_action_initial") = r.ratio_action_initial,
                               py::arg("ratio_action_optimized") = r.ratio_action_optimized,
                               py::arg("ratio_action_arclength") = r.ratio_action_arclength,
                               py::arg("ratio_geom_initial") = r.ratio_geom_initial,
                               py::arg("iterations") = r.iterations));
        }
        return rows;
      },
      py::arg("settings") = py::dict());
  m.def(
      "report",
      [](const py::dict& settings) {
        py::list out;
        for (const QslReport& r : report_experiment(make_config(settings))) out.append(report_dict(r));
        return out;
      },
      py::arg("settings") = py::dict());
}
