#include <sstream>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "casimir/asymptotics.hpp"
#include "casimir/errors.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/scenario.hpp"
#include "casimir/special.hpp"
#include "casimir/sweep.hpp"

namespace py = pybind11;
using namespace casimir;

PYBIND11_MODULE(_casimir, m) {
  m.doc() = "Casimir pressure between planar magnetodielectric multilayer mirrors";

  // std::domain_error and std::invalid_argument already map to ValueError
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  static py::exception<ParseError> parse(m, "ParseError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      // carry the position as attributes on the Python exception
      py::object err = py::handle(parse.ptr())(e.what());
      PyObject_SetAttrString(err.ptr(), "line", py::int_(e.line()).ptr());
      PyObject_SetAttrString(err.ptr(), "column", py::int_(e.column()).ptr());
      PyErr_SetObject(parse.ptr(), err.ptr());
    }
  });

  py::enum_<ModelKind>(m, "ModelKind")
      .value("LorentzDrude", ModelKind::LorentzDrude)
      .value("Vacuum", ModelKind::Vacuum)
      .value("PerfectElectric", ModelKind::PerfectElectric)
      .value("PerfectMagnetic", ModelKind::PerfectMagnetic);

  py::class_<ResponseModel>(m, "ResponseModel")
      .def_static("vacuum", &ResponseModel::vacuum)
      .def_static("perfect_electric", &ResponseModel::perfect_electric)
      .def_static("perfect_magnetic", &ResponseModel::perfect_magnetic)
      .def_static("lorentz_drude", &ResponseModel::lorentz_drude, py::arg("eps_strength"),
                  py::arg("eps_resonance"), py::arg("mu_strength") = 0.0, py::arg("mu_resonance") = 0.0)
      .def_readonly("kind", &ResponseModel::kind)
      .def_readonly("eps_strength", &ResponseModel::eps_strength)
      .def_readonly("eps_resonance", &ResponseModel::eps_resonance)
      .def_readonly("mu_strength", &ResponseModel::mu_strength)
      .def_readonly("mu_resonance", &ResponseModel::mu_resonance)
      .def("epsilon", [](const ResponseModel& r, double xi) { return epsilon_i(r, xi); })
      .def("mu", [](const ResponseModel& r, double xi) { return mu_i(r, xi); })
      .def(py::self == py::self);

  py::class_<Layer>(m, "Layer")
      .def(py::init<ResponseModel, double>(), py::arg("material"), py::arg("thickness"))
      .def_readwrite("material", &Layer::material)
      .def_readwrite("thickness", &Layer::thickness);

  py::class_<MirrorStack>(m, "MirrorStack")
      .def(py::init([](ResponseModel substrate, std::vector<Layer> layers) {
             return MirrorStack{std::move(layers), substrate};
           }),
           py::arg("substrate"), py::arg("layers") = std::vector<Layer>{})
      .def_readwrite("layers", &MirrorStack::layers)
      .def_readwrite("substrate", &MirrorStack::substrate);

  py::class_<QuadratureConfig>(m, "QuadratureConfig")
      .def(py::init<>())
      .def_readwrite("rel_tol", &QuadratureConfig::rel_tol)
      .def_readwrite("abs_tol", &QuadratureConfig::abs_tol)
      .def_readwrite("max_matsubara", &QuadratureConfig::max_matsubara)
      .def_readwrite("kappa_nodes", &QuadratureConfig::kappa_nodes)
      .def_readwrite("xi_nodes", &QuadratureConfig::xi_nodes)
      .def_readwrite("workers", &QuadratureConfig::workers);

  py::class_<ForceResult>(m, "ForceResult")
      .def_readonly("pressure_norm", &ForceResult::pressure_norm)
      .def_readonly("te_part", &ForceResult::te_part)
      .def_readonly("tm_part", &ForceResult::tm_part)
      .def_readonly("n_terms_used", &ForceResult::n_terms_used)
      .def_readonly("est_error", &ForceResult::est_error)
      .def_readonly("bound_lo", &ForceResult::bound_lo)
      .def_readonly("bound_hi", &ForceResult::bound_hi);

  m.def("force", &force, py::arg("mirror1"), py::arg("mirror2"), py::arg("gap") = ResponseModel{},
        py::arg("d"), py::arg("tau") = 0.0, py::arg("config") = QuadratureConfig{},
        "Normalized pressure F d^3 / (hbar Omega); positive is attraction.",
        py::call_guard<py::gil_scoped_release>());
  m.def("bound_envelope", [](double d, double tau) {
    const BoundEnvelope b = bound_envelope(d, tau);
    return py::make_tuple(b.lo, b.hi);
  }, py::arg("d"), py::arg("tau") = 0.0);

  m.def("hamaker_c3", &hamaker_c3, py::arg("mat1"), py::arg("mat2"), py::arg("tau") = 0.0,
        py::arg("config") = QuadratureConfig{});
  m.def("matched_media_c1", [](const ResponseModel& a, const ResponseModel& b, const ResponseModel& gap,
                               bool tm_only) {
    return matched_media_force(a, b, gap, 1.0, 1, tm_only).c1_norm;
  }, py::arg("mirror1"), py::arg("mirror2"), py::arg("gap"), py::arg("tm_only") = true);
  m.def("thermal_wavelength", &thermal_wavelength);

  py::class_<Scenario>(m, "Scenario")
      .def_readonly("temperature", &Scenario::temperature)
      .def("stack1", &Scenario::stack1)
      .def("stack2", &Scenario::stack2)
      .def("gap_medium", &Scenario::gap_medium)
      .def("temperatures", &Scenario::temperature_list)
      .def("distances", [](const Scenario& s) {
        return s.sweep ? s.sweep->distances() : std::vector<double>{};
      })
      .def(py::self == py::self);

  m.def("parse_scenario", [](const std::string& text) { return parse_scenario(text); });
  m.def("serialize_scenario", &serialize_scenario);
  m.def("preset_scenario", [](const std::string& name) { return preset_scenario(name); });
  m.def("preset_names", &preset_names);

  m.def("sweep_csv", [](const Scenario& s, double tau, const QuadratureConfig& cfg) {
    std::ostringstream out;
    {
      py::gil_scoped_release release;
      const std::vector<SweepRow> rows = run_sweep(s, tau, cfg);
      recheck_rows(rows, tau);
      write_csv(out, rows);
    }
    return out.str();
  }, py::arg("scenario"), py::arg("tau") = 0.0, py::arg("config") = QuadratureConfig{});

  m.def("polylog3", &polylog3);
  m.def("upper_gamma", &upper_gamma, py::arg("k"), py::arg("z"));
}
