#include "casimir/materials.hpp"

#include <cmath>
#include <string>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

void require_parameter(double value, const char* name) {
  if (!std::isfinite(value) || value < 0.0) {
    throw DomainError(std::string("Lorentz-Drude parameter ") + name +
                      " must be finite and non-negative");
  }
}

void require_frequency(double xi) {
  if (!(xi >= 0.0)) throw DomainError("imaginary frequency xi must be >= 0");
}

// strength^2 / (resonance^2 + xi^2), with the xi = 0 Drude pole mapped to +inf.
double oscillator(double strength, double resonance, double xi) {
  if (strength == 0.0) return 0.0;
  const double denom = resonance * resonance + xi * xi;
  if (denom == 0.0) return kInfinity;
  return strength * strength / denom;
}

}  // namespace

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::LorentzDrude: return "lorentz-drude";
    case ModelKind::Vacuum: return "vacuum";
    case ModelKind::PerfectElectric: return "electric";
    case ModelKind::PerfectMagnetic: return "magnetic";
  }
  return "?";
}

ResponseModel ResponseModel::lorentz_drude(double eps_strength, double eps_resonance,
                                           double mu_strength, double mu_resonance) {
  require_parameter(eps_strength, "eps_strength");
  require_parameter(eps_resonance, "eps_resonance");
  require_parameter(mu_strength, "mu_strength");
  require_parameter(mu_resonance, "mu_resonance");
  return {ModelKind::LorentzDrude, eps_strength, eps_resonance, mu_strength, mu_resonance};
}

bool ResponseModel::has_eps_pole() const {
  return kind == ModelKind::LorentzDrude && eps_strength > 0.0 && eps_resonance == 0.0;
}

bool ResponseModel::has_mu_pole() const {
  return kind == ModelKind::LorentzDrude && mu_strength > 0.0 && mu_resonance == 0.0;
}

double eps_susceptibility(const ResponseModel& model, double xi) {
  require_frequency(xi);
  switch (model.kind) {
    case ModelKind::PerfectElectric: return kInfinity;
    case ModelKind::Vacuum:
    case ModelKind::PerfectMagnetic: return 0.0;
    case ModelKind::LorentzDrude: break;
  }
  return oscillator(model.eps_strength, model.eps_resonance, xi);
}

double mu_susceptibility(const ResponseModel& model, double xi) {
  require_frequency(xi);
  switch (model.kind) {
    case ModelKind::PerfectMagnetic: return kInfinity;
    case ModelKind::Vacuum:
    case ModelKind::PerfectElectric: return 0.0;
    case ModelKind::LorentzDrude: break;
  }
  return oscillator(model.mu_strength, model.mu_resonance, xi);
}

double epsilon_i(const ResponseModel& model, double xi) {
  return 1.0 + eps_susceptibility(model, xi);
}

double mu_i(const ResponseModel& model, double xi) { return 1.0 + mu_susceptibility(model, xi); }

}  // namespace casimir
