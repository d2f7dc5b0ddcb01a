#pragma once

#include <limits>
#include <string_view>

namespace casimir {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class ModelKind { LorentzDrude, Vacuum, PerfectElectric, PerfectMagnetic };

std::string_view to_string(ModelKind kind);

/// Lossless Lorentz-Drude response at imaginary frequency,
///
///   eps(i xi) = 1 + eps_strength^2 / (eps_resonance^2 + xi^2)
///   mu(i xi)  = 1 + mu_strength^2  / (mu_resonance^2  + xi^2)
///
/// or one of the idealized limits. All frequencies are in units of the reference
/// frequency Omega. A zero resonance with nonzero strength is a Drude (plasma) pole
/// at xi = 0.
struct ResponseModel {
  ModelKind kind = ModelKind::Vacuum;
  double eps_strength = 0.0;
  double eps_resonance = 0.0;
  double mu_strength = 0.0;
  double mu_resonance = 0.0;

  static ResponseModel vacuum() { return {}; }
  static ResponseModel perfect_electric() { return {ModelKind::PerfectElectric}; }
  static ResponseModel perfect_magnetic() { return {ModelKind::PerfectMagnetic}; }
  /// Throws DomainError unless every parameter is finite and non-negative.
  static ResponseModel lorentz_drude(double eps_strength, double eps_resonance,
                                     double mu_strength = 0.0, double mu_resonance = 0.0);

  bool is_perfect() const {
    return kind == ModelKind::PerfectElectric || kind == ModelKind::PerfectMagnetic;
  }
  // eps or mu diverges as xi -> 0+
  bool has_eps_pole() const;
  bool has_mu_pole() const;

  bool operator==(const ResponseModel&) const = default;
};

/// eps(i xi). Returns +infinity for a perfect electric conductor and for a Drude pole
/// at xi = 0. Throws DomainError for xi < 0 or NaN.
double epsilon_i(const ResponseModel& model, double xi);

/// mu(i xi); the magnetic mirror of epsilon_i.
double mu_i(const ResponseModel& model, double xi);

/// eps(i xi) - 1 and mu(i xi) - 1 without the rounding of forming 1 + chi first.
double eps_susceptibility(const ResponseModel& model, double xi);
double mu_susceptibility(const ResponseModel& model, double xi);

}  // namespace casimir
