#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "casimir/lifshitz.hpp"
#include "casimir/materials.hpp"

namespace casimir {

enum class Regime { Short, Intermediate, Thermal };

std::string_view to_string(Regime regime);

/// (x - 1) / (x + 1) for x >= 1; 1 for x = +inf. Throws DomainError for x < 1.
double nonretarded_R(double x);

/// Hamaker constant c3 in units hbar Omega for two homogeneous plates across vacuum:
///
///   c3 = (tau / 4 pi) sum'_n { Li3[R(eps1) R(eps2)] + Li3[R(mu1) R(mu2)] }
///
/// with the n = 0 term halved; at tau = 0 the sum becomes (1 / 8 pi^2) int dxi.
/// Short-distance pressure is c3 / d^3, so c3 is also the normalized pressure limit.
/// Throws DomainError when both plates are perfect of the same kind (R = 1 at every
/// frequency, so the nonretarded limit diverges).
double hamaker_c3(const ResponseModel& mat1, const ResponseModel& mat2, double tau,
                  const QuadratureConfig& cfg = {});

struct IdealLimits {
  double f_casimir = 0.0;          // pi^2 / (240 d^4)
  double f_thermal = 0.0;          // zeta(3) tau / (8 pi d^3), the commonly quoted 8 pi form
  double f_thermal_derived = 0.0;  // zeta(3) tau / (4 pi d^3), n = 0 term of the sum
};

/// Ideal-mirror pressures in natural units hbar = c = Omega = 1 (not normalized by d^3).
IdealLimits ideal_limits(double d, double tau);

/// hbar c / (k_B T) in units c / Omega, i.e. 1 / tau.
double thermal_wavelength(double tau);

/// short for d < c / Omega (Lambda / 2 pi), thermal for d > 1 / tau, otherwise intermediate.
Regime classify_regime(double d, double tau);

/// Short-distance repulsion for a liquid gap matched to the mirrors, eps_0 = eps_2 and
/// mu_0 = mu_1 = 1:
///
///   F = (1/pi) sum_{n>=1} (2nd)^{2n-3} int dxi/2pi Gamma(3-2n, 2n xi d)
///                           (-(eps1-eps0)/(eps1+eps0) (mu2-mu1) xi^2 / 4)^n
///
/// The series carries only the TM channel. tm_only = false adds the TE channel,
/// built the same way from r_TE1 ~ -(eps1-eps0) xi^2 / 4 kappa^2 and
/// r_TE2 ~ (mu2-mu0)/(mu2+mu0); at short distance it is the same order as TM.
struct MatchedMediaResult {
  double pressure_norm = 0.0;  // F d^3 / (hbar Omega); negative = repulsion
  double c1_norm = 0.0;        // F -> -c1 / d as d -> 0; c1 in units hbar Omega^3 / c^2
  int terms_used = 0;
  double last_term = 0.0;
};

MatchedMediaResult matched_media_force(const ResponseModel& mirror1, const ResponseModel& mirror2,
                                       const ResponseModel& gap, double d, int n_max,
                                       bool tm_only = true);

/// True when gap and mirror 2 share the same dielectric function and gap and mirror 1
/// are nonmagnetic, the setting of matched_media_force.
bool is_matched_media(const ResponseModel& mirror1, const ResponseModel& mirror2,
                      const ResponseModel& gap);

struct AsymptoticReport {
  std::optional<double> c3_norm;  // absent for layered mirrors or a divergent limit
  std::optional<double> c1_norm;  // present for matched media
  double f_casimir = 0.0;
  double f_thermal = 0.0;
  double f_thermal_derived = 0.0;
  Regime regime = Regime::Short;
  double lambda_T = kInfinity;
  std::string note;
};

AsymptoticReport asymptotic_report(const MirrorStack& mirror1, const MirrorStack& mirror2,
                                   const ResponseModel& gap, double d, double tau,
                                   const QuadratureConfig& cfg = {});

}  // namespace casimir
