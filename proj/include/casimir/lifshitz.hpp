#pragma once

#include "casimir/reflection.hpp"

namespace casimir {

/// Numerical controls for the Lifshitz evaluators.
struct QuadratureConfig {
  double rel_tol = 1e-8;
  double abs_tol = 1e-14;  // in units of the normalized pressure
  long max_matsubara = 1'000'000;
  int kappa_nodes = 64;  // Gauss points per panel of the kappa integral
  int xi_nodes = 64;     // Gauss points per panel of the T = 0 frequency integral
  int workers = 1;       // threads for the Matsubara sum

  /// Throws DomainError when a tolerance is not positive or a node count is below 2.
  void validate() const;
};

/// Casimir pressure in units hbar Omega / d^3 (positive = attraction).
struct ForceResult {
  double pressure_norm = 0.0;
  double te_part = 0.0;
  double tm_part = 0.0;
  long n_terms_used = 0;  // Matsubara terms, or frequency nodes at T = 0
  double est_error = 0.0;
  double bound_lo = 0.0;  // ideal-mirror envelope at the same (d, tau)
  double bound_hi = 0.0;
};

struct BoundEnvelope {
  double lo = 0.0;
  double hi = 0.0;
};

/// xi_n = 2 pi n tau.
double matsubara_xi(long n, double tau);

/// kappa^2 / D = kappa^2 r1 r2 e^{-2 kappa d} / (1 - r1 r2 e^{-2 kappa d}) for one
/// polarization, evaluated without forming e^{+2 kappa d}.
double integrand(const MirrorStack& mirror1, const MirrorStack& mirror2, const ResponseModel& gap,
                 Polarization pol, double d, const Kinematics& kin);

/// Lifshitz pressure at temperature tau = k_B T / (hbar Omega) > 0: Matsubara sum with
/// the n = 0 term halved, truncated once the terms and a geometric tail estimate drop
/// below rel_tol of the accumulated magnitude. Throws ConvergenceError if that needs
/// more than max_matsubara terms.
ForceResult force_finite_temperature(const MirrorStack& mirror1, const MirrorStack& mirror2,
                                     const ResponseModel& gap, double d, double tau,
                                     const QuadratureConfig& cfg = {});

/// T = 0 limit: the Matsubara sum becomes a frequency integral, evaluated on the map
/// xi = t / (1 - t) with adaptive Gauss panels in t.
ForceResult force_zero_temperature(const MirrorStack& mirror1, const MirrorStack& mirror2,
                                   const ResponseModel& gap, double d,
                                   const QuadratureConfig& cfg = {});

/// Dispatches on tau: zero temperature for tau == 0, Matsubara sum otherwise.
ForceResult force(const MirrorStack& mirror1, const MirrorStack& mirror2,
                  const ResponseModel& gap, double d, double tau,
                  const QuadratureConfig& cfg = {});

/// Pressure with r1 r2 replaced by +1 (hi) and -1 (lo) in a vacuum gap. At tau = 0
/// this is (-7/8, 1) pi^2 / (240 d) in normalized units; at finite tau the Matsubara
/// sum is done in closed form with polylogarithms.
BoundEnvelope bound_envelope(double d, double tau);

/// Same envelope by direct quadrature of x^2 / (e^x -+ 1) per Matsubara term. An
/// independent route used to cross-check bound_envelope.
BoundEnvelope bound_envelope_quadrature(double d, double tau);

}  // namespace casimir
