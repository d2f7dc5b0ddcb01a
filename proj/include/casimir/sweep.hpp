#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "casimir/lifshitz.hpp"
#include "casimir/scenario.hpp"

namespace casimir {

/// One CSV row. Pressures are normalized to hbar Omega / d^3.
struct SweepRow {
  double d = 0.0;  // units c / Omega
  double d_over_lambda = 0.0;
  double pressure_norm = 0.0;
  double te_part = 0.0;
  double tm_part = 0.0;
  double bound_lo = 0.0;
  double bound_hi = 0.0;
  std::optional<double> c3_norm;  // short-distance asymptote c3 / d^3, homogeneous mirrors
  double est_error = 0.0;
};

/// Evaluates the scenario's distance grid at temperature tau. Points run on
/// cfg.workers threads; rows come back in grid order and do not depend on the
/// worker count.
std::vector<SweepRow> run_sweep(const Scenario& scenario, double tau, const QuadratureConfig& cfg);

/// Re-derives the ideal-mirror envelope of every row by direct quadrature and checks
/// bound_lo <= pressure_norm <= bound_hi. Throws InvariantError on the first violation.
void recheck_rows(const std::vector<SweepRow>& rows, double tau);

/// Writes header and rows as %.12e CSV. With omega_rad_s set, appends F_SI_Pa, the
/// pressure in pascal for reference frequency Omega = omega_rad_s.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows,
               std::optional<double> omega_rad_s = std::nullopt);

/// Pressure in Pa for normalized pressure p at distance d (units c / Omega).
double pressure_si(double pressure_norm, double d, double omega_rad_s);

}  // namespace casimir
