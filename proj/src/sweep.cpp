#include "casimir/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "casimir/asymptotics.hpp"
#include "casimir/errors.hpp"
#include "casimir/parallel.hpp"
#include "casimir/special.hpp"

namespace casimir {

namespace {

constexpr double kHbar = 1.054571817e-34;       // J s
constexpr double kSpeedOfLight = 299792458.0;  // m / s

std::string scientific(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

}  // namespace

double pressure_si(double pressure_norm, double d, double omega_rad_s) {
  const double c3 = kSpeedOfLight * kSpeedOfLight * kSpeedOfLight;
  const double w2 = omega_rad_s * omega_rad_s;
  return pressure_norm * kHbar * w2 * w2 / (c3 * d * d * d);
}

std::vector<SweepRow> run_sweep(const Scenario& scenario, double tau, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!scenario.sweep) throw DomainError("scenario has no distance grid ('d' in [run])");
  const std::vector<double> distances = scenario.sweep->distances();
  const MirrorStack m1 = scenario.stack1();
  const MirrorStack m2 = scenario.stack2();
  const ResponseModel gap = scenario.gap_medium();

  std::optional<double> c3;
  if (m1.homogeneous() && m2.homogeneous() && gap == ResponseModel::vacuum()) {
    try {
      c3 = hamaker_c3(m1.substrate, m2.substrate, tau, cfg);
    } catch (const DomainError&) {
    }
  }

  QuadratureConfig point_cfg = cfg;
  point_cfg.workers = 1;
  std::vector<SweepRow> rows(distances.size());
  parallel_for(distances.size(), cfg.workers, [&](std::size_t i) {
    const double d = distances[i];
    const ForceResult f = force(m1, m2, gap, d, tau, point_cfg);
    rows[i] = {d,         d / (2.0 * kPi), f.pressure_norm, f.te_part, f.tm_part,
               f.bound_lo, f.bound_hi,      c3,              f.est_error};
  });
  return rows;
}

void recheck_rows(const std::vector<SweepRow>& rows, double tau) {
  for (const SweepRow& row : rows) {
    const BoundEnvelope env = bound_envelope_quadrature(row.d, tau);
    const double slack = row.est_error + 1e-9 * std::max(std::abs(env.lo), std::abs(env.hi));
    if (std::abs(env.lo - row.bound_lo) > slack || std::abs(env.hi - row.bound_hi) > slack) {
      throw InvariantError("envelope columns disagree with quadrature re-check at d = " +
                           scientific(row.d));
    }
    if (row.pressure_norm < env.lo - slack || row.pressure_norm > env.hi + slack) {
      throw InvariantError("pressure outside the ideal-mirror envelope at d = " + scientific(row.d));
    }
  }
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows,
               std::optional<double> omega_rad_s) {
  out << "d_over_c_by_omega,d_over_lambda,pressure_norm,te_part,tm_part,bound_lo,bound_hi,"
         "c3_over_d3,est_error";
  if (omega_rad_s) out << ",F_SI_Pa";
  out << '\n';
  for (const SweepRow& r : rows) {
    out << scientific(r.d) << ',' << scientific(r.d_over_lambda) << ','
        << scientific(r.pressure_norm) << ',' << scientific(r.te_part) << ','
        << scientific(r.tm_part) << ',' << scientific(r.bound_lo) << ','
        << scientific(r.bound_hi) << ',' << (r.c3_norm ? scientific(*r.c3_norm) : "") << ','
        << scientific(r.est_error);
    if (omega_rad_s) out << ',' << scientific(pressure_si(r.pressure_norm, r.d, *omega_rad_s));
    out << '\n';
  }
}

}  // namespace casimir
