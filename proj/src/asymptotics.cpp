#include "casimir/asymptotics.hpp"

#include <array>
#include <cmath>
#include <string>

#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/special.hpp"

namespace casimir {

namespace {

constexpr std::array<double, 5> kTBreaks = {0.0, 0.2, 0.5, 0.8, 1.0};

// Li3 terms of the Hamaker sum at one frequency.
double hamaker_term(const ResponseModel& mat1, const ResponseModel& mat2, double xi) {
  const double electric = nonretarded_R(epsilon_i(mat1, xi)) * nonretarded_R(epsilon_i(mat2, xi));
  const double magnetic = nonretarded_R(mu_i(mat1, xi)) * nonretarded_R(mu_i(mat2, xi));
  return polylog3(electric) + polylog3(magnetic);
}

// Integral over xi in [0, inf) on the map xi = t / (1 - t).
template <class F>
double integrate_frequency(F&& f, double rel_tol) {
  auto mapped = [&](double t) -> std::array<double, 1> {
    const double s = 1.0 - t;
    return {f(t / s) / (s * s)};
  };
  AdaptiveOptions options;
  options.rel_tol = rel_tol;
  options.abs_tol = 1e-300;
  return integrate_adaptive<1>(mapped, kTBreaks, options).value[0];
}

bool same_dielectric(const ResponseModel& a, const ResponseModel& b) {
  auto signature = [](const ResponseModel& m) -> std::array<double, 2> {
    if (m.kind != ModelKind::LorentzDrude || m.eps_strength == 0.0) return {0.0, 0.0};
    return {m.eps_strength, m.eps_resonance};
  };
  if (a.kind == ModelKind::PerfectElectric || b.kind == ModelKind::PerfectElectric) return false;
  return signature(a) == signature(b);
}

bool nonmagnetic(const ResponseModel& m) {
  switch (m.kind) {
    case ModelKind::Vacuum:
    case ModelKind::PerfectElectric: return true;
    case ModelKind::PerfectMagnetic: return false;
    case ModelKind::LorentzDrude: return m.mu_strength == 0.0;
  }
  return false;
}

}  // namespace

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::Short: return "short";
    case Regime::Intermediate: return "intermediate";
    case Regime::Thermal: return "thermal";
  }
  return "?";
}

double nonretarded_R(double x) {
  if (x == kInfinity) return 1.0;
  if (!(x >= 1.0)) throw DomainError("nonretarded reflection needs eps or mu >= 1");
  return (x - 1.0) / (x + 1.0);
}

double hamaker_c3(const ResponseModel& mat1, const ResponseModel& mat2, double tau,
                  const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(tau >= 0.0) || !std::isfinite(tau)) throw DomainError("temperature tau must be finite and >= 0");
  if (mat1.is_perfect() && mat1.kind == mat2.kind) {
    throw DomainError("Hamaker constant diverges for two identical perfect mirrors");
  }

  if (tau == 0.0) {
    const double integral =
        integrate_frequency([&](double xi) { return hamaker_term(mat1, mat2, xi); }, cfg.rel_tol);
    return integral / (8.0 * kPi * kPi);
  }

  // Terms fall off like a power of n; the tail is extrapolated from the local exponent.
  double sum = 0.5 * hamaker_term(mat1, mat2, 0.0);
  double previous = kInfinity;
  for (long n = 1; n <= cfg.max_matsubara; ++n) {
    const double term = hamaker_term(mat1, mat2, matsubara_xi(n, tau));
    sum += term;
    if (term == 0.0) return tau / (4.0 * kPi) * sum;
    if (n >= 4 && term < previous) {
      const double p = std::log(previous / term) / std::log(static_cast<double>(n) / (n - 1));
      if (p > 1.5) {
        const double tail = term * static_cast<double>(n) / (p - 1.0);
        if (tail <= cfg.rel_tol * sum) return tau / (4.0 * kPi) * (sum + tail);
      }
    }
    previous = term;
  }
  throw ConvergenceError("Hamaker Matsubara sum did not converge", cfg.max_matsubara, previous);
}

IdealLimits ideal_limits(double d, double tau) {
  if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("distance d must be finite and > 0");
  if (!(tau >= 0.0) || !std::isfinite(tau)) throw DomainError("temperature tau must be finite and >= 0");
  const double d3 = d * d * d;
  return {kPi * kPi / (240.0 * d3 * d), kZeta3 * tau / (8.0 * kPi * d3),
          kZeta3 * tau / (4.0 * kPi * d3)};
}

double thermal_wavelength(double tau) {
  if (!(tau > 0.0)) throw DomainError("thermal wavelength needs tau > 0");
  return 1.0 / tau;
}

Regime classify_regime(double d, double tau) {
  if (d < 1.0) return Regime::Short;
  if (tau > 0.0 && d > thermal_wavelength(tau)) return Regime::Thermal;
  return Regime::Intermediate;
}

bool is_matched_media(const ResponseModel& mirror1, const ResponseModel& mirror2,
                      const ResponseModel& gap) {
  if (gap.is_perfect() || mirror1.kind == ModelKind::PerfectMagnetic) return false;
  return same_dielectric(gap, mirror2) && nonmagnetic(gap) && nonmagnetic(mirror1) &&
         mirror1.kind != ModelKind::PerfectElectric;
}

MatchedMediaResult matched_media_force(const ResponseModel& mirror1, const ResponseModel& mirror2,
                                       const ResponseModel& gap, double d, int n_max,
                                       bool tm_only) {
  if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("distance d must be finite and > 0");
  if (n_max < 1) throw DomainError("n_max must be >= 1");
  if (!is_matched_media(mirror1, mirror2, gap)) {
    throw UnsupportedConfiguration(
        "matched-media series needs eps_gap = eps_2 and nonmagnetic gap and mirror 1");
  }

  // A(xi) with the short-distance product r1 r2 = A xi^2 / (4 kappa^2), per channel.
  auto channel_tm = [&](double xi) {
    const double e1 = epsilon_i(mirror1, xi);
    const double e0 = epsilon_i(gap, xi);
    return -(e1 - e0) / (e1 + e0) * (mu_i(mirror2, xi) - mu_i(mirror1, xi));
  };
  auto channel_te = [&](double xi) {
    const double m2 = mu_i(mirror2, xi);
    const double m0 = mu_i(gap, xi);
    return -(m2 - m0) / (m2 + m0) * (epsilon_i(mirror1, xi) - epsilon_i(gap, xi));
  };

  MatchedMediaResult result;
  const double c1_integral = integrate_frequency(
      [&](double xi) {
        const double a = tm_only ? channel_tm(xi) : channel_tm(xi) + channel_te(xi);
        return -xi * xi * a;
      },
      1e-12);
  result.c1_norm = c1_integral / (16.0 * kPi * kPi);

  double sum = 0.0;
  double previous = kInfinity;
  for (int n = 1; n <= n_max; ++n) {
    // (2nd)^{2n-3} xi^{2n} Gamma(3-2n, z) = (2nd)^{-3} z^{2n} Gamma(3-2n, z), z = 2n xi d
    auto integrand = [&](double xi) {
      const double z = 2.0 * n * xi * d;
      if (z > 700.0) return 0.0;
      const double gamma = std::pow(z, 2 * n) * upper_gamma(3 - 2 * n, z);
      double weight = std::pow(0.25 * channel_tm(xi), n);
      if (!tm_only) weight += std::pow(0.25 * channel_te(xi), n);
      return gamma * weight;
    };
    const double integral = integrate_frequency(integrand, 1e-12);
    const double term = integral / (2.0 * kPi * kPi * std::pow(2.0 * n, 3));
    if (n >= 2 && std::abs(term) > std::abs(previous)) {
      throw ConvergenceError("matched-media series terms grow at n = " + std::to_string(n), n,
                             term);
    }
    sum += term;
    result.terms_used = n;
    result.last_term = term;
    previous = term;
    if (std::abs(term) <= 1e-15 * std::abs(sum)) break;
  }
  result.pressure_norm = sum;
  return result;
}

AsymptoticReport asymptotic_report(const MirrorStack& mirror1, const MirrorStack& mirror2,
                                   const ResponseModel& gap, double d, double tau,
                                   const QuadratureConfig& cfg) {
  AsymptoticReport report;
  const IdealLimits ideal = ideal_limits(d, tau);
  report.f_casimir = ideal.f_casimir;
  report.f_thermal = ideal.f_thermal;
  report.f_thermal_derived = ideal.f_thermal_derived;
  report.regime = classify_regime(d, tau);
  if (tau > 0.0) report.lambda_T = thermal_wavelength(tau);

  if (!mirror1.homogeneous() || !mirror2.homogeneous()) {
    report.note = "c3 needs homogeneous mirrors; layered stacks omit it";
  } else if (!(gap == ResponseModel::vacuum())) {
    report.note = "c3 is defined for a vacuum gap";
  } else {
    try {
      report.c3_norm = hamaker_c3(mirror1.substrate, mirror2.substrate, tau, cfg);
    } catch (const DomainError& e) {
      report.note = std::string("c3 unavailable: ") + e.what();
    }
  }
  if (mirror1.homogeneous() && mirror2.homogeneous() &&
      is_matched_media(mirror1.substrate, mirror2.substrate, gap)) {
    report.c1_norm = matched_media_force(mirror1.substrate, mirror2.substrate, gap, d, 1).c1_norm;
  }
  return report;
}

}  // namespace casimir
