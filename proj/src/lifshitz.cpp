#include "casimir/lifshitz.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/parallel.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/special.hpp"

namespace casimir {

namespace {

// Breakpoints of the x = 2 kappa d integral relative to its lower limit; the
// integrand is damped by e^{-x}, so nothing beyond +60 is visible at double precision.
constexpr std::array<double, 6> kXOffsets = {0.0, 1.0, 4.0, 12.0, 30.0, 60.0};
constexpr std::array<double, 5> kTBreaks = {0.0, 0.2, 0.5, 0.8, 1.0};

void require_distance(double d) {
  if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("distance d must be finite and > 0");
}

// p e^{-x} / (1 - p e^{-x}), with 1 - p e^{-x} = (1 - p) - p expm1(-x).
double damped_ratio(double product, double x) {
  if (product == 0.0) return 0.0;
  const double den = (1.0 - product) - product * std::expm1(-x);
  if (!(den > 0.0)) {
    throw InvariantError("r1 r2 exp(-2 kappa d) reached 1; |r| <= 1 violated");
  }
  return product * std::exp(-x) / den;
}

struct TermValue {
  double te = 0.0;
  double tm = 0.0;
  double abs = 0.0;  // integral of |te| + |tm| integrands
  double err = 0.0;
};

// Integral over x = 2 kappa d of x^2 r1 r2 e^{-x} / (1 - r1 r2 e^{-x}) at one frequency,
// starting at the gap light cone.
class Cavity {
 public:
  Cavity(const MirrorStack& mirror1, const MirrorStack& mirror2, const ResponseModel& gap,
         double d, const QuadratureConfig& cfg)
      : mirror1_(mirror1), mirror2_(mirror2), gap_(gap), d_(d) {
    options_.nodes = cfg.kappa_nodes;
    options_.rel_tol = 0.1 * cfg.rel_tol;
  }

  TermValue term(double xi) const {
    const StackReflector r1(mirror1_, gap_, xi);
    const StackReflector r2(mirror2_, gap_, xi);
    const double x_min = 2.0 * d_ * xi * std::sqrt(r1.gap_eps_mu());
    if (x_min > 700.0) return {};  // e^{-x} underflows

    const double inv_2d = 0.5 / d_;
    auto kernel = [&](double x) -> std::array<double, 2> {
      const double kappa = x * inv_2d;
      const ReflectionPair a = r1(kappa);
      const ReflectionPair b = r2(kappa);
      const double x2 = x * x;
      return {x2 * damped_ratio(a.te * b.te, x), x2 * damped_ratio(a.tm * b.tm, x)};
    };
    std::array<double, kXOffsets.size()> breaks{};
    for (std::size_t i = 0; i < breaks.size(); ++i) breaks[i] = x_min + kXOffsets[i];
    const auto q = integrate_adaptive<2>(kernel, breaks, options_);
    return {q.value[0], q.value[1], q.abs_value, q.error};
  }

 private:
  const MirrorStack& mirror1_;
  const MirrorStack& mirror2_;
  const ResponseModel& gap_;
  double d_;
  AdaptiveOptions options_;
};

void validate_inputs(const MirrorStack& mirror1, const MirrorStack& mirror2,
                     const ResponseModel& gap, double d, const QuadratureConfig& cfg) {
  cfg.validate();
  require_distance(d);
  require_gap_medium(gap);
  require_valid_stack(mirror1);
  require_valid_stack(mirror2);
}

// int_a^inf x^2 / (e^x - 1) dx and int_a^inf x^2 / (e^x + 1) dx, both times 2.
double upper_envelope_term(double a) {
  if (a == 0.0) return 4.0 * kZeta3;
  const double z = std::exp(-a);
  return 2.0 * (-a * a * std::log1p(-z) + 2.0 * a * polylog2(z) + 2.0 * polylog3(z));
}

double lower_envelope_term(double a) {
  const double z = -std::exp(-a);
  return -2.0 * (-a * a * std::log1p(-z) + 2.0 * a * polylog2(z) + 2.0 * polylog3(z));
}

template <class Term>
double envelope_sum(double d, double tau, Term&& term) {
  const double step = 4.0 * kPi * tau * d;
  double sum = 0.5 * term(0.0);
  for (long n = 1;; ++n) {
    const double value = term(step * static_cast<double>(n));
    sum += value;
    if (value <= 1e-17 * sum) break;
    if (n > 100'000'000) throw ConvergenceError("ideal-mirror envelope sum did not converge", n, value);
  }
  return tau / (8.0 * kPi) * sum;
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw DomainError("tolerances must be > 0");
  if (kappa_nodes < 2 || xi_nodes < 2) throw DomainError("node counts must be >= 2");
  if (max_matsubara < 1) throw DomainError("max_matsubara must be >= 1");
}

double matsubara_xi(long n, double tau) {
  if (!(tau > 0.0)) throw DomainError("Matsubara frequencies need tau > 0");
  if (n < 0) throw DomainError("Matsubara index must be >= 0");
  return 2.0 * kPi * static_cast<double>(n) * tau;
}

double integrand(const MirrorStack& mirror1, const MirrorStack& mirror2, const ResponseModel& gap,
                 Polarization pol, double d, const Kinematics& kin) {
  require_distance(d);
  if (!(kin.kappa > 0.0)) throw DomainError("integrand requires kappa d > 0");
  const double r1 = stack_reflection(mirror1, gap, pol, kin);
  const double r2 = stack_reflection(mirror2, gap, pol, kin);
  return kin.kappa * kin.kappa * damped_ratio(r1 * r2, 2.0 * kin.kappa * d);
}

ForceResult force_finite_temperature(const MirrorStack& mirror1, const MirrorStack& mirror2,
                                     const ResponseModel& gap, double d, double tau,
                                     const QuadratureConfig& cfg) {
  validate_inputs(mirror1, mirror2, gap, d, cfg);
  if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError("temperature tau must be finite and > 0");

  const Cavity cavity(mirror1, mirror2, gap, d, cfg);
  const double prefactor = tau / (8.0 * kPi);
  const double abs_floor = cfg.abs_tol / prefactor;
  const std::size_t block_size = static_cast<std::size_t>(std::max(8, 4 * cfg.workers));

  double te = 0.0, tm = 0.0, magnitude = 0.0, quad_error = 0.0, tail = 0.0;
  double prev1 = kInfinity, prev2 = kInfinity;
  long n = 0;
  bool converged = false;
  std::vector<TermValue> block;
  while (!converged) {
    if (n >= cfg.max_matsubara) {
      throw ConvergenceError("Matsubara sum not converged after " + std::to_string(n) + " terms",
                             n, prev1 * prefactor);
    }
    const auto count = static_cast<std::size_t>(
        std::min<long>(static_cast<long>(block_size), cfg.max_matsubara - n));
    block.assign(count, TermValue{});
    const long first = n;
    parallel_for(count, cfg.workers, [&](std::size_t i) {
      block[i] = cavity.term(matsubara_xi(first + static_cast<long>(i), tau));
    });
    for (const TermValue& t : block) {
      const double w = n == 0 ? 0.5 : 1.0;
      te += w * t.te;
      tm += w * t.tm;
      magnitude += w * t.abs;
      quad_error += w * t.err;
      const double a = t.abs;
      if (n >= 2 && a <= prev1 && prev1 <= prev2) {
        const double ratio = a == 0.0 ? 0.0 : a / prev1;
        tail = ratio < 1.0 ? a * ratio / (1.0 - ratio) : kInfinity;
        if (a + tail <= cfg.rel_tol * magnitude + abs_floor) {
          converged = true;
          ++n;
          break;
        }
      }
      prev2 = prev1;
      prev1 = a;
      ++n;
    }
  }

  ForceResult result;
  result.te_part = prefactor * te;
  result.tm_part = prefactor * tm;
  result.pressure_norm = result.te_part + result.tm_part;
  result.n_terms_used = n;
  result.est_error = prefactor * (quad_error + tail);
  const BoundEnvelope env = bound_envelope(d, tau);
  result.bound_lo = env.lo;
  result.bound_hi = env.hi;
  return result;
}

ForceResult force_zero_temperature(const MirrorStack& mirror1, const MirrorStack& mirror2,
                                   const ResponseModel& gap, double d,
                                   const QuadratureConfig& cfg) {
  validate_inputs(mirror1, mirror2, gap, d, cfg);
  const Cavity cavity(mirror1, mirror2, gap, d, cfg);
  const double norm = 1.0 / (16.0 * kPi * kPi);

  auto outer = [&](double t) -> std::array<double, 3> {
    const double s = 1.0 - t;
    const double jacobian = 1.0 / (s * s);
    const TermValue v = cavity.term(t / s);
    return {v.te * jacobian, v.tm * jacobian, v.err * jacobian};
  };
  AdaptiveOptions options;
  options.nodes = cfg.xi_nodes;
  options.rel_tol = cfg.rel_tol;
  options.abs_tol = cfg.abs_tol / norm;
  const auto q = integrate_adaptive<3>(outer, kTBreaks, options);

  ForceResult result;
  result.te_part = norm * q.value[0];
  result.tm_part = norm * q.value[1];
  result.pressure_norm = result.te_part + result.tm_part;
  result.n_terms_used = q.evaluations;
  result.est_error = norm * (q.error + std::abs(q.value[2]));
  const BoundEnvelope env = bound_envelope(d, 0.0);
  result.bound_lo = env.lo;
  result.bound_hi = env.hi;
  return result;
}

ForceResult force(const MirrorStack& mirror1, const MirrorStack& mirror2, const ResponseModel& gap,
                  double d, double tau, const QuadratureConfig& cfg) {
  if (tau == 0.0) return force_zero_temperature(mirror1, mirror2, gap, d, cfg);
  return force_finite_temperature(mirror1, mirror2, gap, d, tau, cfg);
}

BoundEnvelope bound_envelope(double d, double tau) {
  require_distance(d);
  if (!(tau >= 0.0) || !std::isfinite(tau)) throw DomainError("temperature tau must be finite and >= 0");
  if (tau == 0.0) {
    const double hi = kPi * kPi / (240.0 * d);
    return {-0.875 * hi, hi};
  }
  return {-envelope_sum(d, tau, lower_envelope_term), envelope_sum(d, tau, upper_envelope_term)};
}

BoundEnvelope bound_envelope_quadrature(double d, double tau) {
  require_distance(d);
  if (!(tau >= 0.0) || !std::isfinite(tau)) throw DomainError("temperature tau must be finite and >= 0");
  AdaptiveOptions options;
  options.rel_tol = 1e-13;
  auto bose = [](double x) -> std::array<double, 2> {
    return {x * x / std::expm1(x), x * x / (std::exp(x) + 1.0)};
  };
  if (tau == 0.0) {
    // Swapping the xi and x integrals turns the two polarizations times the Jacobian
    // 1 / 2d into (1 / 16 pi^2 d) int_0^inf x^3 / (e^x -+ 1) dx.
    auto cubic = [](double x) -> std::array<double, 2> {
      return {x * x * x / std::expm1(x), x * x * x / (std::exp(x) + 1.0)};
    };
    const std::array<double, 6> breaks = {0.0, 1.0, 4.0, 12.0, 30.0, 80.0};
    const auto q = integrate_adaptive<2>(cubic, breaks, options);
    const double scale = 1.0 / (16.0 * kPi * kPi * d);
    return {-scale * q.value[1], scale * q.value[0]};
  }
  const double step = 4.0 * kPi * tau * d;
  double hi = 0.0, lo = 0.0;
  for (long n = 0;; ++n) {
    const double a = step * static_cast<double>(n);
    std::array<double, kXOffsets.size()> breaks{};
    for (std::size_t i = 0; i < breaks.size(); ++i) breaks[i] = a + kXOffsets[i];
    const auto q = integrate_adaptive<2>(bose, breaks, options);
    const double w = n == 0 ? 1.0 : 2.0;  // factor 2 for polarizations, n = 0 halved
    hi += w * q.value[0];
    lo += w * q.value[1];
    if (n > 0 && q.value[0] <= 1e-17 * hi) break;
    if (n > 100'000'000) throw ConvergenceError("envelope quadrature did not converge", n, q.value[0]);
  }
  const double prefactor = tau / (8.0 * kPi);
  return {-prefactor * lo, prefactor * hi};
}

}  // namespace casimir
