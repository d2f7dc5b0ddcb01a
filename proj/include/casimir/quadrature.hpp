#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace casimir {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule (n >= 1). Rules are computed once and cached;
/// the returned reference stays valid for the life of the program.
const GaussRule& gauss_legendre(int n);

struct AdaptiveOptions {
  int nodes = 64;          // per panel; the error estimate compares with nodes / 2
  double rel_tol = 1e-10;  // relative to the integral of |f|
  double abs_tol = 0.0;
  int max_depth = 40;      // bisection levels per initial panel
  long max_evaluations = 4'000'000;  // refinement stops once this many points are used
};

template <std::size_t N>
struct QuadratureResult {
  std::array<double, N> value{};
  double abs_value = 0.0;  // integral of sum_c |f_c|
  double error = 0.0;      // sum over accepted panels of |G_n - G_{n/2}|
  long evaluations = 0;
};

namespace detail {

template <std::size_t N>
struct PanelEstimate {
  double lo = 0.0, hi = 0.0;
  std::array<double, N> value{};
  double abs_value = 0.0;
  double error = 0.0;
};

template <std::size_t N, class F>
PanelEstimate<N> estimate_panel(F& f, double lo, double hi, const GaussRule& fine,
                                const GaussRule& coarse, long& evaluations) {
  PanelEstimate<N> est{lo, hi};
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  std::array<double, N> rough{};
  for (std::size_t i = 0; i < fine.nodes.size(); ++i) {
    const std::array<double, N> y = f(mid + half * fine.nodes[i]);
    for (std::size_t c = 0; c < N; ++c) {
      est.value[c] += fine.weights[i] * y[c];
      est.abs_value += fine.weights[i] * std::abs(y[c]);
    }
  }
  for (std::size_t i = 0; i < coarse.nodes.size(); ++i) {
    const std::array<double, N> y = f(mid + half * coarse.nodes[i]);
    for (std::size_t c = 0; c < N; ++c) rough[c] += coarse.weights[i] * y[c];
  }
  evaluations += static_cast<long>(fine.nodes.size() + coarse.nodes.size());
  for (std::size_t c = 0; c < N; ++c) {
    est.value[c] *= half;
    rough[c] *= half;
    est.error += std::abs(est.value[c] - rough[c]);
  }
  est.abs_value *= half;
  return est;
}

template <std::size_t N, class F>
void refine(F& f, const PanelEstimate<N>& panel, double tol, int depth, const AdaptiveOptions& opt,
            const GaussRule& fine, const GaussRule& coarse, QuadratureResult<N>& out) {
  // Below ~100 ulp of the panel's |f| integral the estimate only measures rounding.
  const bool at_roundoff = panel.error <= 1e-14 * panel.abs_value;
  if (panel.error <= tol || at_roundoff || depth >= opt.max_depth ||
      out.evaluations >= opt.max_evaluations || !(panel.error == panel.error)) {
    for (std::size_t c = 0; c < N; ++c) out.value[c] += panel.value[c];
    out.abs_value += panel.abs_value;
    out.error += panel.error;
    return;
  }
  const double mid = 0.5 * (panel.lo + panel.hi);
  const auto left = estimate_panel<N>(f, panel.lo, mid, fine, coarse, out.evaluations);
  const auto right = estimate_panel<N>(f, mid, panel.hi, fine, coarse, out.evaluations);
  refine<N>(f, left, 0.5 * tol, depth + 1, opt, fine, coarse, out);
  refine<N>(f, right, 0.5 * tol, depth + 1, opt, fine, coarse, out);
}

}  // namespace detail

/// Adaptive panel quadrature of a vector-valued integrand over [breaks.front(), breaks.back()].
///
/// Each initial panel [breaks[i], breaks[i+1]] is bisected until the difference between
/// the n- and n/2-point Gauss rules falls below its share of
/// max(rel_tol * int|f|, abs_tol). Panels are accumulated left to right, so the result
/// is a deterministic function of the inputs.
template <std::size_t N, class F>
QuadratureResult<N> integrate_adaptive(F&& f, std::span<const double> breaks,
                                       const AdaptiveOptions& opt = {}) {
  QuadratureResult<N> out;
  if (breaks.size() < 2) return out;
  const GaussRule& fine = gauss_legendre(opt.nodes);
  const GaussRule& coarse = gauss_legendre(opt.nodes / 2 > 0 ? opt.nodes / 2 : 1);

  std::vector<detail::PanelEstimate<N>> panels;
  panels.reserve(breaks.size() - 1);
  double total_abs = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] > breaks[i])) continue;
    panels.push_back(detail::estimate_panel<N>(f, breaks[i], breaks[i + 1], fine, coarse,
                                               out.evaluations));
    total_abs += panels.back().abs_value;
  }
  const double width = breaks.back() - breaks.front();
  const double tol = std::max(opt.rel_tol * total_abs, opt.abs_tol);
  for (const auto& panel : panels) {
    detail::refine<N>(f, panel, tol * (panel.hi - panel.lo) / width, 0, opt, fine, coarse, out);
  }
  return out;
}

}  // namespace casimir
