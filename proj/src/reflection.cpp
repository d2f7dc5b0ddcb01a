#include "casimir/reflection.hpp"

#include <cmath>
#include <string>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

constexpr double kRadicandSlack = 1e-12;
constexpr double kReflectionSlack = 1e-12;

// Leading behaviour coef * xi^order as xi -> 0. Perfect media use the symbolic orders
// below for exact zero / infinity at every frequency.
struct Leading {
  double coef;
  int order;
};
constexpr int kZeroOrder = 1000;
constexpr int kInfiniteOrder = -1000;

double clamp_radicand(double radicand, double scale) {
  if (radicand >= 0.0) return radicand;
  if (radicand >= -kRadicandSlack * scale) return 0.0;
  throw DomainError("kinematics below the light cone of the gap medium");
}

double clamp_reflection(double r) {
  if (r > 1.0) {
    if (r <= 1.0 + kReflectionSlack) return 1.0;
    throw InvariantError("reflection coefficient above 1: " + std::to_string(r));
  }
  if (r < -1.0) {
    if (r >= -1.0 - kReflectionSlack) return -1.0;
    throw InvariantError("reflection coefficient below -1: " + std::to_string(r));
  }
  return r;
}

Leading leading_eps(const MediumResponse& m) {
  if (m.kind == ModelKind::PerfectElectric) return {1.0, kInfiniteOrder};
  if (m.eps == kInfinity) return {m.eps_residue, -2};
  return {m.eps, 0};
}

Leading leading_mu(const MediumResponse& m) {
  if (m.kind == ModelKind::PerfectMagnetic) return {1.0, kInfiniteOrder};
  if (m.mu == kInfinity) return {m.mu_residue, -2};
  return {m.mu, 0};
}

// Decay constant in a medium whose eps or mu has a pole; only reachable at xi = 0,
// where the gap contributes nothing to the radicand.
Leading leading_kappa(const MediumResponse& m, double kappa) {
  const Leading e = leading_eps(m);
  const Leading u = leading_mu(m);
  const int order = 2 + e.order + u.order;  // of xi^2 eps mu
  if (order > 0) return {kappa, 0};
  if (order == 0) return {std::sqrt(kappa * kappa + e.coef * u.coef), 0};
  return {std::sqrt(e.coef * u.coef), -1};
}

// Surface admittance q / eps (TM) or q / mu (TE).
Leading admittance(Polarization pol, const MediumResponse& m, double kappa, double q) {
  if (m.kind == ModelKind::PerfectElectric) {
    return pol == Polarization::TM ? Leading{1.0, kZeroOrder} : Leading{1.0, kInfiniteOrder};
  }
  if (m.kind == ModelKind::PerfectMagnetic) {
    return pol == Polarization::TM ? Leading{1.0, kInfiniteOrder} : Leading{1.0, kZeroOrder};
  }
  const Leading k = m.is_singular() ? leading_kappa(m, kappa) : Leading{q, 0};
  const Leading d = pol == Polarization::TM ? leading_eps(m) : leading_mu(m);
  Leading y{k.coef / d.coef, k.order - d.order};
  if (y.coef == 0.0) y.order = kZeroOrder;
  return y;
}

double reflection_from_admittance(const Leading& a, const Leading& b) {
  if (a.order < b.order) return 1.0;
  if (a.order > b.order) return -1.0;
  const double sum = a.coef + b.coef;
  if (sum == 0.0) return 0.0;
  return (a.coef - b.coef) / sum;
}

// Interface reflection given precomputed decay constants q_a, q_b. For finite media
// the numerators use eps_b^2 q_a^2 - eps_a^2 q_b^2 with q_b^2 - q_a^2 = xi^2 (eps_b mu_b -
// eps_a mu_a) taken from the susceptibilities, so weak contrasts do not cancel.
ReflectionPair interface(const MediumResponse& a, double qa, const MediumResponse& b, double qb,
                         double kappa, double xi) {
  if (a.is_perfect() && b.is_perfect() && a.kind != b.kind) {
    throw UnsupportedConfiguration(
        "a perfect electric and a perfect magnetic medium cannot share an interface");
  }
  if (!a.is_singular() && !b.is_singular()) {
    const double d_eps = b.eps_chi - a.eps_chi;
    const double d_mu = b.mu_chi - a.mu_chi;
    const double d_eps_mu = d_eps + d_mu + (b.eps_chi * b.mu_chi - a.eps_chi * a.mu_chi);
    const double qa2 = qa * qa;
    const double xi2 = xi * xi;
    const double tm_den = b.eps * qa + a.eps * qb;
    const double te_den = b.mu * qa + a.mu * qb;
    const double tm_num = d_eps * (a.eps + b.eps) * qa2 - a.eps * a.eps * xi2 * d_eps_mu;
    const double te_num = d_mu * (a.mu + b.mu) * qa2 - a.mu * a.mu * xi2 * d_eps_mu;
    return {te_den == 0.0 ? 0.0 : clamp_reflection(te_num / (te_den * te_den)),
            tm_den == 0.0 ? 0.0 : clamp_reflection(tm_num / (tm_den * tm_den))};
  }
  return {reflection_from_admittance(admittance(Polarization::TE, a, kappa, qa),
                                     admittance(Polarization::TE, b, kappa, qb)),
          reflection_from_admittance(admittance(Polarization::TM, a, kappa, qa),
                                     admittance(Polarization::TM, b, kappa, qb))};
}

double compose(double r_ab, double r_bc, double attenuation) {
  const double inner = r_bc * attenuation;
  const double den = 1.0 + r_ab * inner;
  if (den == 0.0) return r_ab;
  return clamp_reflection((r_ab + inner) / den);
}

}  // namespace

Kinematics make_kinematics(double xi, double kappa, const ResponseModel& gap) {
  if (!(xi >= 0.0) || !std::isfinite(xi)) throw DomainError("xi must be finite and >= 0");
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) throw DomainError("kappa must be finite and >= 0");
  require_gap_medium(gap);
  const double g = epsilon_i(gap, xi) * mu_i(gap, xi);
  if (kappa * kappa < g * xi * xi * (1.0 - kRadicandSlack)) {
    throw DomainError("kappa below the light cone of the gap medium");
  }
  return {xi, kappa, g};
}

MediumResponse MediumResponse::at(const ResponseModel& model, double xi) {
  MediumResponse m;
  m.kind = model.kind;
  m.eps_chi = eps_susceptibility(model, xi);
  m.mu_chi = mu_susceptibility(model, xi);
  m.eps = 1.0 + m.eps_chi;
  m.mu = 1.0 + m.mu_chi;
  if (xi == 0.0) {
    if (model.has_eps_pole()) m.eps_residue = model.eps_strength * model.eps_strength;
    if (model.has_mu_pole()) m.mu_residue = model.mu_strength * model.mu_strength;
  }
  return m;
}

MediumResponse MediumResponse::finite(double eps, double mu) {
  if (!(eps >= 1.0) || !(mu >= 1.0) || !std::isfinite(eps) || !std::isfinite(mu)) {
    throw DomainError("finite medium requires 1 <= eps, mu < inf");
  }
  MediumResponse m;
  m.kind = ModelKind::LorentzDrude;
  m.eps = eps;
  m.mu = mu;
  m.eps_chi = eps - 1.0;
  m.mu_chi = mu - 1.0;
  return m;
}

double kappa_in_medium(double eps, double mu, const Kinematics& kin) {
  if (eps == kInfinity || mu == kInfinity) return kInfinity;
  const double k2 = kin.kappa * kin.kappa;
  const double radicand = k2 + kin.xi * kin.xi * (eps * mu - kin.gap_eps_mu);
  return std::sqrt(clamp_radicand(radicand, k2 + kin.xi * kin.xi * kin.gap_eps_mu));
}

double kappa_in_medium(const MediumResponse& medium, const Kinematics& kin) {
  if (medium.is_perfect()) return kInfinity;
  if (medium.is_singular()) {
    const Leading k = leading_kappa(medium, kin.kappa);
    return k.order < 0 ? kInfinity : k.coef;
  }
  return kappa_in_medium(medium.eps, medium.mu, kin);
}

double fresnel(Polarization pol, const MediumResponse& a, const MediumResponse& b,
               const Kinematics& kin) {
  const ReflectionPair r =
      interface(a, kappa_in_medium(a, kin), b, kappa_in_medium(b, kin), kin.kappa, kin.xi);
  return pol == Polarization::TE ? r.te : r.tm;
}

void require_gap_medium(const ResponseModel& gap) {
  if (gap.is_perfect()) {
    throw UnsupportedConfiguration("the gap medium cannot be a perfect conductor");
  }
  if (gap.has_eps_pole() || gap.has_mu_pole()) {
    throw UnsupportedConfiguration("the gap medium must have a finite response at xi = 0");
  }
}

void require_valid_stack(const MirrorStack& stack) {
  for (const Layer& layer : stack.layers) {
    if (!(layer.thickness > 0.0) || !std::isfinite(layer.thickness)) {
      throw DomainError("layer thickness must be finite and > 0");
    }
  }
}

StackReflector::StackReflector(const MirrorStack& stack, const ResponseModel& gap, double xi)
    : xi_(xi) {
  require_gap_medium(gap);
  require_valid_stack(stack);
  media_.push_back(MediumResponse::at(gap, xi));
  gap_eps_mu_ = media_.front().eps * media_.front().mu;
  for (const Layer& layer : stack.layers) {
    media_.push_back(MediumResponse::at(layer.material, xi));
    if (layer.material.is_perfect()) return;  // nothing behind a perfect layer is visible
    thickness_.push_back(layer.thickness);
  }
  media_.push_back(MediumResponse::at(stack.substrate, xi));
}

ReflectionPair StackReflector::operator()(double kappa) const {
  const Kinematics kin{xi_, kappa, gap_eps_mu_};
  const std::size_t last = media_.size() - 1;

  // q for every medium; the gap's is kappa by definition.
  double q_buffer[16];
  std::vector<double> q_heap;
  double* q = q_buffer;
  if (media_.size() > 16) {
    q_heap.resize(media_.size());
    q = q_heap.data();
  }
  q[0] = kappa;
  for (std::size_t i = 1; i <= last; ++i) q[i] = kappa_in_medium(media_[i], kin);

  ReflectionPair r = interface(media_[last - 1], q[last - 1], media_[last], q[last], kappa, xi_);
  for (std::size_t layer = thickness_.size(); layer-- > 0;) {
    // layer occupies media_[layer + 1]; its incident side is media_[layer]
    const std::size_t b = layer + 1;
    const double attenuation = std::isinf(q[b]) ? 0.0 : std::exp(-2.0 * q[b] * thickness_[layer]);
    const ReflectionPair outer = interface(media_[layer], q[layer], media_[b], q[b], kappa, xi_);
    r.te = compose(outer.te, r.te, attenuation);
    r.tm = compose(outer.tm, r.tm, attenuation);
  }
  return r;
}

double stack_reflection(const MirrorStack& stack, const ResponseModel& gap, Polarization pol,
                        const Kinematics& kin) {
  const ReflectionPair r = StackReflector(stack, gap, kin.xi)(kin.kappa);
  return pol == Polarization::TE ? r.te : r.tm;
}

}  // namespace casimir
