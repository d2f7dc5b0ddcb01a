#pragma once

#include <vector>

#include "casimir/materials.hpp"

namespace casimir {

enum class Polarization { TE, TM };

struct Layer {
  ResponseModel material;
  double thickness = 0.0;  // units of c / Omega

  bool operator==(const Layer&) const = default;
};

/// Finite layers ordered from the gap outward, on top of a semi-infinite substrate.
struct MirrorStack {
  std::vector<Layer> layers;
  ResponseModel substrate;

  bool homogeneous() const { return layers.empty(); }
  bool operator==(const MirrorStack&) const = default;
};

/// Imaginary frequency xi and the decay constant kappa of the field in the gap.
/// gap_eps_mu is eps_0(i xi) mu_0(i xi) of the gap medium; transverse wavevectors are
/// real when kappa^2 >= gap_eps_mu xi^2.
struct Kinematics {
  double xi = 0.0;
  double kappa = 0.0;
  double gap_eps_mu = 1.0;
};

/// Builds kinematics for a gap medium, checking xi >= 0 and kappa above the light cone.
Kinematics make_kinematics(double xi, double kappa, const ResponseModel& gap = {});

/// A medium's response at one imaginary frequency. At xi = 0 a Drude pole keeps its
/// residue lim xi^2 eps(i xi) so interface formulas can take the limit instead of
/// propagating infinities.
struct MediumResponse {
  ModelKind kind = ModelKind::Vacuum;
  double eps = 1.0;
  double mu = 1.0;
  double eps_residue = 0.0;
  double mu_residue = 0.0;
  double eps_chi = 0.0;  // eps - 1, kept separately so small contrasts keep their digits
  double mu_chi = 0.0;

  static MediumResponse at(const ResponseModel& model, double xi);
  static MediumResponse finite(double eps, double mu);

  bool is_perfect() const {
    return kind == ModelKind::PerfectElectric || kind == ModelKind::PerfectMagnetic;
  }
  bool is_singular() const { return is_perfect() || eps == kInfinity || mu == kInfinity; }
};

/// Decay constant inside a medium, sqrt(kappa^2 + (eps mu - eps_0 mu_0) xi^2). For a
/// vacuum gap this is exactly the radicand of the single-interface Fresnel formula.
/// Round-off negatives are clamped to zero; returns +inf for perfect media.
double kappa_in_medium(double eps, double mu, const Kinematics& kin);
double kappa_in_medium(const MediumResponse& medium, const Kinematics& kin);

/// Reflection at the interface between media a (incident side) and b:
///   TM: (eps_b q_a - eps_a q_b) / (eps_b q_a + eps_a q_b), TE: same with eps <-> mu,
/// with q the decay constants. Perfect electric b gives TM = +1, TE = -1; perfect
/// magnetic b the reverse. Throws UnsupportedConfiguration when a perfect electric
/// and a perfect magnetic medium touch.
double fresnel(Polarization pol, const MediumResponse& a, const MediumResponse& b,
               const Kinematics& kin);

/// Reflection coefficient of a multilayer mirror seen from the gap, built by
/// composing r_abc = (r_ab + r_bc e^{-2 q_b w}) / (1 + r_ab r_bc e^{-2 q_b w}) from the
/// substrate outward. The result always lies in [-1, 1].
double stack_reflection(const MirrorStack& stack, const ResponseModel& gap, Polarization pol,
                        const Kinematics& kin);

struct ReflectionPair {
  double te = 0.0;
  double tm = 0.0;
};

/// A mirror frozen at one imaginary frequency, for repeated evaluation over kappa.
/// Layers behind the first perfect layer are invisible and dropped.
class StackReflector {
 public:
  StackReflector(const MirrorStack& stack, const ResponseModel& gap, double xi);

  ReflectionPair operator()(double kappa) const;

  double xi() const { return xi_; }
  double gap_eps_mu() const { return gap_eps_mu_; }

 private:
  double xi_;
  double gap_eps_mu_;
  std::vector<MediumResponse> media_;  // gap, visible layers, terminal medium
  std::vector<double> thickness_;      // one per visible layer
};

/// Throws UnsupportedConfiguration unless the model can fill the gap (not a perfect
/// conductor, finite response at xi = 0).
void require_gap_medium(const ResponseModel& gap);

/// Throws DomainError for non-positive or non-finite layer thicknesses.
void require_valid_stack(const MirrorStack& stack);

}  // namespace casimir
