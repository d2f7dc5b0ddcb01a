#include <cmath>

#include "casimir/asymptotics.hpp"
#include "casimir/errors.hpp"
#include "casimir/special.hpp"
#include "doctest.h"

using namespace casimir;

namespace {

const ResponseModel kDrude = ResponseModel::lorentz_drude(1.0, 0.0);
const ResponseModel kDielectric = ResponseModel::lorentz_drude(3.0, 1.0);

}  // namespace

TEST_CASE("Hamaker constant of two Drude metals") {
  // mpmath quad of (1/8 pi^2) int Li3(R^2) dxi, R = 1 / (1 + 2 xi^2)
  CHECK(hamaker_c3(kDrude, kDrude, 0.0) == doctest::Approx(0.00781041855801299552).epsilon(1e-9));
  const double cold = hamaker_c3(kDrude, kDrude, 0.001);
  CHECK(cold == doctest::Approx(0.00781041855801299552).epsilon(1e-3));
  CHECK(hamaker_c3(kDrude, kDrude, 0.3) > 0.0);
}

TEST_CASE("Hamaker constant: limits and vanishing") {
  CHECK(hamaker_c3(ResponseModel::vacuum(), kDrude, 0.0) == 0.0);
  CHECK_THROWS_AS(hamaker_c3(ResponseModel::perfect_electric(), ResponseModel::perfect_electric(), 0.0),
                  DomainError);
  // high temperature: only the static term survives, c3 -> (tau / 8 pi) Li3(R0^2)
  const double tau = 50.0;
  const double r0 = 9.0 / 11.0;
  CHECK(hamaker_c3(kDielectric, kDielectric, tau) ==
        doctest::Approx(tau / (8.0 * kPi) * polylog3(r0 * r0)).epsilon(1e-6));
}

TEST_CASE("Hamaker asymptote matches the full integrator at short distance") {
  const MirrorStack m{{}, kDrude};
  const double d = 2.0 * kPi / 2000.0;
  const double c3 = hamaker_c3(kDrude, kDrude, 0.0);
  CHECK(force_zero_temperature(m, m, {}, d).pressure_norm == doctest::Approx(c3).epsilon(2e-3));
}

TEST_CASE("ideal limits and regimes") {
  const IdealLimits l = ideal_limits(2.0, 0.1);
  CHECK(l.f_casimir == doctest::Approx(kPi * kPi / (240.0 * 16.0)));
  CHECK(l.f_thermal_derived == doctest::Approx(2.0 * l.f_thermal));
  CHECK(thermal_wavelength(0.1) == doctest::Approx(10.0));
  CHECK(classify_regime(0.5, 0.1) == Regime::Short);
  CHECK(classify_regime(5.0, 0.1) == Regime::Intermediate);
  CHECK(classify_regime(50.0, 0.1) == Regime::Thermal);
  CHECK(classify_regime(1e6, 0.0) == Regime::Intermediate);
  CHECK(to_string(Regime::Thermal) == "thermal");
  CHECK_THROWS_AS(ideal_limits(0.0, 0.0), DomainError);
  CHECK_THROWS_AS(thermal_wavelength(0.0), DomainError);
  CHECK(nonretarded_R(kInfinity) == 1.0);
  CHECK_THROWS_AS(nonretarded_R(0.5), DomainError);
}

TEST_CASE("matched-media series") {
  const ResponseModel meta = ResponseModel::lorentz_drude(0.0, 1.0, 0.3, 1.0);
  const ResponseModel gap = ResponseModel::vacuum();
  CHECK(is_matched_media(kDielectric, meta, gap));
  CHECK_FALSE(is_matched_media(kDielectric, ResponseModel::lorentz_drude(0.1, 1.0, 0.3, 1.0), gap));
  CHECK_THROWS_AS(matched_media_force(kDielectric, kDrude, gap, 1.0, 1), UnsupportedConfiguration);

  // mpmath: (1/16 pi^2) int xi^2 (eps1 - 1)/(eps1 + 1) (mu2 - 1) dxi and its TE companion
  const MatchedMediaResult tm = matched_media_force(kDielectric, meta, gap, 0.01, 1);
  const MatchedMediaResult both = matched_media_force(kDielectric, meta, gap, 0.01, 1, false);
  CHECK(tm.c1_norm == doctest::Approx(0.00120429272010441).epsilon(1e-8));
  CHECK(both.c1_norm == doctest::Approx(0.00319643250794965).epsilon(1e-8));

  // leading term -> -c1 d^2 in normalized units, series repulsive
  const double d = 1e-4;
  const MatchedMediaResult series = matched_media_force(kDielectric, meta, gap, d, 8);
  CHECK(series.pressure_norm < 0.0);
  CHECK(series.pressure_norm == doctest::Approx(-tm.c1_norm * d * d).epsilon(5e-3));
  CHECK(series.terms_used >= 1);
}

TEST_CASE("full integrator reaches the TM + TE coefficient as d -> 0") {
  const ResponseModel meta = ResponseModel::lorentz_drude(0.0, 1.0, 0.3, 1.0);
  const MirrorStack m1{{}, kDielectric}, m2{{}, meta};
  const double d = 2.0 * kPi / 25000.0;
  const ForceResult f = force_zero_temperature(m1, m2, {}, d);
  const double both = matched_media_force(kDielectric, meta, {}, d, 1, false).c1_norm;
  const double tm = matched_media_force(kDielectric, meta, {}, d, 1).c1_norm;
  CHECK(-f.pressure_norm / (d * d) == doctest::Approx(both).epsilon(0.02));
  CHECK(-f.tm_part / (d * d) == doctest::Approx(tm).epsilon(0.02));
}

TEST_CASE("asymptotic report") {
  const MirrorStack drude{{}, kDrude};
  const AsymptoticReport r = asymptotic_report(drude, drude, {}, 0.01, 0.0);
  REQUIRE(r.c3_norm);
  CHECK(*r.c3_norm > 0.0);
  CHECK_FALSE(r.c1_norm);
  CHECK(std::isinf(r.lambda_T));

  const MirrorStack pec{{}, ResponseModel::perfect_electric()};
  const AsymptoticReport ideal = asymptotic_report(pec, pec, {}, 1.0, 0.1);
  CHECK_FALSE(ideal.c3_norm);
  CHECK_FALSE(ideal.note.empty());
  CHECK(ideal.lambda_T == doctest::Approx(10.0));

  const MirrorStack layered{{{kDielectric, 1.0}}, kDrude};
  CHECK_FALSE(asymptotic_report(layered, drude, {}, 1.0, 0.0).c3_norm);
}
