#include <cmath>
#include <sstream>
#include <string>

#include "casimir/scenario.hpp"
#include "casimir/special.hpp"
#include "casimir/sweep.hpp"
#include "doctest.h"

using namespace casimir;

namespace {

Scenario small_fig1a() {
  Scenario s = preset_scenario("fig1a");
  s.sweep = DistanceGrid{0.05, 20.0, 6, GridScale::Log};
  return s;
}

}  // namespace

TEST_CASE("sweep rows carry bounds, asymptote and d / Lambda") {
  QuadratureConfig cfg;
  const auto rows = run_sweep(small_fig1a(), 0.0, cfg);
  REQUIRE(rows.size() == 6);
  for (const SweepRow& r : rows) {
    CHECK(r.d_over_lambda == doctest::Approx(r.d / (2.0 * kPi)));
    CHECK(r.bound_lo <= r.pressure_norm);
    CHECK(r.pressure_norm <= r.bound_hi);
    REQUIRE(r.c3_norm);
    CHECK(r.pressure_norm <= *r.c3_norm);
  }
  CHECK_NOTHROW(recheck_rows(rows, 0.0));

  Scenario layered = small_fig1a();
  layered.mirror1.layers.push_back({"drude", 1.0});
  CHECK_FALSE(run_sweep(layered, 0.0, cfg).front().c3_norm);
}

TEST_CASE("CSV layout") {
  SweepRow row{1.0, 1.0 / (2 * kPi), 0.5, 0.25, 0.25, -1.0, 1.0, std::nullopt, 1e-12};
  std::ostringstream out;
  write_csv(out, {row});
  CHECK(out.str() ==
        "d_over_c_by_omega,d_over_lambda,pressure_norm,te_part,tm_part,bound_lo,bound_hi,"
        "c3_over_d3,est_error\n"
        "1.000000000000e+00,1.591549430919e-01,5.000000000000e-01,2.500000000000e-01,"
        "2.500000000000e-01,-1.000000000000e+00,1.000000000000e+00,,1.000000000000e-12\n");
  std::ostringstream si;
  write_csv(si, {row}, 1e15);
  CHECK(si.str().find(",F_SI_Pa\n") != std::string::npos);
}

TEST_CASE("SI conversion") {
  // hbar Omega^4 / c^3 at Omega = 1e15 rad/s
  const double expected = 1.054571817e-34 * 1e60 / std::pow(299792458.0, 3);
  CHECK(pressure_si(1.0, 1.0, 1e15) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(pressure_si(1.0, 2.0, 1e15) == doctest::Approx(expected / 8.0).epsilon(1e-12));
}

TEST_CASE("sweep output is identical for any worker count") {
  const Scenario s = small_fig1a();
  std::string reference;
  for (int workers : {1, 3, 8}) {
    QuadratureConfig cfg;
    cfg.workers = workers;
    std::ostringstream out;
    write_csv(out, run_sweep(s, 0.1, cfg));
    if (reference.empty()) reference = out.str();
    CHECK(out.str() == reference);
  }
}

TEST_CASE("re-check rejects rows outside the envelope") {
  auto rows = run_sweep(small_fig1a(), 0.0, {});
  rows[2].pressure_norm = 2.0 * rows[2].bound_hi;
  CHECK_THROWS(recheck_rows(rows, 0.0));
}
