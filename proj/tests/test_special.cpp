#include <cmath>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/special.hpp"
#include "doctest.h"

#ifdef CASIMIR_HAVE_BOOST
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/expint.hpp>
#endif

using namespace casimir;

namespace {

double brute_polylog(int order, double z, long terms) {
  double sum = 0.0, power = 1.0;
  for (long k = 1; k <= terms; ++k) {
    power *= z;
    sum += power / std::pow(static_cast<double>(k), order);
  }
  return sum;
}

}  // namespace

// Reference values computed with mpmath at 30 digits.
TEST_CASE("polylogarithms match high-precision values") {
  CHECK(polylog3(0.5) == doctest::Approx(0.537213193608040200940).epsilon(1e-14));
  CHECK(polylog3(-1.0) == doctest::Approx(-0.901542677369695714050).epsilon(1e-14));
  CHECK(polylog3(1.0) == doctest::Approx(kZeta3).epsilon(1e-14));
  CHECK(polylog3(0.9) == doctest::Approx(1.04965895018643990171).epsilon(1e-14));
  CHECK(polylog3(-0.7) == doctest::Approx(-0.648666321285235455115).epsilon(1e-14));
  CHECK(polylog2(0.9) == doctest::Approx(1.29971472300495878198).epsilon(1e-14));
  CHECK(polylog2(-0.6) == doctest::Approx(-0.528107174044666519205).epsilon(1e-14));
  CHECK(polylog2(1.0) == doctest::Approx(kZeta2).epsilon(1e-14));
  CHECK(polylog3(0.0) == 0.0);
}

TEST_CASE("polylog3 agrees with its defining series on a grid") {
  for (int i = -20; i <= 20; ++i) {
    const double z = 0.045 * i;  // |z| <= 0.9, where 4000 terms are plenty
    CHECK(polylog3(z) == doctest::Approx(brute_polylog(3, z, 4000)).epsilon(1e-13));
    CHECK(polylog2(z) == doctest::Approx(brute_polylog(2, z, 4000)).epsilon(1e-13));
  }
}

TEST_CASE("polylog3 is increasing on [-1, 1]") {
  double previous = polylog3(-1.0);
  for (int i = -999; i <= 1000; ++i) {
    const double v = polylog3(i / 1000.0);
    CHECK(v > previous);
    previous = v;
  }
}

TEST_CASE("polylogarithm domain") {
  CHECK_THROWS_AS(polylog3(1.0000001), DomainError);
  CHECK_THROWS_AS(polylog3(-1.5), DomainError);
  CHECK_THROWS_AS(polylog2(std::nan("")), DomainError);
}

TEST_CASE("incomplete gamma matches high-precision values") {
  CHECK(upper_gamma(0, 1.0) == doctest::Approx(0.219383934395520273677).epsilon(1e-14));
  CHECK(upper_gamma(-1, 1.0) == doctest::Approx(0.148495506775922047918).epsilon(1e-13));
  CHECK(upper_gamma(-3, 0.1) == doctest::Approx(287.736090748377182118).epsilon(1e-13));
  CHECK(upper_gamma(-3, 10.0) == doctest::Approx(3.30410141054701064526e-9).epsilon(1e-13));
  CHECK(upper_gamma(1, 2.5) == doctest::Approx(std::exp(-2.5)).epsilon(1e-15));
  CHECK(expint_e1(1.0) == doctest::Approx(0.219383934395520273677).epsilon(1e-14));
}

TEST_CASE("incomplete gamma satisfies the recurrence Gamma(k+1,z) = k Gamma(k,z) + z^k e^-z") {
  for (double z : {0.05, 0.3, 0.99, 1.0, 1.01, 4.0, 25.0}) {
    for (int k = -6; k <= 0; ++k) {
      const double lhs = upper_gamma(k + 1, z);
      const double rhs = k * upper_gamma(k, z) + std::pow(z, k) * std::exp(-z);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
    }
  }
}

TEST_CASE("incomplete gamma domain") {
  CHECK_THROWS_AS(upper_gamma(2, 1.0), DomainError);
  CHECK_THROWS_AS(upper_gamma(0, 0.0), DomainError);
  CHECK_THROWS_AS(upper_gamma(-1, -1.0), DomainError);
}

#ifdef CASIMIR_HAVE_BOOST
TEST_CASE("incomplete gamma against an independent exp-sinh integral") {
  boost::math::quadrature::exp_sinh<double> integrator;
  for (int k : {1, 0, -1, -3}) {
    for (double z = 0.1; z <= 10.0; z += 0.7) {
      const double oracle = integrator.integrate(
          [&](double t) { return std::pow(z + t, k - 1) * std::exp(-(z + t)); });
      CHECK(upper_gamma(k, z) == doctest::Approx(oracle).epsilon(1e-10));
    }
  }
}

TEST_CASE("E1 against boost") {
  for (double z : {1e-6, 0.01, 0.5, 0.999, 1.0, 1.5, 7.0, 40.0}) {
    CHECK(expint_e1(z) == doctest::Approx(boost::math::expint(1, z)).epsilon(1e-13));
  }
}
#endif
