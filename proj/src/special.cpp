#include "casimir/special.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// zeta(-m) for m = 0..19; zeta(-m) = -B_{m+1} / (m + 1).
constexpr std::array<double, 20> kZetaNonPositive = {
    -0.5,           -1.0 / 12.0,          0.0, 1.0 / 120.0,         0.0,
    -1.0 / 252.0,   0.0,                  1.0 / 240.0, 0.0,          -1.0 / 132.0,
    0.0,            691.0 / 32760.0,      0.0, -1.0 / 12.0,         0.0,
    3617.0 / 8160.0, 0.0,                 -43867.0 / 14364.0, 0.0,  174611.0 / 6600.0};

double direct_series(int order, double z) {
  double sum = 0.0;
  double power = 1.0;
  for (int k = 1; k < 200; ++k) {
    power *= z;
    const double kk = static_cast<double>(k);
    const double term = power / (order == 2 ? kk * kk : kk * kk * kk);
    sum += term;
    if (std::abs(term) <= kEps * 0.25 * std::abs(sum)) break;
  }
  return sum;
}

// Expansion around z = 1 in mu = ln z, valid for |mu| < 2 pi:
//   Li_s(e^mu) = mu^(s-1)/(s-1)! [H_(s-1) - ln(-mu)] + sum_{k != s-1} zeta(s-k) mu^k / k!
double near_one(int order, double z) {
  if (z == 1.0) return order == 2 ? kZeta2 : kZeta3;
  const double mu = std::log(z);
  const double log_term = std::log(-mu);
  double sum = 0.0;
  if (order == 2) {
    sum = kZeta2 + mu * (1.0 - log_term);
  } else {
    sum = kZeta3 + kZeta2 * mu + 0.5 * mu * mu * (1.5 - log_term);
  }
  double power = order == 2 ? mu : 0.5 * mu * mu;  // mu^k / k! at k = s - 1
  for (int k = order; k < order + static_cast<int>(kZetaNonPositive.size()); ++k) {
    power *= mu / k;
    sum += kZetaNonPositive[static_cast<std::size_t>(k - order)] * power;
  }
  return sum;
}

double polylog(int order, double z) {
  if (!(std::abs(z) <= 1.0)) throw DomainError("polylogarithm argument must lie in [-1, 1]");
  if (z == 0.0) return 0.0;
  if (std::abs(z) <= 0.5) return direct_series(order, z);
  if (z > 0.0) return near_one(order, z);
  // Li_s(z) + Li_s(-z) = 2^(1-s) Li_s(z^2)
  const double scale = order == 2 ? 0.5 : 0.25;
  const double square = z * z;
  const double li_square = square <= 0.5 ? direct_series(order, square) : near_one(order, square);
  return scale * li_square - near_one(order, -z);
}

double e1_series(double z) {
  double sum = 0.0;
  double term = 1.0;
  for (int k = 1; k < 100; ++k) {
    term *= -z / k;
    const double contribution = -term / k;
    sum += contribution;
    if (std::abs(contribution) <= kEps * 0.25 * std::abs(sum)) break;
  }
  return -kEulerGamma - std::log(z) + sum;
}

// Modified Lentz evaluation of Gamma(a, z) = e^-z z^a / (z + 1 - a - 1(1-a)/(z + 3 - a - ...)).
double upper_gamma_continued_fraction(double a, double z) {
  constexpr double tiny = 1e-300;
  double b = z + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) <= kEps) {
      return std::exp(-z + a * std::log(z)) * h;
    }
  }
  throw ConvergenceError("incomplete gamma continued fraction did not converge", 10000, h);
}

}  // namespace

double polylog2(double z) { return polylog(2, z); }

double polylog3(double z) { return polylog(3, z); }

double expint_e1(double z) {
  if (!(z > 0.0)) throw DomainError("E1(z) requires z > 0");
  if (z <= 1.0) return e1_series(z);
  return upper_gamma_continued_fraction(0.0, z);
}

double upper_gamma(int k, double z) {
  if (!(z > 0.0)) throw DomainError("upper incomplete gamma requires z > 0");
  if (k > 1) throw DomainError("upper_gamma is implemented for integer k <= 1");
  if (k == 1) return std::exp(-z);
  if (z >= 1.0) return upper_gamma_continued_fraction(static_cast<double>(k), z);

  // Gamma(a, z) = (Gamma(a + 1, z) - z^a e^-z) / a, stepping a = -1, -2, ..., k.
  const double ez = std::exp(-z);
  double value = e1_series(z);
  double power = 1.0;  // z^a
  for (int a = -1; a >= k; --a) {
    power /= z;
    value = (value - power * ez) / a;
  }
  return value;
}

}  // namespace casimir
