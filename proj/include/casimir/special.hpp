#pragma once

namespace casimir {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kZeta2 = 1.64493406684822643647;  // pi^2 / 6
inline constexpr double kZeta3 = 1.20205690315959428540;
inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Dilogarithm Li_2(z) for real z in [-1, 1].
double polylog2(double z);

/// Trilogarithm Li_3(z) = sum_k z^k / k^3 for real z in [-1, 1]; absolute error
/// below 1e-15 over the whole interval. Throws DomainError for |z| > 1.
double polylog3(double z);

/// Exponential integral E_1(z) = Gamma(0, z), z > 0.
double expint_e1(double z);

/// Upper incomplete gamma Gamma(k, z) = int_z^inf t^(k-1) e^-t dt for integer k <= 1
/// and z > 0. Small z uses downward recurrence from E_1; z >= 1 uses the Legendre
/// continued fraction.
double upper_gamma(int k, double z);

}  // namespace casimir
