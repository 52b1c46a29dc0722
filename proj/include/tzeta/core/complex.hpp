#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace tzeta {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kEulerGamma = std::numbers::egamma;

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// sin(pi x) with exact zeros at the integers.
double sin_pi(double x);
/// cos(pi x) with exact zeros at the half-integers.
double cos_pi(double x);
/// sin(pi z) for complex z; exact zeros at real integers.
Complex sin_pi(Complex z);
Complex cos_pi(Complex z);

/// Returns k when z is (exactly) the real integer k, otherwise false via the flag.
bool is_real_integer(Complex z, long long* k = nullptr);

/// x^s for x > 0 and complex s.
inline Complex real_pow(double x, Complex s) { return std::exp(s * std::log(x)); }

}  // namespace tzeta
