#include "tzeta/core/complex.hpp"

namespace tzeta {

namespace {

// Reduces x to r in [-1/2, 1/2] with x = r + k and returns k's parity.
double reduce_half_period(double x, bool* odd) {
    const double k = std::nearbyint(x);
    *odd = std::fmod(std::abs(k), 2.0) == 1.0;
    return x - k;
}

}  // namespace

double sin_pi(double x) {
    if (!std::isfinite(x)) return std::nan("");
    bool odd = false;
    const double r = reduce_half_period(x, &odd);
    if (r == 0.0) return 0.0;
    const double v = std::sin(kPi * r);
    return odd ? -v : v;
}

double cos_pi(double x) {
    if (!std::isfinite(x)) return std::nan("");
    bool odd = false;
    const double r = reduce_half_period(x, &odd);
    if (std::abs(r) == 0.5) return 0.0;
    const double v = std::cos(kPi * r);
    return odd ? -v : v;
}

Complex sin_pi(Complex z) {
    const double y = kPi * z.imag();
    return {sin_pi(z.real()) * std::cosh(y), cos_pi(z.real()) * std::sinh(y)};
}

Complex cos_pi(Complex z) {
    const double y = kPi * z.imag();
    return {cos_pi(z.real()) * std::cosh(y), -sin_pi(z.real()) * std::sinh(y)};
}

bool is_real_integer(Complex z, long long* k) {
    if (z.imag() != 0.0) return false;
    const double r = z.real();
    if (!std::isfinite(r) || std::nearbyint(r) != r) return false;
    if (k) *k = static_cast<long long>(r);
    return true;
}

}  // namespace tzeta
