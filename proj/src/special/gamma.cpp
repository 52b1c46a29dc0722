#include <array>
#include <string>

#include "tzeta/core/errors.hpp"
#include "tzeta/special/special.hpp"

namespace tzeta::special {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// Gamma(z) for Re z >= 1/2.
Complex lanczos(Complex z) {
    z -= 1.0;
    Complex x = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    const Complex t = z + kLanczosG + 0.5;
    return std::sqrt(kTwoPi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

}  // namespace

Complex gamma(Complex s) {
    long long k = 0;
    if (is_real_integer(s, &k) && k <= 0) {
        throw PoleError("gamma has a pole at s = " + std::to_string(k));
    }
    if (s.real() < 0.5) {
        return kPi / (sin_pi(s) * lanczos(1.0 - s));
    }
    return lanczos(s);
}

Complex rgamma(Complex s) {
    long long k = 0;
    if (is_real_integer(s, &k) && k <= 0) return 0.0;
    if (s.real() < 0.5) {
        return sin_pi(s) * lanczos(1.0 - s) / kPi;
    }
    return 1.0 / lanczos(s);
}

}  // namespace tzeta::special
