#include <array>
#include <cmath>

#include "tzeta/core/errors.hpp"
#include "tzeta/special/special.hpp"

namespace tzeta::special {

namespace {

// B_{2k} / (2k)! for k = 1..15.
const std::array<double, 15>& bernoulli_over_factorial() {
    static const std::array<double, 15> table = [] {
        const std::array<double, 15> b = {
            1.0 / 6.0,          -1.0 / 30.0,         1.0 / 42.0,
            -1.0 / 30.0,        5.0 / 66.0,          -691.0 / 2730.0,
            7.0 / 6.0,          -3617.0 / 510.0,     43867.0 / 798.0,
            -174611.0 / 330.0,  854513.0 / 138.0,    -236364091.0 / 2730.0,
            8553103.0 / 6.0,    -23749461029.0 / 870.0, 8615841276005.0 / 14322.0};
        std::array<double, 15> out{};
        double fact = 1.0;
        for (int k = 1; k <= 15; ++k) {
            fact *= (2.0 * k - 1.0) * (2.0 * k);
            out[k - 1] = b[k - 1] / fact;
        }
        return out;
    }();
    return table;
}

Complex euler_maclaurin(Complex s) {
    const int n_cut = 8 + static_cast<int>(std::ceil(std::abs(s.imag())));
    const double big_n = n_cut;
    Complex sum = 0.0;
    for (int n = n_cut - 1; n >= 1; --n) sum += real_pow(n, -s);
    const Complex n_pow = real_pow(big_n, -s);
    sum += 0.5 * n_pow + big_n * n_pow / (s - 1.0);

    const auto& bf = bernoulli_over_factorial();
    Complex poch = s;
    Complex npow = n_pow / big_n;  // N^{-s-1}
    const double inv_n2 = 1.0 / (big_n * big_n);
    for (int k = 1; k <= 15; ++k) {
        sum += bf[k - 1] * poch * npow;
        poch *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
        npow *= inv_n2;
    }
    return sum;
}

}  // namespace

Complex riemann_zeta(Complex s) {
    if (s == Complex(1.0, 0.0)) throw PoleError("riemann_zeta has a pole at s = 1");
    if (s.real() < -0.5) {
        // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1-s) zeta(1-s)
        const Complex f = std::exp(s * std::log(2.0) + (s - 1.0) * std::log(kPi));
        return f * sin_pi(0.5 * s) * gamma(1.0 - s) * euler_maclaurin(1.0 - s);
    }
    return euler_maclaurin(s);
}

}  // namespace tzeta::special
