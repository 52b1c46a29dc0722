#include <cmath>

#include "tzeta/core/errors.hpp"
#include "tzeta/core/quadrature.hpp"
#include "tzeta/core/richardson.hpp"
#include "tzeta/opdet/operator.hpp"
#include "tzeta/special/special.hpp"

namespace tzeta::opdet {

namespace {

// (z coth z - 1) / (2 lambda) with z = pi sqrt(lambda); equals pi^2/6 at 0.
double small_part(double lam) {
    const double z = kPi * std::sqrt(lam);
    if (z < 0.02) {
        const double z2 = z * z;
        return kPi * kPi * (1.0 / 3.0 - z2 / 45.0 + 2.0 * z2 * z2 / 945.0 - z2 * z2 * z2 / 4725.0) / 2.0;
    }
    return (z / std::tanh(z) - 1.0) / (2.0 * lam);
}

// pi (coth z - 1) / (2 sqrt(lambda)) = pi / (sqrt(lambda) expm1(2z))
double large_part(double lam) {
    const double k = std::sqrt(lam);
    return kPi / (k * std::expm1(2.0 * kPi * k));
}

Complex fe_rhs(Complex u) {
    return std::exp(u * std::log(2.0) + (u - 1.0) * std::log(kPi)) * special::gamma(1.0 - u) * sin_pi(0.5 * u) *
           zeta_p(0.5 * (1.0 - u));
}

}  // namespace

Complex zeta_p(Complex s) { return special::riemann_zeta(2.0 * s); }

Complex zeta_p_contour(Complex s, const Precision& prec) {
    prec.validate();
    if (!is_finite(s)) throw DomainError("s must be finite");
    if (!(s.real() < 1.0)) throw DomainError("zeta_p_contour requires Re s < 1");
    if (s == Complex(0.5)) throw PoleError("zeta_P has a pole at s = 1/2");

    const Complex sin_s = sin_pi(s);
    // sin(pi s) / (2 pi s) -> 1/2 at s = 0
    const Complex over_s = s == Complex(0.0) ? Complex(0.5) : sin_s / (kTwoPi * s);
    const Complex asy = sin_s / (2.0 * s - 1.0) - over_s;
    if (sin_s == 0.0) return asy;

    quad::Options opt;
    opt.rel_tol = prec.quad_rel_tol;
    opt.abs_tol = 1e-300;
    const auto head = quad::integrate_algebraic_left(small_part, -s, 1.0, opt);
    // Substituting k = sqrt(lambda): int_1^inf 2 k^{1-2s} large_part(k^2) dk.
    double k_max = 2.0;
    while (2.0 * kPi * k_max + (2.0 * s.real() - 1.0) * std::log(k_max) < 45.0) k_max += 1.0;
    const auto tail = quad::integrate(
        [&](double k) { return 2.0 * std::exp((1.0 - 2.0 * s) * std::log(k)) * large_part(k * k); }, 1.0, k_max,
        opt);
    return asy + sin_s * (head.value + tail.value) / kPi;
}

double zeta_p_functional_equation(Complex u, const Precision& prec) {
    prec.validate();
    if (!is_finite(u)) throw DomainError("u must be finite");
    if (u == Complex(1.0)) throw PoleError("zeta_P(u/2) has a pole at u = 1");
    const Complex lhs = zeta_p(0.5 * u);
    Complex rhs;
    if (is_real_integer(u)) {
        // Gamma(1 - u) or zeta_P((1 - u)/2) is singular here while the product
        // is not: average symmetric neighbours and extrapolate.
        std::vector<Complex> samples;
        for (int k = 0; k < 4; ++k) {
            const double h = 1e-2 * std::ldexp(1.0, -k);
            samples.push_back(0.5 * (fe_rhs(u + h) + fe_rhs(u - h)));
        }
        rhs = richardson(samples, 2.0, 2, 2).value;
    } else {
        rhs = fe_rhs(u);
    }
    return std::abs(lhs - rhs);
}

MellinStep zeta_p_mellin_step(Complex u, const Precision& prec) {
    prec.validate();
    if (!(u.real() > 1.0)) throw DomainError("the Mellin step requires Re u > 1");
    quad::Options opt;
    opt.rel_tol = prec.quad_rel_tol;
    opt.abs_tol = 1e-300;
    // y^{u-1} / (e^y - 1) = y^{u-2} * (y / (e^y - 1))
    auto bose = [](double y) { return y == 0.0 ? 1.0 : y / std::expm1(y); };
    const auto head = quad::integrate_algebraic_left(bose, u - 2.0, 1.0, opt);
    double y_max = 2.0;
    while (y_max - (u.real() - 1.0) * std::log(y_max) < 45.0) y_max *= 1.25;
    const auto tail = quad::integrate(
        [&](double y) { return std::exp((u - 1.0) * std::log(y)) / std::expm1(y); }, 1.0, y_max, opt);
    return {head.value + tail.value, special::gamma(u) * special::riemann_zeta(u)};
}

PowerTail power_tail_check(double alpha, const Precision& prec) {
    prec.validate();
    if (!(alpha > 1.0)) throw DomainError("power_tail_check requires alpha > 1");
    quad::Options opt;
    opt.rel_tol = prec.quad_rel_tol;
    opt.abs_tol = 1e-300;
    // lambda = e^y
    const auto r = quad::integrate([&](double y) { return std::exp((1.0 - alpha) * y); }, 0.0, 40.0 / (alpha - 1.0), opt);
    return {r.value, 1.0 / (alpha - 1.0)};
}

}  // namespace tzeta::opdet
