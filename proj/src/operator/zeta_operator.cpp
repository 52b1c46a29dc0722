#include <array>
#include <cmath>
#include <string>

#include "dopri.hpp"
#include "tzeta/core/errors.hpp"
#include "tzeta/core/complex.hpp"
#include "tzeta/core/quadrature.hpp"
#include "tzeta/opdet/operator.hpp"

namespace tzeta::opdet {

namespace {

detail::OdeOptions ode_options(const Precision& prec) {
    detail::OdeOptions opt;
    opt.rtol = 0.1 * prec.quad_rel_tol;
    opt.atol = 1e-3 * opt.rtol;
    return opt;
}

// g(lambda) = d/d lambda log u_{-lambda}(1) for 0 <= lambda <= 1, from the
// sensitivity W = du/d lambda: W'' = (V + lambda) W + u, W(0) = W'(0) = 0.
double log_derivative(const OperatorSpec& spec, double lam, const detail::OdeOptions& opt) {
    const auto& v = spec.potential;
    auto rhs = [&](double x, const detail::State<double, 4>& y) {
        const double q = v(x) + lam;
        return detail::State<double, 4>{y[1], q * y[0], y[3], q * y[2] + y[0]};
    };
    bool crossed = false;
    auto watch = [&](double, const detail::State<double, 4>& y) {
        if (!(y[0] > 0.0)) crossed = true;
    };
    const auto y = detail::dopri45<double, 4>(rhs, 0.0, 1.0, {0.0, 1.0, 0.0, 0.0}, opt, 0.0, watch);
    if (crossed) throw SpectrumError("operator has a non-positive eigenvalue");
    return y[2] / y[0];
}

// L(lambda) = log[u_{-lambda}(1) 2 k e^{-k}], k = sqrt(lambda) > 0.
// Writing u = e^{kx} (1 - e^{-2kx} + psi) / (2k), the deviation from the free
// solution obeys psi'' + 2k psi' = V (1 - e^{-2kx} + psi), psi(0) = psi'(0) = 0,
// so L = log(1 - e^{-2k} + psi(1)) is exact whenever V vanishes.
double log_u_scaled(const OperatorSpec& spec, double k, const detail::OdeOptions& opt) {
    if (spec.is_free()) return std::log1p(-std::exp(-2.0 * k));
    const auto& v = spec.potential;
    auto rhs = [&](double x, const detail::State<double, 2>& y) {
        const double base = -std::expm1(-2.0 * k * x);
        return detail::State<double, 2>{y[1], v(x) * (base + y[0]) - 2.0 * k * y[1]};
    };
    detail::OdeOptions o = opt;
    o.atol = 1e-3 * opt.rtol / (1.0 + k);
    const auto y = detail::dopri45<double, 2>(rhs, 0.0, 1.0, {0.0, 0.0}, o, 0.5 / (1.0 + k));
    const double arg = y[0] - std::exp(-2.0 * k);
    if (!(arg > -1.0)) throw SpectrumError("operator has a non-positive eigenvalue");
    return std::log1p(arg);
}

// u_0 > 0 on (0, 1] is equivalent to a positive spectrum.
void check_spectrum(const OperatorSpec& spec, const Precision& prec) {
    const auto sol = solve_ivp(spec, 0.0, prec);
    if (std::abs(sol.u_at_1) < 1e3 * prec.quad_rel_tol) throw ZeroModeError("operator has a zero mode (u_0(1) = 0)");
    log_derivative(spec, 0.0, ode_options(prec));
}

struct Asymptotics {
    double a1, a2, a3;  // L ~ a1 lambda^{-1/2} + a2 lambda^{-1} + a3 lambda^{-3/2}
};

double one_sided_derivative(const std::function<double(double)>& v, double x, double dir) {
    // Second-order one-sided differences at h and h/2, one Richardson step.
    auto d = [&](double h) { return dir * (-3.0 * v(x) + 4.0 * v(x + dir * h) - v(x + 2.0 * dir * h)) / (2.0 * h); };
    const double h = 1e-3;
    return (4.0 * d(0.5 * h) - d(h)) / 3.0;
}

Asymptotics asymptotics(const OperatorSpec& spec, const Precision& prec) {
    if (spec.is_free()) return {0.0, 0.0, 0.0};
    const auto& v = spec.potential;
    quad::Options opt;
    opt.rel_tol = prec.quad_rel_tol;
    opt.abs_tol = 1e-15;
    const double iv = quad::integrate(v, 0.0, 1.0, opt).value;
    const double iv2 = quad::integrate([&](double x) { return v(x) * v(x); }, 0.0, 1.0, opt).value;
    const double dv0 = one_sided_derivative(v, 0.0, 1.0);
    const double dv1 = one_sided_derivative(v, 1.0, -1.0);
    return {0.5 * iv, -0.25 * (v(0.0) + v(1.0)), 0.125 * (dv1 - dv0) - 0.125 * iv2};
}

// sin(pi s) / (s - s0); the removable limit at integer s0 is pi cos(pi s0).
Complex sin_over(Complex s, double s0) {
    if (s == Complex(s0)) {
        if (std::nearbyint(s0) == s0) return kPi * cos_pi(s0);
        throw PoleError("zeta_O has a pole at s = " + std::to_string(s0));
    }
    return sin_pi(s) / (s - s0);
}

constexpr double kCutoffK = 200.0;

}  // namespace

Complex zeta_operator_asy(Complex s) {
    if (s == Complex(0.5)) throw PoleError("zeta_O has a pole at s = 1/2");
    return (sin_over(s, 0.5) - sin_over(s, 0.0)) / kTwoPi;
}

Complex zeta_operator_asy_deriv(Complex s) {
    if (s == Complex(0.5)) throw PoleError("zeta_O has a pole at s = 1/2");
    const Complex d = s - 0.5;
    const Complex first = (kPi * cos_pi(s) * d - sin_pi(s)) / (d * d);
    // d/ds [sin(pi s)/s] = (pi s cos(pi s) - sin(pi s)) / s^2 = -pi^3 s/3 + O(s^3)
    Complex second;
    if (std::abs(s) < 1e-4) {
        second = -kPi * kPi * kPi * s / 3.0;
    } else {
        second = (kPi * s * cos_pi(s) - sin_pi(s)) / (s * s);
    }
    return (first - second) / kTwoPi;
}

EvalResult zeta_operator(const OperatorSpec& spec, Complex s, const Precision& prec) {
    prec.validate();
    if (!is_finite(s)) throw DomainError("s must be finite");
    if (!(s.real() < 1.0)) throw DomainError("zeta_operator requires Re s < 1");
    const bool free = spec.is_free();
    if (!free && !(s.real() > -2.0)) {
        throw DomainError("zeta_operator with V != 0 is continued only to Re s > -2");
    }
    EvalResult res;
    res.method = Method::contour;
    const Complex asy = zeta_operator_asy(s);
    const Complex sin_s = sin_pi(s);
    if (sin_s == 0.0 && free) {
        res.value = asy;
        return res;
    }

    const auto opt = ode_options(prec);
    const Asymptotics as = asymptotics(spec, prec);
    quad::Options qopt;
    qopt.rel_tol = prec.quad_rel_tol;
    qopt.abs_tol = 1e-300;

    check_spectrum(spec, prec);

    // A = int_0^1 lambda^{-s} g(lambda) d lambda
    const auto a_part = quad::integrate_algebraic_left(
        [&](double lam) { return log_derivative(spec, lam, opt); }, -s, 1.0, qopt);

    // R = L - a1 k^{-1} - a2 k^{-2} - a3 k^{-3}; int_1^inf lambda^{-s} R' d lambda
    //   = -R(1) + s int_1^inf lambda^{-s-1} R d lambda, with lambda = k^2.
    auto r_of_k = [&](double k) {
        return log_u_scaled(spec, k, opt) - as.a1 / k - as.a2 / (k * k) - as.a3 / (k * k * k);
    };
    double k_max = kCutoffK;
    if (free) {
        // R = log(1 - e^{-2k}) is exponentially small; stop where the weight
        // k^{-2 Re s - 1} no longer matters.
        k_max = 2.0;
        while (2.0 * k_max + (2.0 * s.real() + 1.0) * std::log(k_max) < 45.0) k_max += 1.0;
    }
    const auto b_quad = quad::integrate(
        [&](double k) { return 2.0 * s * std::exp((-2.0 * s - 1.0) * std::log(k)) * r_of_k(k); }, 1.0, k_max, qopt);
    Complex b_tail = 0.0;
    double tail_err = 0.0;
    if (!free) {
        // R k^4 ~ c0 + c1 / k + c2 / k^2, interpolated at K, K/2 and K/4; the
        // two-point fit supplies the error estimate.
        const double K = k_max;
        std::array<double, 3> x{}, f{};
        for (int i = 0; i < 3; ++i) {
            const double k = K / (1 << i);
            x[i] = 1.0 / k;
            f[i] = r_of_k(k) * k * k * k * k;
        }
        const double d01 = (f[1] - f[0]) / (x[1] - x[0]);
        const double d12 = (f[2] - f[1]) / (x[2] - x[1]);
        const double c2 = (d12 - d01) / (x[2] - x[0]);
        const double c1 = d01 - c2 * (x[0] + x[1]);
        const double c0 = f[0] - c1 * x[0] - c2 * x[0] * x[0];
        auto term = [&](double c, double j) {
            return c * std::exp((-2.0 * s - 4.0 - j) * std::log(K)) / (2.0 * s + 4.0 + j);
        };
        b_tail = 2.0 * s * (term(c0, 0) + term(c1, 1) + term(c2, 2));
        const double c1_two = d01, c0_two = f[0] - d01 * x[0];
        tail_err = std::abs(b_tail - 2.0 * s * (term(c0_two, 0) + term(c1_two, 1)));
    }
    const Complex b_part = -r_of_k(1.0) + b_quad.value + b_tail;

    Complex poles = 0.0;
    if (as.a1 != 0.0) poles -= 0.5 * as.a1 * sin_over(s, -0.5);
    if (as.a2 != 0.0) poles -= as.a2 * sin_over(s, -1.0);
    if (as.a3 != 0.0) poles -= 1.5 * as.a3 * sin_over(s, -1.5);

    res.value = asy + (sin_s * (a_part.value + b_part) + poles) / kPi;
    res.err_estimate = std::abs(sin_s / kPi) * (a_part.error + b_quad.error + tail_err);
    res.diagnostics.quad_evals = a_part.evals + b_quad.evals;
    return res;
}

double log_det(const OperatorSpec& spec, const Precision& prec) {
    check_spectrum(spec, prec);
    return std::log(2.0 * solve_ivp(spec, 0.0, prec).u_at_1.real());
}

Extrapolated<double> zeta_operator_deriv0_numeric(const OperatorSpec& spec, const Precision& prec) {
    const double h = prec.diff_step;
    auto central = [&](double step) {
        const Complex up = zeta_operator(spec, step, prec).value;
        const Complex dn = zeta_operator(spec, -step, prec).value;
        return ((up - dn) / (2.0 * step)).real();
    };
    return richardson<double>({central(h), central(0.5 * h)}, 2.0, 2, 2);
}

}  // namespace tzeta::opdet
