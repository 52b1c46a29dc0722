#include <cmath>

#include "tzeta/core/errors.hpp"
#include "tzeta/core/quadrature.hpp"
#include "tzeta/core/series.hpp"
#include "tzeta/special/special.hpp"
#include "tzeta/torus/torus_zeta.hpp"

namespace tzeta::torus {

ContourIntegrandParams::ContourIntegrandParams(std::int64_t n_, const TauPoint& t)
    : n(n_), branch_point(-double(n_) * t.tau1, double(n_) * t.tau2), tau(t) {
    if (n_ < 1) throw DomainError("contour branch index must be >= 1");
}

double contour_log_derivative(const ContourIntegrandParams& p, double u) {
    // Both factors contribute 2 pi w/(1-w) with w = e^{-2 pi u} q^n and its
    // conjugate, so the sum is 4 pi Re(w/(1-w)).
    const double nd = static_cast<double>(p.n);
    const double mod = std::exp(-kTwoPi * (u + nd * p.tau.tau2));
    const double ph = 2.0 * nd * p.tau.tau1;
    const Complex w(mod * cos_pi(ph), mod * sin_pi(ph));
    return 2.0 * kTwoPi * (w / (1.0 - w)).real();
}

Complex remainder_integral(EvalPoint sp, const TauPoint& tau, const Precision& prec, Diagnostics* diag) {
    const Complex s = sp.s;
    if (!(s.real() < 1.0)) throw DomainError("remainder_integral requires Re s < 1");
    const double sig = s.real();
    const double sin_mag = std::abs(sin_pi(s));
    if (sin_mag == 0.0) return 0.0;

    quad::Options opt;
    opt.rel_tol = prec.quad_rel_tol;
    opt.abs_tol = 1e-300;

    // Size of the n-th integral, used as the series envelope:
    // int u^{-sig} (2 n tau2)^{-sig} 4 pi |q|^n e^{-2 pi u} du.
    const double g1 = std::abs(special::gamma(1.0 - sig));
    SeriesAccumulator acc(prec.series_tail_tol, prec.n_max);
    long evals = 0;
    for (std::int64_t n = 1;; ++n) {
        const ContourIntegrandParams p(n, tau);
        const double shift = 2.0 * double(n) * tau.tau2;
        auto h = [&](double u) {
            return std::exp(-s * std::log(u + shift)) * contour_log_derivative(p, u);
        };
        auto near = quad::integrate_algebraic_left(h, -s, 1.0, opt);

        // Cut where the integrand has fallen by e^{-40} relative to u = 1.
        double u_max = 1.0;
        const double log_at_one = -sig * std::log(1.0 + shift);
        while (-kTwoPi * (u_max - 1.0) - sig * std::log(u_max * (u_max + shift)) - log_at_one > -40.0) {
            u_max += 0.5;
        }
        auto far = quad::integrate(
            [&](double u) { return std::exp(-s * std::log(u * (u + shift))) * contour_log_derivative(p, u); },
            1.0, u_max, opt);
        evals += near.evals + far.evals;

        const double env = 2.0 * kTwoPi * std::exp(-kTwoPi * double(n) * tau.tau2) * std::pow(shift, -sig) * g1 *
                           std::pow(kTwoPi, sig - 1.0);
        if (acc.add(near.value + far.value, env)) break;
    }
    if (diag) {
        diag->terms_used += acc.terms();
        diag->quad_evals += evals;
        if (acc.capped()) diag->warnings.push_back("TruncationWarning: contour n-sum hit n_max");
    }
    return 2.0 * real_pow(tau.tau2, s) * sin_pi(s) / kPi * acc.sum();
}

GammaIntegral gamma_integral_check(EvalPoint sp, double x, const Precision& prec) {
    const Complex s = sp.s;
    if (!(s.real() > 0.5 && s.real() < 1.0)) throw DomainError("gamma_integral_check requires 1/2 < Re s < 1");
    if (!(x > 0.0)) throw DomainError("gamma_integral_check requires x > 0");
    quad::Options opt;
    opt.rel_tol = prec.quad_rel_tol;
    opt.abs_tol = 1e-300;
    // (0,1]: u^{-s} (u+2x)^{-s};  [1,inf) with u = 1/v: v^{2s-2} (1+2xv)^{-s}.
    auto lo = quad::integrate_algebraic_left([&](double u) { return std::exp(-s * std::log(u + 2.0 * x)); }, -s,
                                             1.0, opt);
    auto hi = quad::integrate_algebraic_left(
        [&](double v) { return std::exp(-s * std::log1p(2.0 * x * v)); }, 2.0 * s - 2.0, 1.0, opt);
    GammaIntegral out;
    out.quadrature = lo.value + hi.value;
    out.closed_form = real_pow(x, 1.0 - 2.0 * s) * special::gamma(1.0 - s) * special::gamma(s - 0.5) /
                      (2.0 * std::sqrt(kPi));
    return out;
}

}  // namespace tzeta::torus
