#include <cmath>

#include "tzeta/core/errors.hpp"
#include "tzeta/core/quadrature.hpp"
#include "tzeta/core/series.hpp"
#include "tzeta/special/special.hpp"
#include "tzeta/torus/torus_zeta.hpp"

namespace tzeta::torus {

SumVersusClosed nan_yue_williams_sum(const TauPoint& tau, const Precision& prec) {
    SeriesAccumulator acc(prec.series_tail_tol, prec.n_max);
    for (std::int64_t n = 1;; ++n) {
        const double nd = static_cast<double>(n);
        const double mag = special::sigma(1.0, n).real() * special::bessel_k(0.5, kTwoPi * nd * tau.tau2, prec) /
                           std::sqrt(nd);
        if (acc.add(cos_pi(2.0 * nd * tau.tau1) * mag, mag)) break;
    }
    SumVersusClosed out{};
    out.sum = acc.sum().real();
    const double eta_abs = std::abs(modular::eta(tau, prec));
    out.closed_form = -0.5 / std::sqrt(tau.tau2) * std::log(eta_abs) - std::sqrt(tau.tau2) * kPi / 24.0;
    return out;
}

SumVersusClosed lambert_q1(const TauPoint& tau, const Precision& prec) {
    SeriesAccumulator bessel(prec.series_tail_tol, prec.n_max);
    for (std::int64_t n = 1;; ++n) {
        const double nd = static_cast<double>(n);
        const double mag = special::sigma(-1.0, n).real() * special::bessel_k(-0.5, kTwoPi * nd * tau.tau2, prec) *
                           std::sqrt(nd);
        if (bessel.add(cos_pi(2.0 * nd * tau.tau1) * mag, mag)) break;
    }

    // Closed form, with e^{2 pi i n conj(tau)} = 1/conj(c), c = e^{2 pi i n tau}:
    //   (1 - 2c + e^{4 pi i n tau1}) / ((c - 1)(1/conj(c) - 1))
    //     = (1 - 2c + e^{4 pi i n tau1}) conj(c) / ((c - 1)(1 - conj(c))).
    SeriesAccumulator closed(prec.series_tail_tol, prec.n_max);
    for (std::int64_t n = 1;; ++n) {
        const double nd = static_cast<double>(n);
        const double mod = std::exp(-kTwoPi * nd * tau.tau2);
        const double ph = 2.0 * nd * tau.tau1;
        const Complex c(mod * cos_pi(ph), mod * sin_pi(ph));
        const Complex e4(cos_pi(2.0 * ph), sin_pi(2.0 * ph));
        const Complex term = (1.0 - 2.0 * c + e4) * std::conj(c) / ((c - 1.0) * (1.0 - std::conj(c))) / nd;
        if (closed.add(term, 4.0 * mod / (nd * (1.0 - mod) * (1.0 - mod)))) break;
    }
    SumVersusClosed out{};
    out.sum = bessel.sum().real();
    out.closed_form = -0.25 / std::sqrt(tau.tau2) * closed.sum().real();
    return out;
}

MellinRemainder mellin_remainder_tau_i(EvalPoint sp, const Precision& prec) {
    const Complex s = sp.s;
    if (!(s.real() > 0.0 && s.real() < 1.0)) throw DomainError("mellin_remainder_tau_i requires 0 < Re s < 1");
    const double sig = s.real();
    quad::Options opt;
    opt.rel_tol = prec.quad_rel_tol;
    opt.abs_tol = 1e-300;
    const double g = std::abs(special::gamma(sig));
    SeriesAccumulator acc(prec.series_tail_tol, prec.n_max);
    for (std::int64_t n = 1;; ++n) {
        const double n2 = double(n) * double(n);
        auto h = [&](double u) {
            const double r = std::sqrt(n2 + u);
            return kPi / (std::expm1(kTwoPi * r) * r);
        };
        auto near = quad::integrate_algebraic_left(h, s - 1.0, 1.0, opt);
        double u_max = 2.0;
        while (kTwoPi * (std::sqrt(n2 + u_max) - std::sqrt(n2 + 1.0)) - (sig - 1.0) * std::log(u_max) < 40.0) {
            u_max *= 1.5;
        }
        auto far = quad::integrate([&](double u) { return std::exp((s - 1.0) * std::log(u)) * h(u); }, 1.0, u_max,
                                   opt);
        const double nd = static_cast<double>(n);
        const double env = kPi / nd * std::exp(-kTwoPi * nd) * std::pow(nd / kPi, sig) * g;
        if (acc.add(near.value + far.value, env)) break;
    }
    MellinRemainder out;
    out.inner_sum = acc.sum();
    out.integral_form = 4.0 * sin_pi(s) / kPi * out.inner_sum;
    const TauPoint i(0.0, 1.0);
    out.q_dual = remainder_bessel(1.0 - s, i, prec);
    const Complex gs = special::gamma(s);
    out.inner_sum_predicted = real_pow(kPi, 1.0 - 2.0 * s) * gs * gs * remainder_bessel(s, i, prec) / 4.0;
    return out;
}

}  // namespace tzeta::torus
