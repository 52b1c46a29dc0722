#include <cmath>
#include <vector>

#include "tzeta/core/errors.hpp"
#include "tzeta/core/series.hpp"
#include "tzeta/special/special.hpp"
#include "tzeta/torus/torus_zeta.hpp"

namespace tzeta::torus {

namespace {

using special::gamma;
using special::rgamma;
using special::riemann_zeta;

const double kSqrtPi = std::sqrt(kPi);

// 2 tau2^s zeta(2s) + 2 sqrt(pi) tau2^{1-s} Gamma(s-1/2) zeta(2s-1) / Gamma(s).
// Below Re s = 1/2 the second product is taken in reflected form
// pi^{2s-3/2} Gamma(1-s) zeta(2-2s), finite where Gamma and zeta have
// coincident pole and zero.
Complex zeta_terms(Complex s, double tau2) {
    const Complex first = 2.0 * real_pow(tau2, s) * riemann_zeta(2.0 * s);
    const Complex rg = rgamma(s);
    if (rg == 0.0) return first;
    Complex prod;
    if (s.real() < 0.5) {
        prod = real_pow(kPi, 2.0 * s - 1.5) * gamma(1.0 - s) * riemann_zeta(2.0 - 2.0 * s);
    } else {
        prod = gamma(s - 0.5) * riemann_zeta(2.0 * s - 1.0);
    }
    return first + 2.0 * kSqrtPi * real_pow(tau2, 1.0 - s) * prod * rg;
}

bool near_half(Complex s) { return std::abs(s - 0.5) < 1e-5; }

// Finite part at a removable singularity: symmetric averages about s for
// h = 0.01 / 2^k and a Richardson table in h^2. Steps this large keep the
// cancellation of the two 1/(s - 1/2) poles out of the last digits.
template <class F>
Complex symmetric_limit(F&& f, Complex s, double* err = nullptr) {
    std::vector<Complex> samples;
    for (int k = 0; k < 4; ++k) {
        const double h = 0.01 * std::ldexp(1.0, -k);
        samples.push_back(0.5 * (f(s + h) + f(s - h)));
    }
    const auto r = richardson(samples, 2.0, 2, 2);
    if (err) *err = r.error;
    return r.value;
}

}  // namespace

namespace {

// sum_n sigma_{1-2s}(n) cos(2 pi n tau1) K_{1/2-s}(2 pi n tau2) n^{s-1/2}
Complex bessel_series(Complex s, const TauPoint& tau, const Precision& prec, Diagnostics* diag) {
    const Complex nu = 0.5 - s;
    SeriesAccumulator acc(prec.series_tail_tol, prec.n_max);
    for (std::int64_t n = 1;; ++n) {
        const double nd = static_cast<double>(n);
        const Complex k = special::bessel_k(nu, kTwoPi * nd * tau.tau2, prec);
        const Complex mag = special::sigma(1.0 - 2.0 * s, n) * k * real_pow(nd, s - 0.5);
        const double c = cos_pi(2.0 * nd * tau.tau1);
        if (acc.add(c * mag, std::abs(mag))) break;
    }
    if (diag) {
        diag->terms_used += acc.terms();
        if (acc.capped()) diag->warnings.push_back("TruncationWarning: Bessel series hit n_max");
    }
    return acc.sum();
}

// Gamma(s) E*(s, tau) with every Gamma pole cancelled against a zeta zero:
//   2 tau2^s Gamma(s) zeta(2s) + 2 sqrt(pi) tau2^{1-s} Gamma(s-1/2) zeta(2s-1)
//   + 8 pi^s tau2^{1/2} (Bessel series).
Complex gamma_times_estar(Complex s, const TauPoint& tau, const Precision& prec) {
    Complex g1;
    if (s.real() < 0.5) {
        g1 = real_pow(kPi, 2.0 * s - 0.5) * gamma(0.5 - s) * riemann_zeta(1.0 - 2.0 * s);
    } else {
        g1 = gamma(s) * riemann_zeta(2.0 * s);
    }
    Complex g2;
    if (s.real() < 0.5) {
        g2 = real_pow(kPi, 2.0 * s - 1.5) * gamma(1.0 - s) * riemann_zeta(2.0 - 2.0 * s);
    } else {
        g2 = gamma(s - 0.5) * riemann_zeta(2.0 * s - 1.0);
    }
    return 2.0 * real_pow(tau.tau2, s) * g1 + 2.0 * kSqrtPi * real_pow(tau.tau2, 1.0 - s) * g2 +
           8.0 * real_pow(kPi, s) * std::sqrt(tau.tau2) * bessel_series(s, tau, prec, nullptr);
}

}  // namespace

Complex remainder_bessel(EvalPoint sp, const TauPoint& tau, const Precision& prec, Diagnostics* diag) {
    const Complex s = sp.s;
    const Complex rg = rgamma(s);
    if (rg == 0.0) return 0.0;
    return 8.0 * real_pow(kPi, s) * std::sqrt(tau.tau2) * rg * bessel_series(s, tau, prec, diag);
}

Complex completed_eisenstein(EvalPoint sp, const TauPoint& tau, const Precision& prec) {
    const Complex s = sp.s;
    if (s == Complex(0.0) || s == Complex(1.0)) throw PoleError("completed E* has poles at s = 0, 1");
    auto at = [&](Complex z) { return 0.5 * real_pow(kPi, -z) * gamma_times_estar(z, tau, prec); };
    if (!near_half(s)) return at(s);
    return symmetric_limit(at, s);
}

DivisorPairing remainder_divisor_pairing(EvalPoint sp, const TauPoint& tau, const Precision& prec) {
    const Complex s = sp.s;
    const Complex nu = 0.5 - s;
    // Terms vanish like e^{-2 pi N tau2}; N_max covers series_tail_tol.
    const auto n_max = static_cast<std::int64_t>(
        std::ceil((-std::log(prec.series_tail_tol) + 10.0) / (kTwoPi * tau.tau2))) + 1;
    std::vector<Complex> k_of(n_max + 1);
    for (std::int64_t N = 1; N <= n_max; ++N) k_of[N] = special::bessel_k(nu, kTwoPi * N * tau.tau2, prec);
    auto phase = [&](std::int64_t N) {
        const double x = 2.0 * static_cast<double>(N) * tau.tau1;
        return Complex(cos_pi(x), sin_pi(x));
    };
    DivisorPairing out{};
    for (std::int64_t n = 1; n <= n_max; ++n) {
        for (std::int64_t k = 1; k * n <= n_max; ++k) {
            const std::int64_t N = k * n;
            out.double_sum += phase(N) * k_of[N] * std::pow(Complex(double(k) / double(n)), s - 0.5);
        }
    }
    for (std::int64_t N = 1; N <= n_max; ++N) {
        out.divisor_sum += special::sigma(1.0 - 2.0 * s, N) * phase(N) * k_of[N] * real_pow(N, s - 0.5);
    }
    return out;
}

EvalResult eisenstein_cs(EvalPoint sp, const TauPoint& tau, const Precision& prec) {
    prec.validate();
    const Complex s = sp.s;
    if (sp.is_pole()) throw PoleError("E*(s, tau) has a pole at s = 1");
    EvalResult res;
    res.method = Method::chowla_selberg;
    const Complex q = remainder_bessel(s, tau, prec, &res.diagnostics);
    double limit_err = 0.0;
    res.value = near_half(s) ? symmetric_limit([&](Complex z) { return zeta_terms(z, tau.tau2); }, s, &limit_err) + q
                             : zeta_terms(s, tau.tau2) + q;
    res.err_estimate =
        prec.series_tail_tol * std::max(1.0, std::abs(q)) + 1e-15 * std::abs(res.value) + limit_err;
    return res;
}

EvalResult eisenstein_contour(EvalPoint sp, const TauPoint& tau, const Precision& prec) {
    prec.validate();
    const Complex s = sp.s;
    if (!(s.real() < 1.0)) throw DomainError("the contour representation requires Re s < 1");
    EvalResult res;
    res.method = Method::contour;
    const Complex q = remainder_integral(s, tau, prec, &res.diagnostics);
    double limit_err = 0.0;
    res.value = near_half(s) ? symmetric_limit([&](Complex z) { return zeta_terms(z, tau.tau2); }, s, &limit_err) + q
                             : zeta_terms(s, tau.tau2) + q;
    res.err_estimate = prec.quad_rel_tol * std::max(std::abs(q), 1e-3) + 1e-15 * std::abs(res.value) + limit_err;
    return res;
}

EvalResult eisenstein(EvalPoint s, const TauPoint& tau, Method method, const Precision& prec) {
    switch (method) {
        case Method::direct: return eisenstein_direct(s, tau, prec);
        case Method::contour: return eisenstein_contour(s, tau, prec);
        case Method::chowla_selberg: return eisenstein_cs(s, tau, prec);
    }
    return eisenstein_cs(s, tau, prec);
}

EvalResult zeta_laplacian(EvalPoint sp, const TauPoint& tau, Method method, const Precision& prec) {
    EvalResult r = eisenstein(sp, tau, method, prec);
    const Complex f = std::exp(-2.0 * sp.s * std::log(kTwoPi)) * real_pow(tau.tau2, sp.s);
    r.value *= f;
    r.err_estimate *= std::abs(f);
    return r;
}

double zeta_laplacian_deriv0(const TauPoint& tau, const Precision& prec) {
    return -std::log(determinant_torus(tau, prec));
}

Extrapolated<double> zeta_laplacian_deriv0_numeric(const TauPoint& tau, const Precision& prec) {
    const double h = prec.diff_step;
    auto central = [&](double step) {
        const Complex up = zeta_laplacian(step, tau, Method::contour, prec).value;
        const Complex dn = zeta_laplacian(-step, tau, Method::contour, prec).value;
        return ((up - dn) / (2.0 * step)).real();
    };
    return richardson<double>({central(h), central(0.5 * h)}, 2.0, 2, 2);
}

double determinant_torus(const TauPoint& tau, const Precision& prec) {
    const double a = std::abs(modular::eta(tau, prec));
    const double a2 = a * a;
    return tau.tau2 * tau.tau2 * a2 * a2;
}

KroneckerConstant kronecker_constant(const TauPoint& tau, const Precision& prec) {
    KroneckerConstant out{};
    const double eta_abs = std::abs(modular::eta(tau, prec));
    out.closed_form = kTwoPi * (kEulerGamma - std::log(2.0) - std::log(std::sqrt(tau.tau2) * eta_abs * eta_abs));
    // The pole terms cancel in the symmetric average, which is even in h.
    std::vector<double> samples;
    for (int k = 0; k < 5; ++k) {
        const double h = 0.1 * std::ldexp(1.0, -k);
        const Complex up = eisenstein_cs(1.0 + h, tau, prec).value;
        const Complex dn = eisenstein_cs(1.0 - h, tau, prec).value;
        samples.push_back(0.5 * (up + dn).real());
    }
    const auto ex = richardson(samples, 2.0, 2, 2);
    out.extrapolated = ex.value;
    out.error = ex.error;
    return out;
}

Extrapolated<double> residue_at_one(const TauPoint& tau, const Precision& prec) {
    std::vector<double> samples;
    for (int k = 1; k <= 4; ++k) {
        const double h = std::pow(10.0, -k);
        samples.push_back(h * eisenstein_cs(1.0 + h, tau, prec).value.real());
    }
    return richardson(samples, 10.0, 1, 1);
}

namespace {

void check_fe_point(Complex s) {
    for (const Complex p : {Complex(0.0), Complex(1.0)}) {
        if (s == p || 1.0 - s == p) throw PoleError("functional equation undefined at s = 0, 1");
    }
}

}  // namespace

double functional_equation_residual(EvalPoint sp, const TauPoint& tau, const Precision& prec) {
    const Complex s = sp.s;
    check_fe_point(s);
    // Gamma(z) E*(z) = 2 pi^z E~(z), so both sides carry 2 pi^{1-s}.
    const Complex lhs = 2.0 * real_pow(kPi, 1.0 - s) * completed_eisenstein(s, tau, prec);
    const Complex rhs = 2.0 * real_pow(kPi, 1.0 - s) * completed_eisenstein(1.0 - s, tau, prec);
    return std::abs(lhs - rhs);
}

double remainder_fe_residual(EvalPoint sp, const TauPoint& tau, const Precision& prec) {
    const Complex s = sp.s;
    check_fe_point(s);
    // Gamma(s) Q(s) = 8 pi^s tau2^{1/2} B(s), finite at every s.
    const double r = 8.0 * std::sqrt(tau.tau2);
    const Complex lhs = real_pow(kPi, 1.0 - s) * r * bessel_series(s, tau, prec, nullptr);
    const Complex rhs = real_pow(kPi, 1.0 - s) * r * bessel_series(1.0 - s, tau, prec, nullptr);
    return std::abs(lhs - rhs);
}

}  // namespace tzeta::torus
