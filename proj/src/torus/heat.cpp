#include <algorithm>
#include <cmath>

#include "tzeta/core/errors.hpp"
#include "tzeta/core/quadrature.hpp"
#include "tzeta/kernels/row_sums.hpp"
#include "tzeta/special/special.hpp"
#include "tzeta/torus/torus_zeta.hpp"

namespace tzeta::torus {

namespace {

// Smallest |m + n tau|^2 / tau2 over the nonzero lattice.
double min_norm(const TauPoint& tau) {
    TauPoint red(0.0, 1.0);
    modular::reduce_to_fundamental(tau, &red);
    // In the fundamental domain the shortest vector is 1 (m = 1, n = 0) in the
    // reduced basis; the form value per tau2 is then 1 / red.tau2.
    return 1.0 / red.tau2;
}

}  // namespace

double heat_kernel(double x, const TauPoint& tau, const Precision& prec) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("heat_kernel requires x > 0");
    const double scale = kPi * x / tau.tau2;
    // Terms with scale |m + n tau|^2 > cut are below series_tail_tol * e^{-5}.
    const double cut = -std::log(prec.series_tail_tol) + 5.0;
    const double r = std::sqrt(cut / scale);
    const auto n_lim = static_cast<long>(std::floor(r / tau.tau2));
    const double abs2 = std::norm(tau.value());
    double total = 0.0;
    for (long n = -n_lim; n <= n_lim; ++n) {
        const double y = n * tau.tau2;
        const double half = std::sqrt(std::max(0.0, r * r - y * y));
        const double centre = -n * tau.tau1;
        const auto m0 = static_cast<long>(std::floor(centre - half));
        const auto m1 = static_cast<long>(std::ceil(centre + half));
        const double nd = static_cast<double>(n);
        total += kernels::gaussian_row_sum(1.0, 2.0 * tau.tau1 * nd, abs2 * nd * nd, m0, m1, scale);
    }
    return total;
}

double jacobi_inversion_residual(double x, const TauPoint& tau, const Precision& prec) {
    return std::abs(heat_kernel(x, tau, prec) - heat_kernel(1.0 / x, tau, prec) / x);
}

Complex theta_mellin_integral(EvalPoint sp, const TauPoint& tau, const Precision& prec) {
    const Complex s = sp.s;
    if (!(s.real() > 1.0)) throw DomainError("the Mellin integral of the heat kernel requires Re s > 1");
    const double mu = min_norm(tau);
    quad::Options opt;
    opt.rel_tol = prec.quad_rel_tol;
    opt.abs_tol = 1e-300;
    auto integrand = [&](double t) { return (heat_kernel(t, tau, prec) - 1.0) * std::exp((s - 1.0) * std::log(t)); };

    // Near 0 the kernel equals 1/t up to O(e^{-pi mu / t} / t); that leading
    // part is integrated exactly on (0, t0].
    const double t0 = std::min(0.5, kPi * mu / 40.0);
    const Complex head = std::exp((s - 1.0) * std::log(t0)) / (s - 1.0) - std::exp(s * std::log(t0)) / s;
    auto mid = quad::integrate(integrand, t0, 1.0, opt);
    // Tail where 4 e^{-pi mu t} t^{Re s - 1} < e^{-40}.
    double t_max = 2.0;
    while (kPi * mu * t_max - (s.real() - 1.0) * std::log(t_max) < 45.0) t_max *= 1.25;
    auto tail = quad::integrate(integrand, 1.0, t_max, opt);
    return 0.5 * (head + mid.value + tail.value);
}

ThetaMellin theta_mellin_check(EvalPoint sp, const TauPoint& tau, const Precision& prec) {
    const Complex s = sp.s;
    if (s == Complex(0.0) || s == Complex(1.0)) throw PoleError("completed E* undefined at s = 0, 1");
    auto completed = [&](Complex z) { return completed_eisenstein(z, tau, prec); };
    ThetaMellin out{};
    const Complex e_s = completed(s);
    out.symmetry = std::abs(e_s - completed(1.0 - s));
    if (s.real() > 1.0) out.mellin = std::abs(e_s - theta_mellin_integral(s, tau, prec));
    return out;
}

}  // namespace tzeta::torus
