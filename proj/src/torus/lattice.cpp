#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "tzeta/core/errors.hpp"
#include "tzeta/core/parallel.hpp"
#include "tzeta/core/quadrature.hpp"
#include "tzeta/kernels/row_sums.hpp"
#include "tzeta/torus/torus_zeta.hpp"

namespace tzeta::torus {

EvalPoint::EvalPoint(Complex z) : s(z) {
    if (!is_finite(z)) throw DomainError("s must be finite");
}

std::vector<Eigenvalue> eigenvalues(const TauPoint& tau, double bound) {
    if (!(bound > 0.0)) throw DomainError("eigenvalue bound must be positive");
    const double scale = kTwoPi / tau.tau2;
    // |m + n tau| <= r
    const double r = std::sqrt(bound) / scale * (1.0 + 1e-12);
    const double lim = bound * (1.0 + 1e-12);
    std::vector<Eigenvalue> out;
    const auto n_max = static_cast<std::int64_t>(std::floor(r / tau.tau2));
    for (std::int64_t n = -n_max; n <= n_max; ++n) {
        const double y = n * tau.tau2;
        const double half = std::sqrt(std::max(0.0, r * r - y * y));
        const double centre = -n * tau.tau1;
        const auto m_lo = static_cast<std::int64_t>(std::floor(centre - half)) - 1;
        const auto m_hi = static_cast<std::int64_t>(std::ceil(centre + half)) + 1;
        for (std::int64_t m = m_lo; m <= m_hi; ++m) {
            if (m == 0 && n == 0) continue;
            const double x = m + n * tau.tau1;
            const double lsq = scale * scale * (x * x + y * y);
            if (lsq <= lim) out.push_back({m, n, lsq});
        }
    }
    std::sort(out.begin(), out.end(), [](const Eigenvalue& a, const Eigenvalue& b) {
        if (a.lambda_sq != b.lambda_sq) return a.lambda_sq < b.lambda_sq;
        if (a.n != b.n) return a.n < b.n;
        return a.m < b.m;
    });
    return out;
}

namespace {

struct Form {
    double t1, abs2;
    // |x + y tau|^2
    double operator()(double x, double y) const { return x * x + 2.0 * t1 * x * y + abs2 * y * y; }
};

// Shell max(|m|,|n|) = k of sum |m + n tau|^{-2s}.
Complex shell(const Form& q, long k, Complex s) {
    const double kd = static_cast<double>(k);
    const Complex rows = kernels::power_row_sum(1.0, 2.0 * q.t1 * kd, q.abs2 * kd * kd, -k, k, s);
    const Complex cols = kernels::power_row_sum(q.abs2, 2.0 * q.t1 * kd, kd * kd, -k + 1, k - 1, s);
    return 2.0 * (rows + cols);
}

// Continuum estimate of the shells beyond a square of half-side a, with
// the midpoint-rule Laplacian correction:
//   sum_{cells} f ~ int f - (1/24) int Laplacian f.
// Both integrands are homogeneous, so each reduces to a line integral over
// the boundary of the unit square.
Complex tail_correction(const Form& q, double a, Complex s, const Precision& prec, Diagnostics& diag) {
    const double t1 = q.t1, ab = q.abs2;
    auto lap = [&](double x, double y) {
        const double qq = q(x, y);
        const double gx = 2.0 * x + 2.0 * t1 * y;
        const double gy = 2.0 * t1 * x + 2.0 * ab * y;
        const Complex qs = std::exp(-s * std::log(qq));
        return s * (s + 1.0) * qs * (gx * gx + gy * gy) / (qq * qq) - s * qs * (2.0 + 2.0 * ab) / qq;
    };
    auto f = [&](double x, double y) { return std::exp(-s * std::log(q(x, y))); };
    quad::Options opt;
    opt.rel_tol = prec.quad_rel_tol;
    opt.abs_tol = 1e-300;
    auto bf = quad::integrate([&](double t) { return f(1.0, t) + f(t, 1.0); }, -1.0, 1.0, opt);
    auto bl = quad::integrate([&](double t) { return lap(1.0, t) + lap(t, 1.0); }, -1.0, 1.0, opt);
    diag.quad_evals += bf.evals + bl.evals;
    const Complex i_term = std::exp((2.0 - 2.0 * s) * std::log(a)) / (2.0 * s - 2.0) * 2.0 * bf.value;
    const Complex j_term = std::exp(-2.0 * s * std::log(a)) / (2.0 * s) * 2.0 * bl.value;
    return i_term - j_term / 24.0;
}

constexpr long kFirstShells = 16;
constexpr long kMaxShells = 2048;

}  // namespace

EvalResult eisenstein_direct(EvalPoint sp, const TauPoint& tau, const Precision& prec) {
    prec.validate();
    const Complex s = sp.s;
    if (!(s.real() > 1.0)) throw DomainError("eisenstein_direct requires Re s > 1");
    const Form q{tau.tau1, std::norm(tau.value())};

    EvalResult res;
    res.method = Method::direct;
    std::vector<Complex> shells(1, Complex{});
    Complex partial = 0.0;
    Complex prev_est = 0.0;
    bool have_prev = false;
    double err = 0.0;
    for (long k_max = kFirstShells;; k_max *= 2) {
        const long k0 = static_cast<long>(shells.size());
        shells.resize(k_max + 1);
        parallel_for(static_cast<std::size_t>(k_max + 1 - k0), [&](std::size_t i) {
            const long k = k0 + static_cast<long>(i);
            shells[k] = shell(q, k, s);
        });
        for (long k = k0; k <= k_max; ++k) partial += shells[k];
        const Complex est = partial + tail_correction(q, k_max + 0.5, s, prec, res.diagnostics);
        if (have_prev) {
            err = std::abs(est - prev_est);
            if (err <= std::max(prec.series_tail_tol, 0.1 * prec.quad_rel_tol * std::abs(est))) {
                prev_est = est;
                break;
            }
        }
        prev_est = est;
        have_prev = true;
        if (k_max >= kMaxShells) {
            res.diagnostics.warnings.push_back("TruncationWarning: lattice sum stopped at " +
                                               std::to_string(k_max) + " shells");
            break;
        }
    }
    const long k_used = static_cast<long>(shells.size()) - 1;
    res.diagnostics.terms_used = (2 * k_used + 1) * (2 * k_used + 1) - 1;
    const Complex t2s = real_pow(tau.tau2, s);
    res.value = t2s * prev_est;
    res.err_estimate = std::abs(t2s) * err;
    return res;
}

}  // namespace tzeta::torus
