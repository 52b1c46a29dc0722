#pragma once

#include <cstdint>
#include <algorithm>
#include <optional>
#include <vector>

#include "tzeta/core/complex.hpp"
#include "tzeta/core/eval_result.hpp"
#include "tzeta/core/precision.hpp"
#include "tzeta/core/richardson.hpp"
#include "tzeta/modular/eta.hpp"

namespace tzeta::torus {

/// Argument s of E*(s, tau) and zeta_{Delta_tau}(s).
struct EvalPoint {
    Complex s;

    EvalPoint(Complex z);  // NOLINT(google-explicit-constructor)
    EvalPoint(double x) : EvalPoint(Complex(x, 0.0)) {}  // NOLINT(google-explicit-constructor)

    /// s = 1, the only pole of E*.
    bool is_pole() const { return s == Complex(1.0, 0.0); }
};

struct Eigenvalue {
    std::int64_t m = 0;
    std::int64_t n = 0;
    double lambda_sq = 0.0;
};

/// Branch data of the n-th term of the contour remainder.
struct ContourIntegrandParams {
    std::int64_t n;
    Complex branch_point;  // -n tau1 + i n tau2
    TauPoint tau;

    ContourIntegrandParams(std::int64_t n_, const TauPoint& t);
};

/// d/du log[(1 - e^{-2 pi u - 2 pi i n conj(tau)})(1 - e^{-2 pi u + 2 pi i n tau})].
double contour_log_derivative(const ContourIntegrandParams& p, double u);

/// Laplacian eigenvalues (2 pi / tau2)^2 |m + n tau|^2 <= bound, ascending.
std::vector<Eigenvalue> eigenvalues(const TauPoint& tau, double bound);

// ---- E*(s, tau) by three representations -------------------------------

/// Square-shell lattice sum, Re s > 1.
EvalResult eisenstein_direct(EvalPoint s, const TauPoint& tau, const Precision& prec = {});
/// Chowla-Selberg series, all s != 1.
EvalResult eisenstein_cs(EvalPoint s, const TauPoint& tau, const Precision& prec = {});
/// Zeta terms plus the contour-integral remainder, Re s < 1.
EvalResult eisenstein_contour(EvalPoint s, const TauPoint& tau, const Precision& prec = {});

EvalResult eisenstein(EvalPoint s, const TauPoint& tau, Method method, const Precision& prec = {});

/// Q(s, tau), the Bessel series of the Chowla-Selberg formula.
Complex remainder_bessel(EvalPoint s, const TauPoint& tau, const Precision& prec = {},
                         Diagnostics* diag = nullptr);

/// Q(s, tau) from the contour representation, Re s < 1.
Complex remainder_integral(EvalPoint s, const TauPoint& tau, const Precision& prec = {},
                           Diagnostics* diag = nullptr);

/// Both sides of the divisor-sum regrouping of the Bessel double sum:
/// sum_{n,k} e^{2 pi i k n tau1} K(2 pi k n tau2) (k/n)^{s-1/2} and
/// sum_N sigma_{1-2s}(N) e^{2 pi i N tau1} K(2 pi N tau2) N^{s-1/2}.
struct DivisorPairing {
    Complex double_sum;
    Complex divisor_sum;
};
DivisorPairing remainder_divisor_pairing(EvalPoint s, const TauPoint& tau, const Precision& prec = {});

// ---- spectral zeta and determinant --------------------------------------

/// zeta_{Delta_tau}(s) = (2 pi)^{-2s} tau2^s E*(s, tau).
EvalResult zeta_laplacian(EvalPoint s, const TauPoint& tau, Method method, const Precision& prec = {});

/// -log(tau2^2 |eta|^4).
double zeta_laplacian_deriv0(const TauPoint& tau, const Precision& prec = {});
/// Central difference of the contour evaluator at s = 0 with one Richardson step.
Extrapolated<double> zeta_laplacian_deriv0_numeric(const TauPoint& tau, const Precision& prec = {});

/// tau2^2 |eta(tau)|^4.
double determinant_torus(const TauPoint& tau, const Precision& prec = {});

struct KroneckerConstant {
    double closed_form;   // 2 pi (gamma - log 2 - log(tau2^{1/2} |eta|^2))
    double extrapolated;  // lim_{s->1} (E*(s) - pi/(s-1))
    double error;         // Richardson error estimate of the second value
};
KroneckerConstant kronecker_constant(const TauPoint& tau, const Precision& prec = {});

/// Richardson limit of (s - 1) E*(s, tau) along s = 1 + 10^{-k}.
Extrapolated<double> residue_at_one(const TauPoint& tau, const Precision& prec = {});

// ---- functional equations ----------------------------------------------

/// E~(s) = (1/2) pi^{-s} Gamma(s) E*(s, tau), finite for s != 0, 1.
Complex completed_eisenstein(EvalPoint s, const TauPoint& tau, const Precision& prec = {});

/// |pi^{1-2s} Gamma(s) E*(s) - Gamma(1-s) E*(1-s)|.
double functional_equation_residual(EvalPoint s, const TauPoint& tau, const Precision& prec = {});
/// Same with Q in place of E*.
double remainder_fe_residual(EvalPoint s, const TauPoint& tau, const Precision& prec = {});

// ---- special values -----------------------------------------------------

struct SumVersusClosed {
    double sum;
    double closed_form;
};

/// sum sigma_1(n) cos(2 pi n tau1) K_{1/2}(2 pi n tau2) n^{-1/2} against
/// -(tau2^{-1/2}/2) log|eta| - tau2^{1/2} pi / 24.
SumVersusClosed nan_yue_williams_sum(const TauPoint& tau, const Precision& prec = {});

/// Q(1, tau) as the Bessel sum sum sigma_{-1}(n) cos(2 pi n tau1) K_{-1/2}(2 pi n tau2) n^{1/2}
/// against the Lambert-type closed form.
SumVersusClosed lambert_q1(const TauPoint& tau, const Precision& prec = {});

struct MellinRemainder {
    Complex integral_form;  // 4 sin(pi s)/pi sum_n int u^{s-1} h_n(u) du
    Complex q_dual;         // Q(1 - s, i)
    Complex inner_sum;      // sum_n int u^{s-1} h_n(u) du
    Complex inner_sum_predicted;  // pi^{1-2s} Gamma(s)^2 Q(s, i) / 4
};
/// Mellin form of the remainder at tau = i, 0 < Re s < 1.
MellinRemainder mellin_remainder_tau_i(EvalPoint s, const Precision& prec = {});

/// int_0^inf u^{-s} (u + 2x)^{-s} du against x^{1-2s} Gamma(1-s) Gamma(s-1/2) / (2 sqrt pi),
/// 1/2 < Re s < 1.
struct GammaIntegral {
    Complex quadrature;
    Complex closed_form;
};
GammaIntegral gamma_integral_check(EvalPoint s, double x, const Precision& prec = {});

// ---- heat kernel --------------------------------------------------------

/// K(x, tau) = sum_{(m,n)} exp(-pi x |m + n tau|^2 / tau2).
double heat_kernel(double x, const TauPoint& tau, const Precision& prec = {});

/// |K(x) - K(1/x)/x|.
double jacobi_inversion_residual(double x, const TauPoint& tau, const Precision& prec = {});

/// (1/2) int_0^inf (K(t) - 1) t^{s-1} dt, Re s > 1.
Complex theta_mellin_integral(EvalPoint s, const TauPoint& tau, const Precision& prec = {});

struct ThetaMellin {
    std::optional<double> mellin;  // |E~(s) - Mellin integral|, only for Re s > 1
    double symmetry;               // |E~(s) - E~(1-s)|
    double value() const { return mellin ? std::max(*mellin, symmetry) : symmetry; }
};
/// E~(s) = (1/2) pi^{-s} Gamma(s) E*(s, tau).
ThetaMellin theta_mellin_check(EvalPoint s, const TauPoint& tau, const Precision& prec = {});

}  // namespace tzeta::torus
