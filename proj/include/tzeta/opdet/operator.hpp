#pragma once

#include <functional>
#include <string>

#include "tzeta/core/complex.hpp"
#include "tzeta/core/eval_result.hpp"
#include "tzeta/core/precision.hpp"
#include "tzeta/core/richardson.hpp"

namespace tzeta::opdet {

/// O = -d^2/dx^2 + V(x) on [0, 1] with Dirichlet conditions.
struct OperatorSpec {
    std::function<double(double)> potential;
    std::string label;

    OperatorSpec(std::function<double(double)> v, std::string name = {});

    /// True when V vanishes at every sample point.
    bool is_free() const { return free_; }

private:
    bool free_ = false;
};

/// u_lambda with (O - lambda) u = 0, u(0) = 0, u'(0) = 1, evaluated at x = 1.
struct IvpSolution {
    Complex lambda;
    Complex u_at_1;
    Complex du_at_1;
};

IvpSolution solve_ivp(const OperatorSpec& spec, Complex lambda, const Precision& prec = {});

/// zeta_O(s) from the contour on the negative real axis with the large-lambda
/// asymptotics split off; Re s < 1, and Re s > -2 unless V = 0.
EvalResult zeta_operator(const OperatorSpec& spec, Complex s, const Precision& prec = {});

/// (sin(pi s) / (2 pi)) (1/(s - 1/2) - 1/s)
Complex zeta_operator_asy(Complex s);
/// d/ds of zeta_operator_asy.
Complex zeta_operator_asy_deriv(Complex s);

/// log det O = -zeta_O'(0) = log(2 u_0(1)).
double log_det(const OperatorSpec& spec, const Precision& prec = {});

/// Central difference of zeta_operator at s = 0 with one Richardson step.
Extrapolated<double> zeta_operator_deriv0_numeric(const OperatorSpec& spec, const Precision& prec = {});

// ---- P = -d^2/dt^2 on [0, pi], zeta_P(s) = zeta_R(2s) -----------------------

/// zeta_P through the same contour argument with F(-lambda) = sinh(pi sqrt lambda)/sqrt lambda,
/// Re s < 1.
Complex zeta_p_contour(Complex s, const Precision& prec = {});
/// zeta_R(2s).
Complex zeta_p(Complex s);

/// |zeta_P(u/2) - 2^u pi^{u-1} Gamma(1-u) sin(pi u/2) zeta_P((1-u)/2)|.
double zeta_p_functional_equation(Complex u, const Precision& prec = {});

struct MellinStep {
    Complex quadrature;   // int_0^inf y^{u-1} / (e^y - 1) dy
    Complex closed_form;  // Gamma(u) zeta_R(u)
};
/// Re u > 1.
MellinStep zeta_p_mellin_step(Complex u, const Precision& prec = {});

/// int_1^inf lambda^{-alpha} d lambda by quadrature against 1/(alpha - 1), alpha > 1.
struct PowerTail {
    double quadrature;
    double closed_form;
};
PowerTail power_tail_check(double alpha, const Precision& prec = {});

}  // namespace tzeta::opdet
