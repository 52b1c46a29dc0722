#pragma once

#include <cstdint>

#include "tzeta/core/complex.hpp"
#include "tzeta/core/eval_result.hpp"
#include "tzeta/core/precision.hpp"

namespace tzeta::special {

/// Complex Gamma (Lanczos, g = 7). Throws PoleError at 0, -1, -2, ...
Complex gamma(Complex s);

/// 1/Gamma(s), entire; exactly zero at the non-positive integers.
Complex rgamma(Complex s);

/// Riemann zeta continued to C \ {1} (Euler-Maclaurin, reflection for Re s < -1/2).
Complex riemann_zeta(Complex s);

/// K_nu(x) from the integral representation, x > 0.
double bessel_k(double nu, double x, const Precision& prec = {});

/// Complex order through the same quadrature path. K_nu = K_{-nu}.
Complex bessel_k(Complex nu, double x, const Precision& prec = {});

/// sum over positive divisors d of n of d^v.
Complex sigma(Complex v, std::int64_t n);

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

/// Dedekind sum s(h, k) in lowest terms.
Rational dedekind_sum(std::int64_t h, std::int64_t k);

/// sum_{n>=1} n^alpha q^n / (1 - q^n), |q| < 1.
Complex lambert_series(Complex alpha, Complex q, const Precision& prec = {},
                       Diagnostics* diag = nullptr);

}  // namespace tzeta::special
