#pragma once

#include <cstdint>

#include "tzeta/core/complex.hpp"
#include "tzeta/core/eval_result.hpp"
#include "tzeta/core/precision.hpp"

namespace tzeta {

/// tau = tau1 + i tau2 in the upper half-plane.
struct TauPoint {
    double tau1 = 0.0;
    double tau2 = 1.0;

    TauPoint(double re, double im);
    explicit TauPoint(Complex tau) : TauPoint(tau.real(), tau.imag()) {}

    Complex value() const { return {tau1, tau2}; }
};

/// Integer matrix with ad - bc = 1.
struct Sl2zMatrix {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    Sl2zMatrix() = default;
    Sl2zMatrix(std::int64_t a_, std::int64_t b_, std::int64_t c_, std::int64_t d_);

    /// c > 0, or c = 0 and d = 1.
    bool is_normalized() const;
    /// The representative of {M, -M} satisfying is_normalized().
    Sl2zMatrix normalized() const;

    Complex apply(Complex tau) const { return (double(a) * tau + double(b)) / (double(c) * tau + double(d)); }
    TauPoint apply(const TauPoint& tau) const { return TauPoint(apply(tau.value())); }

    Sl2zMatrix operator*(const Sl2zMatrix& o) const;

    static Sl2zMatrix T() { return {1, 1, 0, 1}; }
    static Sl2zMatrix S() { return {0, -1, 1, 0}; }
};

namespace modular {

/// Dedekind eta. Points with tau2 < 0.2 are first moved into the fundamental
/// domain and mapped back with the transformation law.
Complex eta(const TauPoint& tau, const Precision& prec = {}, Diagnostics* diag = nullptr);

/// Multiplier epsilon(a,b,c,d) of the transformation law; m must be normalized.
Complex eta_multiplier(const Sl2zMatrix& m);

/// |eta(m tau) - epsilon(m) (c tau + d)^{1/2} eta(tau)|.
double eta_transform_check(const Sl2zMatrix& m, const TauPoint& tau, const Precision& prec = {});

/// Reduces tau into the standard fundamental domain. Returns the normalized
/// matrix M with M tau = *reduced.
Sl2zMatrix reduce_to_fundamental(const TauPoint& tau, TauPoint* reduced);

}  // namespace modular
}  // namespace tzeta
