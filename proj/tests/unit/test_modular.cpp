#include <cmath>

#include <gtest/gtest.h>

#include "oracle_values.hpp"
#include "tzeta/core/errors.hpp"
#include "tzeta/modular/eta.hpp"

using namespace tzeta;
using namespace tzeta::modular;

namespace {

// q^{1/24} prod (1 - q^n) truncated far beyond double precision.
Complex eta_product(Complex tau) {
    const Complex q = std::exp(Complex(0.0, kTwoPi) * tau);
    Complex prod = std::exp(Complex(0.0, kTwoPi / 24.0) * tau);
    Complex qn = q;
    for (int n = 1; n < 4000 && std::abs(qn) > 1e-300; ++n) {
        prod *= 1.0 - qn;
        qn *= q;
    }
    return prod;
}

}  // namespace

TEST(TauPoint, RejectsLowerHalfPlane) {
    EXPECT_THROW(TauPoint(0.0, 0.0), DomainError);
    EXPECT_THROW(TauPoint(0.3, -1.0), DomainError);
    EXPECT_NO_THROW(TauPoint(0.3, 1e-3));
}

TEST(Sl2z, DeterminantAndNormalization) {
    EXPECT_THROW(Sl2zMatrix(1, 1, 1, 1), DomainError);
    const Sl2zMatrix m(-2, 1, -5, 2);
    EXPECT_FALSE(m.is_normalized());
    const auto n = m.normalized();
    EXPECT_TRUE(n.is_normalized());
    EXPECT_EQ(n.c, 5);
    EXPECT_EQ(n.a, 2);
    const auto st = Sl2zMatrix::S() * Sl2zMatrix::S();
    EXPECT_EQ(st.a, -1);
    EXPECT_EQ(st.d, -1);
    EXPECT_THROW(eta_multiplier(Sl2zMatrix(-1, 0, 0, -1)), NormalizationError);
}

TEST(Eta, MatchesOracle) {
    for (const auto& p : oracle::kEta) {
        const Complex v = eta(TauPoint(p.tau));
        EXPECT_LT(std::abs(v - p.value) / std::abs(p.value), 1e-12) << p.tau;
    }
}

TEST(Eta, MatchesTruncatedProduct) {
    for (const Complex tau : {Complex(0.1, 0.9), Complex(-0.4, 1.5), Complex(0.49, 0.3)}) {
        const Complex want = eta_product(tau);
        EXPECT_LT(std::abs(eta(TauPoint(tau)) - want) / std::abs(want), 1e-12) << tau;
    }
}

TEST(Eta, TransformationLaw) {
    const TauPoint tau(0.13, 0.77);
    for (const auto& m : {Sl2zMatrix::T(), Sl2zMatrix::S(), Sl2zMatrix(2, 1, 1, 1), Sl2zMatrix(3, -2, 5, -3),
                          Sl2zMatrix(1, 0, 4, 1), Sl2zMatrix(7, 3, 2, 1)}) {
        EXPECT_LT(eta_transform_check(m, tau), 1e-12) << m.a << m.b << m.c << m.d;
    }
}

TEST(Eta, MultiplierOfTAndS) {
    const Complex eps_t = eta_multiplier(Sl2zMatrix::T());
    EXPECT_LT(std::abs(eps_t - std::exp(Complex(0.0, kPi / 12.0))), 1e-15);
    const Complex eps_s = eta_multiplier(Sl2zMatrix::S().normalized());
    // eta(-1/tau) = sqrt(tau / i) eta(tau) = e^{-i pi/4} tau^{1/2} eta(tau)
    EXPECT_LT(std::abs(eps_s - std::exp(Complex(0.0, -kPi / 4.0))), 1e-15);
}

TEST(Eta, ReductionLandsInFundamentalDomain) {
    for (const Complex tau : {Complex(0.37, 0.05), Complex(-3.2, 0.4), Complex(0.5, 0.9), Complex(10.1, 0.01)}) {
        TauPoint reduced(0.0, 1.0);
        const auto m = reduce_to_fundamental(TauPoint(tau), &reduced);
        EXPECT_LE(std::abs(reduced.tau1), 0.5 + 1e-12);
        EXPECT_GE(std::abs(reduced.value()), 1.0 - 1e-12);
        EXPECT_LT(std::abs(m.apply(tau) - reduced.value()), 1e-9 * std::abs(reduced.value()));
        EXPECT_TRUE(m.is_normalized());
    }
}

TEST(Eta, Conjugation) {
    const Complex tau(0.37, 0.91);
    const Complex a = eta(TauPoint(tau));
    const Complex b = eta(TauPoint(-std::conj(tau)));
    EXPECT_LT(std::abs(a - std::conj(b)), 1e-14);
}
