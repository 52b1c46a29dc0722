#include <cmath>

#include <gtest/gtest.h>

#include "oracle_values.hpp"
#include "tzeta/core/errors.hpp"
#include "tzeta/opdet/operator.hpp"
#include "tzeta/special/special.hpp"

using namespace tzeta;
using namespace tzeta::opdet;

namespace {

const OperatorSpec kFree([](double) { return 0.0; }, "0");
const OperatorSpec kConst4([](double) { return 4.0; }, "4");
const OperatorSpec kQuadratic([](double x) { return x * (1.0 - x); }, "x(1-x)");

}  // namespace

TEST(Ivp, ClosedForms) {
    EXPECT_NEAR(std::abs(solve_ivp(kFree, kPi * kPi).u_at_1), 0.0, 1e-12);
    const double k = std::sqrt(2.5);
    EXPECT_NEAR(solve_ivp(kFree, 2.5).u_at_1.real(), std::sin(k) / k, 1e-12);
    EXPECT_NEAR(solve_ivp(kConst4, 0.0).u_at_1.real(), std::sinh(2.0) / 2.0, 1e-12);
    EXPECT_NEAR(solve_ivp(kQuadratic, 0.0).u_at_1.real(), oracle::kU0Quadratic, 1e-11);
}

TEST(OperatorSpec, DetectsFreePotential) {
    EXPECT_TRUE(kFree.is_free());
    EXPECT_FALSE(kConst4.is_free());
    EXPECT_FALSE(kQuadratic.is_free());
}

TEST(ZetaOperator, FreeMatchesRiemann) {
    for (const double s : {-2.5, -2.0, -1.5, -1.0, -0.5, 0.0, 0.3, 0.7}) {
        const Complex want = std::pow(kPi, -2.0 * s) * special::riemann_zeta(Complex(2.0 * s));
        EXPECT_LT(std::abs(zeta_operator(kFree, s).value - want), 1e-9) << s;
    }
    EXPECT_NEAR(zeta_operator(kFree, 0.0).value.real(), -0.5, 1e-8);
    EXPECT_NEAR(zeta_operator(kFree, -1.0).value.real(), 0.0, 1e-8);
}

TEST(ZetaOperator, ConstantPotentialOracle) {
    for (const auto& p : oracle::kZetaConst4) {
        EXPECT_NEAR(zeta_operator(kConst4, p.arg).value.real(), p.value, 1e-6 * std::max(1.0, std::abs(p.value)))
            << p.arg;
    }
}

TEST(ZetaOperator, DomainErrors) {
    EXPECT_THROW(zeta_operator(kFree, 1.2), DomainError);
    EXPECT_THROW(zeta_operator(kConst4, -2.5), DomainError);
    const OperatorSpec negative([](double) { return -20.0; }, "-20");
    EXPECT_THROW(log_det(negative), SpectrumError);
    const OperatorSpec zero_mode([](double) { return -kPi * kPi; }, "-pi^2");
    EXPECT_THROW(log_det(zero_mode), ZeroModeError);
}

TEST(Determinant, ClosedForms) {
    EXPECT_NEAR(std::exp(log_det(kFree)), 2.0, 1e-8);
    EXPECT_NEAR(std::exp(log_det(kConst4)), std::sinh(2.0), 1e-8);
    EXPECT_NEAR(log_det(kQuadratic), std::log(2.0 * oracle::kU0Quadratic), 1e-10);
}

TEST(Determinant, DerivativeOfZeta) {
    const auto d = zeta_operator_deriv0_numeric(kQuadratic);
    EXPECT_NEAR(-d.value, log_det(kQuadratic), 1e-7);
    const auto f = zeta_operator_deriv0_numeric(kFree);
    EXPECT_NEAR(-f.value, std::log(2.0), 1e-7);
}

TEST(Asymptotics, ValueAndDerivative) {
    EXPECT_NEAR(zeta_operator_asy_deriv(0.0).real(), -1.0, 1e-12);
    const Complex s(0.3, 0.4);
    const double h = 1e-5;
    const Complex fd = (zeta_operator_asy(s + h) - zeta_operator_asy(s - h)) / (2.0 * h);
    EXPECT_LT(std::abs(fd - zeta_operator_asy_deriv(s)), 1e-8);
}

TEST(ZetaP, ContourAndFunctionalEquation) {
    EXPECT_NEAR(zeta_p(0.0).real(), -0.5, 1e-15);
    for (const double s : {-2.0, -1.0}) EXPECT_NEAR(std::abs(zeta_p(s)), 0.0, 1e-15);
    for (const Complex s : {Complex(-1.5), Complex(0.0), Complex(0.3), Complex(0.2, 1.0)}) {
        EXPECT_LT(std::abs(zeta_p_contour(s) - zeta_p(s)), 1e-10) << s;
    }
    for (const Complex u : {Complex(3.0), Complex(0.5), Complex(2.5), Complex(-1.5, 2.0)}) {
        EXPECT_LT(zeta_p_functional_equation(u), 1e-9) << u;
    }
    EXPECT_THROW(zeta_p_functional_equation(1.0), PoleError);
}

TEST(ZetaP, MellinAndPowerTail) {
    const auto m = zeta_p_mellin_step(Complex(2.0));
    EXPECT_NEAR(m.quadrature.real(), kPi * kPi / 6.0, 1e-12);
    EXPECT_LT(std::abs(m.quadrature - m.closed_form), 1e-12);
    const auto p = power_tail_check(2.0);
    EXPECT_NEAR(p.quadrature, 1.0, 1e-12);
    EXPECT_EQ(p.closed_form, 1.0);
}
