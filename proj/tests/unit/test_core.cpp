#include <atomic>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "tzeta/core/complex.hpp"
#include "tzeta/core/errors.hpp"
#include "tzeta/core/eval_result.hpp"
#include "tzeta/core/parallel.hpp"
#include "tzeta/core/precision.hpp"
#include "tzeta/core/quadrature.hpp"
#include "tzeta/core/richardson.hpp"
#include "tzeta/core/series.hpp"

using namespace tzeta;

TEST(Precision, RejectsNonPositiveFields) {
    Precision p;
    EXPECT_NO_THROW(p.validate());
    p.quad_rel_tol = 0.0;
    EXPECT_THROW(p.validate(), DomainError);
    p = Precision{};
    p.n_max = -1;
    EXPECT_THROW(p.validate(), DomainError);
    p = Precision{};
    p.diff_step = -1e-5;
    EXPECT_THROW(p.validate(), DomainError);
}

TEST(Complex, SinPiExactAtIntegers) {
    for (int k = -6; k <= 6; ++k) {
        EXPECT_EQ(sin_pi(static_cast<double>(k)), 0.0);
        EXPECT_EQ(cos_pi(k + 0.5), 0.0);
    }
    EXPECT_NEAR(sin_pi(0.25), std::sqrt(0.5), 2e-16);
    const Complex z(0.3, 0.7);
    EXPECT_NEAR(std::abs(sin_pi(z) - std::sin(kPi * z)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(cos_pi(z) - std::cos(kPi * z)), 0.0, 1e-14);
}

TEST(Complex, RealIntegerDetection) {
    long long k = 0;
    EXPECT_TRUE(is_real_integer(Complex(-3.0), &k));
    EXPECT_EQ(k, -3);
    EXPECT_FALSE(is_real_integer(Complex(-3.0, 1e-300)));
    EXPECT_FALSE(is_real_integer(Complex(0.5)));
}

TEST(Method, ParseAndPrint) {
    EXPECT_EQ(parse_method("direct"), Method::direct);
    EXPECT_EQ(parse_method("cs"), Method::chowla_selberg);
    EXPECT_EQ(parse_method("chowla_selberg"), Method::chowla_selberg);
    EXPECT_EQ(parse_method("contour"), Method::contour);
    EXPECT_EQ(to_string(Method::chowla_selberg), "chowla_selberg");
    EXPECT_THROW(parse_method("bogus"), ParseError);
}

TEST(Series, GeometricSumStopsWithTailBound) {
    SeriesAccumulator acc(1e-14, 10'000);
    double term = 1.0;
    while (!acc.add(term, term)) term *= 0.5;
    EXPECT_NEAR(acc.sum().real(), 2.0, 3e-14);
    EXPECT_FALSE(acc.capped());
    EXPECT_LT(acc.terms(), 60);
}

TEST(Series, VanishingTermsDoNotStopEarly) {
    // cos(pi n / 2) kills every odd term; the envelope keeps the series going.
    SeriesAccumulator acc(1e-14, 10'000);
    for (int n = 0;; ++n) {
        const double env = std::pow(0.9, n);
        if (acc.add(cos_pi(0.5 * n) * env, env)) break;
    }
    // sum_k (-1)^k 0.81^k = 1 / 1.81
    EXPECT_NEAR(acc.sum().real(), 1.0 / 1.81, 1e-13);
}

TEST(Series, CapIsReported) {
    SeriesAccumulator acc(1e-14, 10);
    bool done = false;
    for (int n = 1; !done; ++n) done = acc.add(1.0 / n, 1.0 / n);
    EXPECT_TRUE(acc.capped());
    EXPECT_EQ(acc.terms(), 10);
}

TEST(Richardson, RemovesEvenPowers) {
    auto f = [](double h) { return 1.0 + 3.0 * h * h - 2.0 * std::pow(h, 4); };
    std::vector<double> samples;
    for (int k = 0; k < 3; ++k) samples.push_back(f(0.1 * std::ldexp(1.0, -k)));
    const auto r = richardson(samples, 2.0, 2, 2);
    EXPECT_NEAR(r.value, 1.0, 1e-15);
}

TEST(Quadrature, SmoothIntegrals) {
    const auto r = quad::integrate([](double x) { return std::sin(x); }, 0.0, kPi);
    EXPECT_NEAR(r.value, 2.0, 1e-14);
    EXPECT_TRUE(r.converged);
    const auto c = quad::integrate([](double x) { return std::exp(Complex(0.0, x)); }, 0.0, kPi / 2);
    EXPECT_NEAR(std::abs(c.value - Complex(1.0, 1.0)), 0.0, 1e-14);
}

TEST(Quadrature, AlgebraicLeftEndpoint) {
    // int_0^1 u^{-1/2} e^{-u} du = sqrt(pi) erf(1)
    const auto r = quad::integrate_algebraic_left([](double u) { return std::exp(-u); }, -0.5, 1.0);
    EXPECT_NEAR(r.value.real(), std::sqrt(kPi) * std::erf(1.0), 1e-13);
    // int_0^2 u^{alpha} du = 2^{alpha+1}/(alpha+1) for complex alpha
    const Complex alpha(-0.7, 3.0);
    const auto p = quad::integrate_algebraic_left([](double) { return 1.0; }, alpha, 2.0);
    EXPECT_NEAR(std::abs(p.value - std::pow(Complex(2.0), alpha + 1.0) / (alpha + 1.0)), 0.0, 1e-13);
}

TEST(Parallel, EveryIndexOnceAndExceptionsPropagate) {
    set_thread_count(4);
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; });
    for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
    EXPECT_THROW(parallel_for(50, [](std::size_t i) {
                     if (i == 17) throw DomainError("boom");
                 }),
                 DomainError);
    // nested calls run inline
    std::atomic<int> inner{0};
    parallel_for(4, [&](std::size_t) { parallel_for(8, [&](std::size_t) { inner++; }); });
    EXPECT_EQ(inner.load(), 32);
    set_thread_count(0);
}

TEST(Parallel, ThreadCountOverride) {
    set_thread_count(3);
    EXPECT_EQ(thread_count(), 3);
    set_thread_count(0);
    EXPECT_GE(thread_count(), 1);
}
