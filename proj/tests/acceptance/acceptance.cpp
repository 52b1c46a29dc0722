// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tzeta/core/errors.hpp"
#include "tzeta/opdet/operator.hpp"
#include "tzeta/special/special.hpp"
#include "tzeta/torus/torus_zeta.hpp"

using namespace tzeta;
using namespace tzeta::torus;

namespace {

struct Criterion {
    bool pass = true;
    std::ostringstream detail;

    void check(bool ok, const std::string& what, double value) {
        if (!ok) {
            pass = false;
            detail << " [" << what << " = " << value << "]";
        }
    }
};

int failures = 0;

void report(int n, const char* name, Criterion& c, const std::string& summary) {
    if (!c.pass) ++failures;
    std::printf("%s %2d %s: %s%s\n", c.pass ? "PASS" : "FAIL", n, name, summary.c_str(),
                c.detail.str().c_str());
}

std::string fmt(const char* f, double v) {
    char buf[96];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

template <class F>
void guarded(Criterion& c, F&& body) {
    try {
        body();
    } catch (const Error& e) {
        c.check(false, std::string(e.kind()) + ": " + e.what(), 0.0);
    }
}

std::string capture(const std::string& cmd, int* status) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        *status = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    *status = pclose(p);
    return out;
}

const TauPoint kI(0.0, 1.0);
constexpr double kPublished = 0.000936341;

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "tzeta";

    {
        Criterion c;
        double value = 0.0, ms = 0.0;
        guarded(c, [&] {
            const auto t0 = std::chrono::steady_clock::now();
            const auto r = nan_yue_williams_sum(kI);
            ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            value = r.sum;
            c.check(std::abs(r.sum - kPublished) <= 5e-9, "|sum - 0.000936341|", std::abs(r.sum - kPublished));
            c.check(ms < 10.0, "runtime_ms", ms);
        });
        report(1, "Nan-Yue-Williams constant", c, fmt("sum(i) = %.12f", value) + fmt(", %.3f ms", ms));
    }

    {
        Criterion c;
        double value = 0.0, diff = 0.0;
        guarded(c, [&] {
            const auto r = lambert_q1(kI);
            value = r.sum;
            double direct = 0.0;
            for (int n = 60; n >= 1; --n) direct += 0.5 / (n * std::expm1(kTwoPi * n));
            diff = std::abs(r.sum - direct);
            c.check(std::abs(r.sum - kPublished) <= 5e-9, "|Q1 - 0.000936341|", std::abs(r.sum - kPublished));
            c.check(diff <= 1e-12, "|Q1 - lambert sum|", diff);
        });
        report(2, "Lambert value", c, fmt("Q1(i) = %.12f", value) + fmt(", vs sum %.1e", diff));
    }

    {
        Criterion c;
        double worst_num = 0.0, worst_closed = 0.0;
        guarded(c, [&] {
            for (const TauPoint& tau : {kI, TauPoint(0.5, 0.866), TauPoint(0.3, 2.0)}) {
                const double det = determinant_torus(tau);
                const double num = std::exp(-zeta_laplacian_deriv0_numeric(tau).value);
                const double closed = std::exp(-zeta_laplacian_deriv0(tau));
                const double rn = std::abs(num - det) / det;
                const double rc = std::abs(closed - det) / det;
                worst_num = std::max(worst_num, rn);
                worst_closed = std::max(worst_closed, rc);
                c.check(rn <= 1e-6, "numeric rel", rn);
                c.check(rc <= 1e-12, "closed rel", rc);
            }
        });
        report(3, "Determinant identity", c,
               fmt("numeric rel %.2e", worst_num) + fmt(", closed rel %.2e", worst_closed));
    }

    {
        Criterion c;
        double worst_direct = 0.0, worst_contour = 0.0;
        guarded(c, [&] {
            for (const TauPoint& tau : {kI, TauPoint(0.5, 0.866), TauPoint(0.2, 1.7)}) {
                for (const Complex s : {Complex(2.0), Complex(3.0), Complex(2.5, 1.0)}) {
                    const Complex cs = eisenstein_cs(s, tau).value;
                    const double r = std::abs(eisenstein_direct(s, tau).value - cs) / std::abs(cs);
                    worst_direct = std::max(worst_direct, r);
                    c.check(r <= 1e-9, "direct vs cs rel", r);
                }
                for (const double re : {-1.5, -0.5, 0.3, 0.7}) {
                    for (const double im : {0.0, 0.5, -0.5}) {
                        const Complex s(re, im);
                        const double d = std::abs(eisenstein_contour(s, tau).value - eisenstein_cs(s, tau).value);
                        worst_contour = std::max(worst_contour, d);
                        c.check(d <= 1e-8, "contour vs cs abs", d);
                    }
                }
            }
        });
        report(4, "Three-representation agreement", c,
               fmt("direct/cs rel %.2e", worst_direct) + fmt(", contour/cs abs %.2e", worst_contour));
    }

    {
        Criterion c;
        double worst_res = 0.0, worst_zero = 0.0;
        guarded(c, [&] {
            for (const TauPoint& tau : {kI, TauPoint(0.5, 0.866), TauPoint(0.2, 1.3)}) {
                const auto r = residue_at_one(tau);
                const double d = std::abs(r.value - kPi);
                worst_res = std::max(worst_res, d);
                c.check(d <= 1e-7, "|residue - pi|", d);
                c.check(r.error <= 1e-7, "richardson error", r.error);
                const double z = std::abs(eisenstein_cs(0.0, tau).value - Complex(-1.0));
                worst_zero = std::max(worst_zero, z);
                c.check(z <= 1e-10, "|E*(0) + 1|", z);
            }
        });
        report(5, "Pole and residue", c, fmt("|res - pi| %.2e", worst_res) + fmt(", |E*(0)+1| %.2e", worst_zero));
    }

    {
        Criterion c;
        double worst = 0.0;
        guarded(c, [&] {
            for (const TauPoint& tau : {kI, TauPoint(0.2, 1.3)}) {
                const auto k = kronecker_constant(tau);
                const double d = std::abs(k.closed_form - k.extrapolated);
                worst = std::max(worst, d);
                c.check(d <= 1e-7, "closed - extrapolated", d);
            }
        });
        report(6, "Kronecker limit formula", c, fmt("max diff %.2e", worst));
    }

    {
        Criterion c;
        double worst_fe = 0.0, worst_jac = 0.0;
        guarded(c, [&] {
            auto fe = [&](double r, const char* what, double tol) {
                worst_fe = std::max(worst_fe, r);
                c.check(r <= tol, what, r);
            };
            fe(functional_equation_residual(0.3, kI), "E* FE s=0.3", 1e-9);
            fe(functional_equation_residual(0.5, kI), "E* FE s=0.5", 1e-9);
            fe(functional_equation_residual(Complex(2.0, 0.5), TauPoint(0.4, 0.7)), "E* FE s=2+0.5i", 1e-9);
            fe(remainder_fe_residual(0.3, kI), "Q FE s=0.3", 1e-9);
            fe(remainder_fe_residual(0.5, kI), "Q FE s=0.5", 1e-9);
            fe(remainder_fe_residual(-0.7, TauPoint(0.2, 1.5)), "Q FE s=-0.7", 1e-9);
            fe(opdet::zeta_p_functional_equation(3.0), "zeta_P FE u=3", 1e-10);
            fe(opdet::zeta_p_functional_equation(0.5), "zeta_P FE u=0.5", 1e-9);
            for (const double x : {0.5, 2.0, 5.0}) {
                for (const TauPoint& tau : {kI, TauPoint(0.3, 1.4)}) {
                    const double r = jacobi_inversion_residual(x, tau);
                    worst_jac = std::max(worst_jac, r);
                    c.check(r <= 1e-12, "jacobi", r);
                }
            }
        });
        report(7, "Functional equations", c, fmt("max FE residual %.2e", worst_fe) + fmt(", jacobi %.2e", worst_jac));
    }

    {
        Criterion c;
        std::string summary;
        guarded(c, [&] {
            const opdet::OperatorSpec free([](double) { return 0.0; }, "0");
            const opdet::OperatorSpec four([](double) { return 4.0; }, "4");
            const double d0 = std::exp(opdet::log_det(free));
            const double d4 = std::exp(opdet::log_det(four));
            const double z0 = opdet::zeta_operator(free, 0.0).value.real();
            const double zm1 = opdet::zeta_operator(free, -1.0).value.real();
            c.check(std::abs(d0 - 2.0) <= 1e-8, "|det V=0 - 2|", std::abs(d0 - 2.0));
            c.check(std::abs(d4 - std::sinh(2.0)) <= 1e-8, "|det V=4 - sinh 2|", std::abs(d4 - std::sinh(2.0)));
            c.check(std::abs(z0 + 0.5) <= 1e-8, "|zeta(0) + 1/2|", std::abs(z0 + 0.5));
            c.check(std::abs(zm1) <= 1e-8, "|zeta(-1)|", std::abs(zm1));
            summary = fmt("det0 %.12f", d0) + fmt(", det4 %.12f", d4) + fmt(", zeta(0) %.12f", z0) +
                      fmt(", zeta(-1) %.1e", zm1);
        });
        report(8, "Operator engine", c, summary);
    }

    {
        Criterion c;
        double worst_gi = 0.0, worst_k = 0.0, worst_g = 0.0, worst_z = 0.0;
        guarded(c, [&] {
            for (const double s : {0.6, 0.75, 0.9}) {
                for (const double x : {0.5, 1.0, 3.0}) {
                    const auto g = gamma_integral_check(s, x);
                    const double d = std::abs(g.quadrature - g.closed_form);
                    worst_gi = std::max(worst_gi, d);
                    c.check(d <= 1e-10, "gamma integral", d);
                }
            }
            for (int n = 1; n <= 5; ++n) {
                const double x = kTwoPi * n;
                const double want = std::sqrt(kPi / (2.0 * x)) * std::exp(-x);
                const double r = std::abs(special::bessel_k(0.5, x) - want) / want;
                worst_k = std::max(worst_k, r);
                c.check(r <= 1e-12, "K_1/2 rel", r);
                const double sym = std::abs(special::bessel_k(0.5, x) - special::bessel_k(-0.5, x)) / want;
                c.check(sym <= 1e-12, "K symmetry", sym);
            }
            std::mt19937_64 rng(2024);
            std::uniform_real_distribution<double> u(-20.0, 20.0);
            for (int i = 0; i < 100;) {
                const Complex s(u(rng), u(rng));
                if (std::abs(s.imag()) < 0.05 && std::abs(s.real() - std::round(s.real())) < 0.05) continue;
                ++i;
                const Complex g1 = special::gamma(s + 1.0);
                const double rec = std::abs(g1 - s * special::gamma(s)) / std::abs(g1);
                const double refl = std::abs(special::gamma(s) * special::gamma(1.0 - s) * sin_pi(s) - kPi) / kPi;
                worst_g = std::max({worst_g, rec, refl});
                c.check(rec <= 1e-11, "gamma recurrence", rec);
                c.check(refl <= 1e-10, "gamma reflection", refl);
            }
            for (double x = -4.75; x < 5.0; x += 0.5) {
                for (double y = -4.5; y <= 4.5; y += 1.5) {
                    const Complex s(x, y);
                    const Complex lhs = special::riemann_zeta(s);
                    const Complex rhs = std::pow(Complex(2.0), s) * std::pow(Complex(kPi), s - 1.0) *
                                        sin_pi(0.5 * s) * special::gamma(1.0 - s) * special::riemann_zeta(1.0 - s);
                    const double r = std::abs(lhs - rhs) / std::max(1e-300, std::abs(lhs));
                    worst_z = std::max(worst_z, r);
                    c.check(r <= 1e-10, "zeta FE rel", r);
                }
            }
        });
        report(9, "Special-function oracles", c,
               fmt("gamma-integral %.2e", worst_gi) + fmt(", K_1/2 %.2e", worst_k) + fmt(", Gamma %.2e", worst_g) +
                   fmt(", zeta FE %.2e", worst_z));
    }

    {
        Criterion c;
        const std::string base = "'" + cli + "' identities --format json";
        int s1 = 0, s2 = 0, s3 = 0, s4 = 0;
        const std::string a = capture("TZETA_THREADS=4 " + base, &s1);
        const std::string b = capture("TZETA_THREADS=4 " + base, &s2);
        const std::string t1 = capture("TZETA_THREADS=1 " + base, &s3);
        const std::string t4 = capture("TZETA_THREADS=4 " + base, &s4);
        c.check(!a.empty() && s1 == 0 && s2 == 0 && s3 == 0 && s4 == 0, "identity suite status", s1 | s2 | s3 | s4);
        c.check(a == b, "consecutive runs differ", 1);
        c.check(t1 == t4, "thread counts 1 and 4 differ", 1);
        report(10, "Determinism", c, std::to_string(a.size()) + " bytes, identical across runs and thread counts");
    }

    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
