#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "tzeta/cli/cli.hpp"
#include "tzeta/core/errors.hpp"
#include "tzeta/core/parallel.hpp"
#include "tzeta/modular/eta.hpp"
#include "tzeta/opdet/operator.hpp"
#include "tzeta/special/special.hpp"
#include "tzeta/torus/torus_zeta.hpp"

namespace tzeta::cli {

namespace {

struct Outcome {
    Complex lhs;
    Complex rhs;
    double residual;
};

struct Identity {
    std::string id;
    std::string anchor;
    double tolerance;
    std::function<Outcome(const Precision&)> eval;
};

Outcome absolute(Complex lhs, Complex rhs) { return {lhs, rhs, std::abs(lhs - rhs)}; }
Outcome relative(Complex lhs, Complex rhs) { return {lhs, rhs, std::abs(lhs - rhs) / std::abs(rhs)}; }
Outcome residual_only(double r) { return {r, 0.0, r}; }

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string fmt(Complex z) {
    if (z.imag() == 0.0) return fmt(z.real());
    if (z.real() == 0.0 && std::abs(z.imag()) == 1.0) return z.imag() > 0.0 ? "i" : "-i";
    std::string out = z.real() == 0.0 ? std::string() : fmt(z.real());
    if (!out.empty() && z.imag() >= 0.0) out += '+';
    return out + fmt(z.imag()) + "i";
}

std::string tau_tag(const TauPoint& t) { return "tau=" + fmt(t.value()); }

std::vector<Identity> build_registry() {
    using torus::EvalPoint;
    std::vector<Identity> r;
    auto add = [&](std::string id, std::string anchor, double tol, std::function<Outcome(const Precision&)> f) {
        r.push_back({std::move(id), std::move(anchor), tol, std::move(f)});
    };

    // ---- special functions
    for (int n = 1; n <= 5; ++n) {
        add("special.bessel_half.n=" + std::to_string(n), "K_{1/2}(x) = sqrt(pi/(2x)) e^{-x} at x = 2 pi n", 1e-12,
            [n](const Precision& p) {
                const double x = kTwoPi * n;
                return relative(special::bessel_k(0.5, x, p), std::sqrt(kPi / (2.0 * x)) * std::exp(-x));
            });
    }
    for (Complex s : {Complex(-3.5, 1.0), Complex(0.3, 4.0), Complex(2.5, -2.0)}) {
        add("special.zeta_reflection.s=" + fmt(s),
            "zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)", 1e-10, [s](const Precision&) {
                const Complex rhs = std::pow(Complex(2.0), s) * std::pow(Complex(kPi), s - 1.0) * sin_pi(0.5 * s) *
                                    special::gamma(1.0 - s) * special::riemann_zeta(1.0 - s);
                return relative(special::riemann_zeta(s), rhs);
            });
    }
    for (Complex s : {Complex(0.3, 0.7), Complex(-2.5, 1.5)}) {
        add("special.gamma_reflection.s=" + fmt(s), "Gamma(s) Gamma(1-s) = pi / sin(pi s)", 1e-12,
            [s](const Precision&) { return relative(special::gamma(s) * special::gamma(1.0 - s), kPi / sin_pi(s)); });
    }

    // ---- eta
    add("eta.t_transform.tau=0.3+1.2i", "eta(tau+1) = e^{i pi/12} eta(tau)", 1e-10, [](const Precision& p) {
        const TauPoint t(0.3, 1.2);
        return absolute(modular::eta(TauPoint(1.3, 1.2), p), std::exp(Complex(0.0, kPi / 12.0)) * modular::eta(t, p));
    });
    add("eta.s_transform.tau=0.5+0.8i", "eta(-1/tau) = sqrt(-i tau) eta(tau)", 1e-10, [](const Precision& p) {
        const TauPoint t(0.5, 0.8);
        return absolute(modular::eta(TauPoint(-1.0 / t.value()), p),
                        std::sqrt(Complex(0.0, -1.0) * t.value()) * modular::eta(t, p));
    });
    add("eta.conjugation.tau=0.37+0.91i", "eta(-conj tau) = conj eta(tau)", 1e-12, [](const Precision& p) {
        return absolute(modular::eta(TauPoint(-0.37, 0.91), p), std::conj(modular::eta(TauPoint(0.37, 0.91), p)));
    });
    add("eta.sl2z.m=(2,1,1,1).tau=0.1+0.9i", "eta(m tau) = epsilon(m) (c tau + d)^{1/2} eta(tau)", 1e-10,
        [](const Precision& p) {
            return residual_only(modular::eta_transform_check(Sl2zMatrix(2, 1, 1, 1), TauPoint(0.1, 0.9), p));
        });
    add("eta.sl2z.m=(3,-2,5,-3).tau=-0.2+0.7i", "eta(m tau) = epsilon(m) (c tau + d)^{1/2} eta(tau)", 1e-10,
        [](const Precision& p) {
            return residual_only(modular::eta_transform_check(Sl2zMatrix(3, -2, 5, -3), TauPoint(-0.2, 0.7), p));
        });

    // ---- E*(s, tau) by three representations
    const std::vector<TauPoint> grid_taus = {TauPoint(0.0, 1.0), TauPoint(0.5, 0.866), TauPoint(0.2, 1.7)};
    for (const auto& t : grid_taus) {
        for (Complex s : {Complex(2.0), Complex(3.0), Complex(2.5, 1.0)}) {
            add("eisenstein.direct_vs_cs.s=" + fmt(s) + "." + tau_tag(t), "lattice sum = Chowla-Selberg series",
                1e-9, [s, t](const Precision& p) {
                    return relative(torus::eisenstein_direct(s, t, p).value, torus::eisenstein_cs(s, t, p).value);
                });
        }
        for (double re : {-1.5, -0.5, 0.3, 0.7}) {
            for (double im : {-0.5, 0.0, 0.5}) {
                const Complex s(re, im);
                add("eisenstein.contour_vs_cs.s=" + fmt(s) + "." + tau_tag(t), "contour form = Chowla-Selberg series",
                    1e-8, [s, t](const Precision& p) {
                        return absolute(torus::eisenstein_contour(s, t, p).value, torus::eisenstein_cs(s, t, p).value);
                    });
            }
        }
        add("eisenstein.at_zero." + tau_tag(t), "E*(0, tau) = -1", 1e-10,
            [t](const Precision& p) { return absolute(torus::eisenstein_cs(0.0, t, p).value, -1.0); });
    }
    add("eisenstein.residue.tau=i", "(s - 1) E*(s, tau) -> pi", 1e-7,
        [](const Precision& p) { return absolute(torus::residue_at_one(TauPoint(0.0, 1.0), p).value, kPi); });
    add("eisenstein.residue.tau=0.2+1.3i", "(s - 1) E*(s, tau) -> pi", 1e-7,
        [](const Precision& p) { return absolute(torus::residue_at_one(TauPoint(0.2, 1.3), p).value, kPi); });

    // ---- remainder
    add("remainder.integral_vs_bessel.s=0.3.tau=0.25+1.1i", "contour remainder = Bessel remainder", 1e-8,
        [](const Precision& p) {
            const TauPoint t(0.25, 1.1);
            return absolute(torus::remainder_integral(0.3, t, p), torus::remainder_bessel(0.3, t, p));
        });
    add("remainder.integral_vs_bessel.s=-0.5.tau=i", "contour remainder = Bessel remainder", 1e-8,
        [](const Precision& p) {
            const TauPoint t(0.0, 1.0);
            return absolute(torus::remainder_integral(-0.5, t, p), torus::remainder_bessel(-0.5, t, p));
        });
    add("remainder.divisor_pairing.s=0.7.tau=0.2+1.3i", "double Bessel sum = divisor-function sum", 1e-10,
        [](const Precision& p) {
            const auto d = torus::remainder_divisor_pairing(0.7, TauPoint(0.2, 1.3), p);
            return absolute(d.double_sum, d.divisor_sum);
        });
    for (double s : {0.3, 0.5}) {
        add("remainder.mellin_tau_i.s=" + fmt(s), "4 sin(pi s)/pi sum_n int u^{s-1} h_n(u) du = Q(1-s, i)", 1e-8,
            [s](const Precision& p) {
                const auto m = torus::mellin_remainder_tau_i(s, p);
                return absolute(m.integral_form, m.q_dual);
            });
    }

    // ---- functional equations
    add("fe.eisenstein.s=0.3.tau=i", "pi^{1-2s} Gamma(s) E*(s) = Gamma(1-s) E*(1-s)", 1e-9,
        [](const Precision& p) { return residual_only(torus::functional_equation_residual(0.3, TauPoint(0.0, 1.0), p)); });
    add("fe.eisenstein.s=2+0.5i.tau=0.4+0.7i", "pi^{1-2s} Gamma(s) E*(s) = Gamma(1-s) E*(1-s)", 1e-9,
        [](const Precision& p) {
            return residual_only(torus::functional_equation_residual(Complex(2.0, 0.5), TauPoint(0.4, 0.7), p));
        });
    add("fe.eisenstein.s=0.5.tau=i", "pi^{1-2s} Gamma(s) E*(s) = Gamma(1-s) E*(1-s)", 1e-9,
        [](const Precision& p) { return residual_only(torus::functional_equation_residual(0.5, TauPoint(0.0, 1.0), p)); });
    add("fe.remainder.s=0.3.tau=i", "pi^{1-2s} Gamma(s) Q(s) = Gamma(1-s) Q(1-s)", 1e-9,
        [](const Precision& p) { return residual_only(torus::remainder_fe_residual(0.3, TauPoint(0.0, 1.0), p)); });
    add("fe.remainder.s=-0.7.tau=0.2+1.5i", "pi^{1-2s} Gamma(s) Q(s) = Gamma(1-s) Q(1-s)", 1e-9,
        [](const Precision& p) { return residual_only(torus::remainder_fe_residual(-0.7, TauPoint(0.2, 1.5), p)); });
    add("fe.remainder.s=0.5.tau=i", "pi^{1-2s} Gamma(s) Q(s) = Gamma(1-s) Q(1-s)", 1e-9,
        [](const Precision& p) { return residual_only(torus::remainder_fe_residual(0.5, TauPoint(0.0, 1.0), p)); });
    for (Complex u : {Complex(3.0), Complex(0.5), Complex(2.5), Complex(-1.5, 2.0)}) {
        add("fe.zeta_p.u=" + fmt(u), "zeta_P(u/2) = 2^u pi^{u-1} Gamma(1-u) sin(pi u/2) zeta_P((1-u)/2)",
            u == Complex(3.0) ? 1e-10 : 1e-9,
            [u](const Precision& p) { return residual_only(opdet::zeta_p_functional_equation(u, p)); });
    }
    add("fe.theta_mellin.s=2.tau=i", "(1/2) pi^{-s} Gamma(s) E*(s) = (1/2) int_0^inf (K(t) - 1) t^{s-1} dt", 1e-8,
        [](const Precision& p) { return residual_only(torus::theta_mellin_check(2.0, TauPoint(0.0, 1.0), p).value()); });
    add("fe.theta_mellin.s=2.5+1i.tau=0.3+0.8i", "E~(s, tau) = E~(1-s, tau)", 1e-9, [](const Precision& p) {
        return residual_only(torus::theta_mellin_check(Complex(2.5, 1.0), TauPoint(0.3, 0.8), p).value());
    });

    // ---- heat kernel
    for (const auto& t : {TauPoint(0.0, 1.0), TauPoint(0.3, 1.4)}) {
        for (double x : {0.5, 2.0, 5.0}) {
            add("heat.jacobi_inversion.x=" + fmt(x) + "." + tau_tag(t), "K(x, tau) = x^{-1} K(1/x, tau)", 1e-12,
                [x, t](const Precision& p) {
                    return absolute(torus::heat_kernel(x, t, p), torus::heat_kernel(1.0 / x, t, p) / x);
                });
        }
    }

    // ---- determinant and limit formula
    for (const auto& t : {TauPoint(0.0, 1.0), TauPoint(0.5, 0.866), TauPoint(0.3, 2.0)}) {
        add("determinant.numeric." + tau_tag(t), "exp(-zeta'(0)) = tau2^2 |eta(tau)|^4", 1e-6,
            [t](const Precision& p) {
                return relative(std::exp(-torus::zeta_laplacian_deriv0_numeric(t, p).value),
                                torus::determinant_torus(t, p));
            });
        add("determinant.closed_form." + tau_tag(t), "exp(-zeta'(0)) = tau2^2 |eta(tau)|^4", 1e-12,
            [t](const Precision& p) {
                return relative(std::exp(-torus::zeta_laplacian_deriv0(t, p)), torus::determinant_torus(t, p));
            });
    }
    add("determinant.modular_s.tau=0.3+1.4i", "det(tau) / tau2 is invariant under tau -> -1/tau", 1e-12,
        [](const Precision& p) {
            const TauPoint t(0.3, 1.4);
            const TauPoint st(-1.0 / t.value());
            return relative(torus::determinant_torus(st, p) / st.tau2, torus::determinant_torus(t, p) / t.tau2);
        });
    add("determinant.modular_t.tau=0.3+1.4i", "det(tau + 1) = det(tau)", 1e-12, [](const Precision& p) {
        return relative(torus::determinant_torus(TauPoint(1.3, 1.4), p), torus::determinant_torus(TauPoint(0.3, 1.4), p));
    });
    for (const auto& t : {TauPoint(0.0, 1.0), TauPoint(0.2, 1.3)}) {
        add("kronecker." + tau_tag(t), "lim (E*(s) - pi/(s-1)) = 2 pi (gamma - log 2 - log(tau2^{1/2} |eta|^2))", 1e-7,
            [t](const Precision& p) {
                const auto k = torus::kronecker_constant(t, p);
                return absolute(k.extrapolated, k.closed_form);
            });
    }

    // ---- special values
    add("special_value.nan_yue_williams.tau=i", "sum sigma_1(n) K_{1/2}(2 pi n) n^{-1/2} = -(1/2) log eta(i) - pi/24",
        1e-10, [](const Precision& p) {
            const auto v = torus::nan_yue_williams_sum(TauPoint(0.0, 1.0), p);
            return absolute(v.sum, v.closed_form);
        });
    add("special_value.nan_yue_williams.published", "sum at tau = i ~ 0.000936341", 5e-9, [](const Precision& p) {
        return absolute(torus::nan_yue_williams_sum(TauPoint(0.0, 1.0), p).sum, 0.000936341);
    });
    add("special_value.nan_yue_williams.tau=0.3+1.2i", "Bessel sum = eta closed form", 1e-10, [](const Precision& p) {
        const auto v = torus::nan_yue_williams_sum(TauPoint(0.3, 1.2), p);
        return absolute(v.sum, v.closed_form);
    });
    add("special_value.lambert_q1.tau=i", "Q(1, i) = (1/2) sum (1/n) / (e^{2 pi n} - 1)", 1e-12,
        [](const Precision& p) {
            double sum = 0.0;
            for (int n = 60; n >= 1; --n) sum += 1.0 / (n * std::expm1(kTwoPi * n));
            return absolute(torus::lambert_q1(TauPoint(0.0, 1.0), p).sum, 0.5 * sum);
        });
    add("special_value.lambert_q1.published", "Q(1, i) ~ 0.000936341", 5e-9, [](const Precision& p) {
        return absolute(torus::lambert_q1(TauPoint(0.0, 1.0), p).closed_form, 0.000936341);
    });
    add("special_value.lambert_q1.tau=0.2+0.9i", "Bessel sum = Lambert closed form", 1e-10, [](const Precision& p) {
        const auto v = torus::lambert_q1(TauPoint(0.2, 0.9), p);
        return absolute(v.sum, v.closed_form);
    });
    for (double s : {0.6, 0.75, 0.9}) {
        for (double x : {0.5, 1.0, 3.0}) {
            add("special_value.gamma_integral.s=" + fmt(s) + ".x=" + fmt(x),
                "int_0^inf u^{-s} (u + 2x)^{-s} du = x^{1-2s} Gamma(1-s) Gamma(s-1/2) / (2 sqrt pi)", 1e-10,
                [s, x](const Precision& p) {
                    const auto g = torus::gamma_integral_check(s, x, p);
                    return absolute(g.quadrature, g.closed_form);
                });
        }
    }

    // ---- operator determinants and zeta_P
    const opdet::OperatorSpec free([](double) { return 0.0; }, "0");
    add("operator.det.V=0", "det(-d^2/dx^2) = 2", 1e-8,
        [free](const Precision& p) { return absolute(std::exp(opdet::log_det(free, p)), 2.0); });
    add("operator.det.V=4", "det(-d^2/dx^2 + 4) = sinh 2", 1e-8, [](const Precision& p) {
        const opdet::OperatorSpec c4([](double) { return 4.0; }, "4");
        return absolute(std::exp(opdet::log_det(c4, p)), std::sinh(2.0));
    });
    add("operator.deriv0.V=x(1-x)", "exp(zeta_O'(0)) = 1 / (2 u_0(1))", 1e-6, [](const Precision& p) {
        const opdet::OperatorSpec v([](double x) { return x * (1.0 - x); }, "x*(1-x)");
        return absolute(std::exp(opdet::zeta_operator_deriv0_numeric(v, p).value), std::exp(-opdet::log_det(v, p)));
    });
    add("operator.asy_deriv0", "zeta_{O,asy}'(0) = -1", 1e-15,
        [](const Precision&) { return absolute(opdet::zeta_operator_asy_deriv(0.0), -1.0); });
    for (double s : {-2.5, -1.5, -1.0, -0.5, 0.0, 0.3, 0.7}) {
        add("operator.zeta_free.s=" + fmt(s), "zeta_O(s) = pi^{-2s} zeta(2s) for V = 0", s == -1.0 ? 1e-10 : 1e-8,
            [free, s](const Precision& p) {
                const Complex rhs = s == 0.0 ? Complex(-0.5) : std::pow(kPi, -2.0 * s) * special::riemann_zeta(2.0 * s);
                return absolute(opdet::zeta_operator(free, s, p).value, rhs);
            });
    }
    for (double a : {1.5, 2.0, 3.0}) {
        add("operator.power_tail.alpha=" + fmt(a), "int_1^inf lambda^{-alpha} d lambda = 1/(alpha - 1)", 1e-12,
            [a](const Precision& p) {
                const auto t = opdet::power_tail_check(a, p);
                return absolute(t.quadrature, t.closed_form);
            });
    }
    for (double s : {-1.5, 0.0, 0.3}) {
        add("zeta_p.contour.s=" + fmt(s), "contour zeta_P(s) = zeta(2s)", 1e-10,
            [s](const Precision& p) { return absolute(opdet::zeta_p_contour(s, p), opdet::zeta_p(s)); });
    }
    for (double u : {2.0, 3.5}) {
        add("zeta_p.mellin_step.u=" + fmt(u), "int_0^inf y^{u-1} / (e^y - 1) dy = Gamma(u) zeta(u)", 1e-10,
            [u](const Precision& p) {
                const auto m = opdet::zeta_p_mellin_step(u, p);
                return relative(m.quadrature, m.closed_form);
            });
    }

    std::sort(r.begin(), r.end(), [](const Identity& a, const Identity& b) { return a.id < b.id; });
    return r;
}

const std::vector<Identity>& registry() {
    static const std::vector<Identity> reg = build_registry();
    return reg;
}

}  // namespace

std::vector<std::string> identity_ids() {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.id);
    return out;
}

std::vector<IdentityEntry> run_identities(const SuiteOptions& opt) {
    std::vector<const Identity*> selected;
    for (const auto& e : registry()) {
        if (opt.filter.empty() || e.id.find(opt.filter) != std::string::npos) selected.push_back(&e);
    }
    std::vector<IdentityEntry> out(selected.size());
    parallel_for(selected.size(), [&](std::size_t i) {
        const Identity& id = *selected[i];
        IdentityEntry& e = out[i];
        e.id = id.id;
        e.anchor = id.anchor;
        e.tolerance = id.tolerance * opt.tol_scale;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            opt.precision.validate();
            const Outcome o = id.eval(opt.precision);
            e.lhs = o.lhs;
            e.rhs = o.rhs;
            e.residual = o.residual;
            // A non-positive tolerance is corrupt and fails every entry.
            e.pass = e.tolerance > 0.0 && o.residual <= e.tolerance;
        } catch (const Error& ex) {
            e.error = std::string(ex.kind()) + ": " + ex.what();
            e.residual = std::numeric_limits<double>::quiet_NaN();
            e.pass = false;
        }
        e.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    });
    return out;
}

}  // namespace tzeta::cli
