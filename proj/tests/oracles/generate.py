"""Reference values for the unit tests, computed with mpmath at 40 digits.

    python3 tests/oracles/generate.py > tests/oracles/oracle_values.hpp
"""
import mpmath as mp

mp.mp.dps = 40


def c(z):
    z = mp.mpc(z)
    return "{%s, %s}" % (mp.nstr(z.real, 20, min_fixed=-mp.inf, max_fixed=mp.inf),
                         mp.nstr(z.imag, 20, min_fixed=-mp.inf, max_fixed=mp.inf))


def r(x):
    return mp.nstr(mp.mpf(x), 20)


def beta(s):
    return mp.dirichlet(s, [0, 1, 0, -1])


def l3(s):
    return mp.dirichlet(s, [0, 1, -1])


def e_star_i(s):
    # sum over Z^2 \ 0 of 1/(m^2+n^2)^s = 4 zeta(s) beta(s)
    return 4 * mp.zeta(s) * beta(s)


def e_star_hex(s):
    # tau = e^{i pi/3}: |m + n tau|^2 = m^2 + mn + n^2
    return (mp.sqrt(3) / 2) ** s * 6 * mp.zeta(s) * l3(s)


def q_from(estar, s, tau2):
    s = mp.mpc(s)
    first = 2 * tau2**s * mp.zeta(2 * s)
    if s.real < 0.5:
        # Gamma(s - 1/2) zeta(2s - 1) = pi^{2s - 3/2} Gamma(1 - s) zeta(2 - 2s)
        gz = mp.pi ** (2 * s - 1.5) * mp.gamma(1 - s) * mp.zeta(2 - 2 * s)
    else:
        gz = mp.gamma(s - 0.5) * mp.zeta(2 * s - 1)
    second = 2 * mp.sqrt(mp.pi) * tau2 ** (1 - s) * gz / mp.gamma(s)
    return estar - first - second


def eta(tau):
    tau = mp.mpc(tau)
    q = mp.exp(2j * mp.pi * tau)
    return mp.exp(1j * mp.pi * tau / 12) * mp.qp(q)


def heat(x, tau):
    tau = mp.mpc(tau)
    t1, t2 = tau.real, tau.imag
    total = mp.mpf(0)
    for n in range(-30, 31):
        for m in range(-30, 31):
            total += mp.exp(-mp.pi * x * abs(m + n * tau) ** 2 / t2)
    return total


def u0_quadratic():
    f = mp.odefun(lambda x, y: [y[1], x * (1 - x) * y[0]], 0, [0, 1])
    return f(1)[0]


def zeta_const(s, c2):
    # sum_n (n^2 pi^2 + c2)^{-s} by the binomial expansion, c2 < pi^2
    return mp.nsum(lambda k: mp.binomial(-s, k) * c2**k * mp.pi ** (-2 * s - 2 * k) * mp.zeta(2 * s + 2 * k),
                   [0, mp.inf])


out = []
out.append("#pragma once")
out.append("")
out.append("// Generated by tests/oracles/generate.py (mpmath, 40 digits). Do not edit.")
out.append("")
out.append("#include <complex>")
out.append("")
out.append("namespace oracle {")
out.append("")
out.append("using C = std::complex<double>;")
out.append("")
out.append("struct ComplexPoint { C arg; C value; };")
out.append("struct RealPoint { double arg; double value; };")
out.append("")

g = [mp.mpc(0.5, 0), mp.mpc(3.7, 0), mp.mpc(-2.5, 0), mp.mpc(0.3, 4.0), mp.mpc(-3.2, 1.1), mp.mpc(12, -7)]
out.append("inline const ComplexPoint kGamma[] = {")
for s in g:
    out.append("    {%s, %s}," % (c(s), c(mp.gamma(s))))
out.append("};")

zs = [mp.mpc(2, 0), mp.mpc(0.5, 0), mp.mpc(0.5, 14.134725), mp.mpc(-3.5, 2), mp.mpc(-10.5, 0), mp.mpc(3, 25),
      mp.mpc(0.7, -0.3), mp.mpc(-0.4, 0)]
out.append("inline const ComplexPoint kZeta[] = {")
for s in zs:
    out.append("    {%s, %s}," % (c(s), c(mp.zeta(s))))
out.append("};")

out.append("struct BesselPoint { C nu; double x; C value; };")
out.append("inline const BesselPoint kBessel[] = {")
for nu, x in [(0, 1), (0.5, 2), (1.2, 0.1), (2.5, 7.3), (0.3, 30), (mp.mpc(0.2, 1.5), 1.7), (mp.mpc(-0.8, 3), 6.0),
              (4, 0.5)]:
    out.append("    {%s, %s, %s}," % (c(nu), r(x), c(mp.besselk(nu, x))))
out.append("};")

out.append("struct TauValue { C tau; C value; };")
out.append("inline const TauValue kEta[] = {")
for tau in [mp.mpc(0, 1), mp.mpc(0.3, 1.2), mp.mpc(0.5, 0.8), mp.mpc(-0.45, 0.21), mp.mpc(0.05, 0.12),
            mp.mpc(0.2, 2.5)]:
    out.append("    {%s, %s}," % (c(tau), c(eta(tau))))
out.append("};")

out.append("struct EisensteinPoint { C s; C value; };")
out.append("// E*(s, i) = 4 zeta(s) beta(s)")
out.append("inline const EisensteinPoint kEisensteinI[] = {")
for s in [mp.mpc(2, 0), mp.mpc(3, 0), mp.mpc(2.5, 1), mp.mpc(0.3, 0), mp.mpc(0.7, 0.5), mp.mpc(-1.5, -0.5),
          mp.mpc(-0.5, 0), mp.mpc(0.5, 0), mp.mpc(1.5, 0), mp.mpc(1.0 + 1e-3, 0)]:
    out.append("    {%s, %s}," % (c(s), c(e_star_i(s))))
out.append("};")
out.append("// tau = e^{i pi/3}: E*(s) = (sqrt3/2)^s 6 zeta(s) L(s, chi_{-3})")
out.append("inline const EisensteinPoint kEisensteinHex[] = {")
for s in [mp.mpc(2, 0), mp.mpc(0.3, 0), mp.mpc(-0.5, 0.5), mp.mpc(2.5, 1)]:
    out.append("    {%s, %s}," % (c(s), c(e_star_hex(s))))
out.append("};")
out.append("// Q(s, i) = E*(s, i) minus the two zeta terms")
out.append("inline const EisensteinPoint kRemainderI[] = {")
for s in [mp.mpc(0.3, 0), mp.mpc(0.5, 0), mp.mpc(0.7, 0), mp.mpc(2, 0), mp.mpc(-0.5, 0), mp.mpc(0.4, 1)]:
    if s == 0.5:
        # finite part of the two zeta terms at s = 1/2: 2 sqrt(tau2) (log tau2 + gamma - log 4 pi)
        v = e_star_i(s) - 2 * (mp.euler - mp.log(4 * mp.pi))
    else:
        v = q_from(e_star_i(s), s, 1)
    out.append("    {%s, %s}," % (c(s), c(v)))
out.append("};")

gam = mp.euler
out.append("inline constexpr double kKroneckerI = %s;" % r(2 * mp.pi * (gam - mp.log(2) - mp.log(abs(eta(1j)) ** 2))))
out.append("inline constexpr double kDetTorusI = %s;" % r(abs(eta(1j)) ** 4))
out.append("inline constexpr double kDetTorus2I = %s;" % r(4 * abs(eta(2j)) ** 4))
out.append("inline constexpr double kNanYueWilliams = %s;" % r(-mp.log(eta(1j).real) / 2 - mp.pi / 24))
out.append("inline constexpr double kHeatI2 = %s;  // K(2, i)" % r(mp.jtheta(3, 0, mp.exp(-2 * mp.pi)) ** 2))
out.append("inline constexpr double kHeat_03_14_07 = %s;  // K(0.7, 0.3+1.4i)" % r(heat(0.7, mp.mpc(0.3, 1.4))))
out.append("inline constexpr double kU0Quadratic = %s;  // u_0(1) for V = x(1-x)" % r(u0_quadratic()))
out.append("// zeta of -d^2/dx^2 + 4 on [0, 1]")
out.append("inline const RealPoint kZetaConst4[] = {")
for s in [-1.9, -1.0, -0.3, 0.3, 0.7]:
    out.append("    {%s, %s}," % (r(s), r(zeta_const(s, 4))))
out.append("};")
out.append("")
out.append("}  // namespace oracle")
print("\n".join(out))
