#include <cmath>

#include "tzeta/core/errors.hpp"
#include "tzeta/core/quadrature.hpp"
#include "tzeta/special/special.hpp"

namespace tzeta::special {

// K_nu(x) = (1/2) int_0^inf exp(-(x/2)(t + 1/t)) t^{nu-1} dt. Splitting at
// t = 1 and folding (0,1) onto (1,inf) by t -> 1/t, then t = e^u, gives
//   K_nu(x) = e^{-x} int_0^inf exp(-x (cosh u - 1)) cosh(nu u) du,
// even in nu, so Re nu >= 0 is taken without loss.
Complex bessel_k(Complex nu, double x, const Precision& prec) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("bessel_k requires x > 0");
    if (nu.real() < 0.0 || (nu.real() == 0.0 && nu.imag() < 0.0)) nu = -nu;
    const double a = nu.real();
    const double b = nu.imag();

    // Upper limit where the log of the integrand has fallen by 40.
    double u_max = 1.0;
    while (x * (std::cosh(u_max) - 1.0) - a * u_max < 40.0) u_max *= 1.25;

    auto f = [&](double u) {
        const double sh = std::sinh(0.5 * u);
        const double w = std::exp(-2.0 * x * sh * sh);
        return Complex(w * std::cosh(a * u) * std::cos(b * u), w * std::sinh(a * u) * std::sin(b * u));
    };
    quad::Options opt;
    opt.rel_tol = prec.quad_rel_tol;
    opt.abs_tol = 1e-300;
    const auto r = quad::integrate(f, 0.0, u_max, opt);
    return std::exp(-x) * r.value;
}

double bessel_k(double nu, double x, const Precision& prec) {
    return bessel_k(Complex(nu, 0.0), x, prec).real();
}

}  // namespace tzeta::special
