#include <cmath>
#include <string>

#include "dopri.hpp"
#include "tzeta/core/errors.hpp"
#include "tzeta/opdet/operator.hpp"

namespace tzeta::opdet {

OperatorSpec::OperatorSpec(std::function<double(double)> v, std::string name)
    : potential(std::move(v)), label(std::move(name)) {
    if (!potential) throw DomainError("operator potential is empty");
    free_ = true;
    for (int i = 0; i <= 256; ++i) {
        const double val = potential(i / 256.0);
        if (!std::isfinite(val) || std::abs(val) > 1e12) {
            throw DomainError("potential is not bounded on [0, 1]");
        }
        if (val != 0.0) free_ = false;
    }
}

IvpSolution solve_ivp(const OperatorSpec& spec, Complex lambda, const Precision& prec) {
    detail::OdeOptions opt;
    opt.rtol = 0.1 * prec.quad_rel_tol;
    opt.atol = 1e-3 * opt.rtol;
    const auto& v = spec.potential;
    auto rhs = [&](double x, const detail::State<Complex, 2>& y) {
        return detail::State<Complex, 2>{y[1], (v(x) - lambda) * y[0]};
    };
    const auto y = detail::dopri45<Complex, 2>(rhs, 0.0, 1.0, {Complex(0.0), Complex(1.0)}, opt);
    return {lambda, y[0], y[1]};
}

}  // namespace tzeta::opdet
