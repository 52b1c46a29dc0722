#include "tzeta/modular/eta.hpp"

#include <cmath>
#include <string>

#include "tzeta/core/errors.hpp"
#include "tzeta/special/special.hpp"

namespace tzeta {

TauPoint::TauPoint(double re, double im) : tau1(re), tau2(im) {
    if (!std::isfinite(re) || !std::isfinite(im) || !(im > 0.0)) {
        throw DomainError("tau must lie in the upper half-plane (tau2 > 0)");
    }
}

Sl2zMatrix::Sl2zMatrix(std::int64_t a_, std::int64_t b_, std::int64_t c_, std::int64_t d_)
    : a(a_), b(b_), c(c_), d(d_) {
    if (a * d - b * c != 1) throw DomainError("SL(2,Z) matrix must have ad - bc = 1");
}

bool Sl2zMatrix::is_normalized() const { return c > 0 || (c == 0 && d == 1); }

Sl2zMatrix Sl2zMatrix::normalized() const {
    if (is_normalized()) return *this;
    return {-a, -b, -c, -d};
}

Sl2zMatrix Sl2zMatrix::operator*(const Sl2zMatrix& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

namespace modular {

namespace {

Complex eta_product(Complex tau, const Precision& prec, Diagnostics* diag) {
    const Complex q = std::exp(Complex(0.0, kTwoPi) * tau);
    const double aq = std::abs(q);
    Complex prod = 1.0;
    Complex qn = 1.0;
    double env = 1.0;
    std::int64_t n = 0;
    bool capped = false;
    while (true) {
        ++n;
        qn *= q;
        env *= aq;
        prod *= 1.0 - qn;
        // Remaining factors change the product by about env * aq / (1 - aq).
        if (env < prec.series_tail_tol && env * aq / (1.0 - aq) < prec.series_tail_tol) break;
        if (n >= prec.n_max) {
            capped = true;
            break;
        }
    }
    if (diag) {
        diag->terms_used += n;
        if (capped) diag->warnings.push_back("TruncationWarning: eta product hit n_max");
    }
    return std::exp(Complex(0.0, kPi / 12.0) * tau) * prod;
}

}  // namespace

Sl2zMatrix reduce_to_fundamental(const TauPoint& tau, TauPoint* reduced) {
    Complex z = tau.value();
    Sl2zMatrix m;
    for (int iter = 0; iter < 10000; ++iter) {
        const double shift = std::nearbyint(z.real());
        if (shift != 0.0) {
            const auto k = static_cast<std::int64_t>(shift);
            z -= shift;
            m = Sl2zMatrix(1, -k, 0, 1) * m;
        }
        if (std::norm(z) < 1.0 - 1e-15) {
            z = -1.0 / z;
            m = Sl2zMatrix::S() * m;
        } else {
            break;
        }
    }
    m = m.normalized();
    if (reduced) *reduced = TauPoint(m.apply(tau.value()));
    return m;
}

Complex eta(const TauPoint& tau, const Precision& prec, Diagnostics* diag) {
    if (tau.tau2 >= 0.2) return eta_product(tau.value(), prec, diag);
    TauPoint red(0.0, 1.0);
    const Sl2zMatrix m = reduce_to_fundamental(tau, &red);
    const Complex lhs = eta_product(red.value(), prec, diag);
    const Complex ct = double(m.c) * tau.value() + double(m.d);
    return lhs / (eta_multiplier(m) * std::sqrt(ct));
}

Complex eta_multiplier(const Sl2zMatrix& m) {
    if (!m.is_normalized()) {
        throw NormalizationError("eta_multiplier requires c > 0, or c = 0 and d = 1");
    }
    if (m.c == 0) {
        // e^{b pi i / 12}, with b reduced mod 24 to keep the phase exact.
        const double b = static_cast<double>(((m.b % 24) + 24) % 24);
        return {cos_pi(b / 12.0), sin_pi(b / 12.0)};
    }
    const special::Rational sd = special::dedekind_sum(m.d, m.c);
    // phase / pi = (a+d)/(12c) - s(d,c) - 1/4
    const double c = static_cast<double>(m.c);
    double phase = static_cast<double>(m.a + m.d) / (12.0 * c) - sd.to_double() - 0.25;
    phase = std::fmod(phase, 2.0);
    return {cos_pi(phase), sin_pi(phase)};
}

double eta_transform_check(const Sl2zMatrix& m, const TauPoint& tau, const Precision& prec) {
    const Complex lhs = eta(m.apply(tau), prec);
    const Complex ct = double(m.c) * tau.value() + double(m.d);
    const Complex rhs = eta_multiplier(m) * std::sqrt(ct) * eta(tau, prec);
    return std::abs(lhs - rhs);
}

}  // namespace modular
}  // namespace tzeta
