#include <cmath>
#include <numeric>
#include <string>

#include "tzeta/core/errors.hpp"
#include "tzeta/core/series.hpp"
#include "tzeta/special/special.hpp"

namespace tzeta::special {

namespace {

__extension__ typedef __int128 i128;

Complex divisor_power(std::int64_t d, Complex v) {
    if (v.imag() == 0.0) return std::pow(static_cast<double>(d), v.real());
    return real_pow(static_cast<double>(d), v);
}

}  // namespace

Complex sigma(Complex v, std::int64_t n) {
    if (n < 1) throw DomainError("sigma requires n >= 1, got " + std::to_string(n));
    Complex lo = 0.0, hi = 0.0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        lo += divisor_power(d, v);
        const std::int64_t e = n / d;
        if (e != d) hi += divisor_power(e, v);
    }
    return lo + hi;
}

Rational dedekind_sum(std::int64_t h, std::int64_t k) {
    if (k < 1) throw DomainError("dedekind_sum requires k >= 1, got " + std::to_string(k));
    // s(h,k) = sum ((n/k)) ((hn/k)) with ((x)) = x - floor(x) - 1/2 off the
    // integers and 0 on them: sum (2n - k)(2 r_n - k) / (4 k^2) over r_n != 0,
    // r_n = hn mod k.
    i128 acc = 0;
    const std::int64_t hm = ((h % k) + k) % k;
    for (std::int64_t n = 1; n < k; ++n) {
        const std::int64_t r = static_cast<std::int64_t>((static_cast<i128>(hm) * n) % k);
        if (r != 0) acc += static_cast<i128>(2 * n - k) * (2 * r - k);
    }
    i128 den = static_cast<i128>(4) * k * k;
    if (acc == 0) return {0, 1};
    i128 a = acc < 0 ? -acc : acc, b = den;
    while (b != 0) {
        const i128 t = a % b;
        a = b;
        b = t;
    }
    return {static_cast<std::int64_t>(acc / a), static_cast<std::int64_t>(den / a)};
}

Complex lambert_series(Complex alpha, Complex q, const Precision& prec, Diagnostics* diag) {
    const double aq = std::abs(q);
    if (!(aq < 1.0)) throw DomainError("lambert_series requires |q| < 1");
    if (aq == 0.0) return 0.0;
    SeriesAccumulator acc(prec.series_tail_tol, prec.n_max);
    Complex qn = 1.0;
    for (std::int64_t n = 1;; ++n) {
        qn *= q;
        const double mag = std::pow(aq, static_cast<double>(n));
        const double npow = std::pow(static_cast<double>(n), alpha.real());
        const Complex term = divisor_power(n, alpha) * qn / (1.0 - qn);
        if (acc.add(term, npow * mag / (1.0 - mag))) break;
    }
    if (diag) {
        diag->terms_used += acc.terms();
        if (acc.capped()) diag->warnings.push_back("TruncationWarning: lambert_series hit n_max");
    }
    return acc.sum();
}

}  // namespace tzeta::special
