#pragma once

// Globally adaptive Gauss-Kronrod (10/21) quadrature for real- or
// complex-valued integrands, plus the endpoint maps used throughout the
// library.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <queue>
#include <type_traits>
#include <vector>

namespace tzeta::quad {

struct Options {
    double abs_tol = 1e-15;
    double rel_tol = 1e-12;
    int max_intervals = 4000;
};

template <class T>
struct Result {
    T value{};
    double error = 0.0;
    long evals = 0;
    bool converged = true;
};

namespace detail {

// Kronrod abscissae on [-1, 1]; odd indices are the 10-point Gauss nodes.
inline constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

inline constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077682836234600, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

inline constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

template <class T>
double magnitude(const T& v) {
    return std::abs(v);
}

template <class T>
struct Segment {
    double a, b;
    T value;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

// QUADPACK qk21 rule with its error heuristic.
template <class F, class T>
Segment<T> kronrod21(F& f, double a, double b) {
    const double centr = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);
    const double dhlgth = std::abs(hlgth);

    std::array<T, 10> fv1{}, fv2{};
    const T fc = f(centr);
    T resg{};
    T resk = fc * kWgk[10];
    double resabs = std::abs(kWgk[10] * magnitude(fc));
    for (int j = 0; j < 5; ++j) {
        const int jtw = 2 * j + 1;
        const double absc = hlgth * kXgk[jtw];
        const T f1 = f(centr - absc);
        const T f2 = f(centr + absc);
        fv1[jtw] = f1;
        fv2[jtw] = f2;
        resg += kWg[j] * (f1 + f2);
        resk += kWgk[jtw] * (f1 + f2);
        resabs += kWgk[jtw] * (magnitude(f1) + magnitude(f2));
    }
    for (int j = 0; j < 5; ++j) {
        const int jtwm1 = 2 * j;
        const double absc = hlgth * kXgk[jtwm1];
        const T f1 = f(centr - absc);
        const T f2 = f(centr + absc);
        fv1[jtwm1] = f1;
        fv2[jtwm1] = f2;
        resk += kWgk[jtwm1] * (f1 + f2);
        resabs += kWgk[jtwm1] * (magnitude(f1) + magnitude(f2));
    }
    const T reskh = resk * 0.5;
    double resasc = kWgk[10] * magnitude(fc - reskh);
    for (int j = 0; j < 10; ++j) {
        resasc += kWgk[j] * (magnitude(fv1[j] - reskh) + magnitude(fv2[j] - reskh));
    }
    const T result = resk * hlgth;
    resabs *= dhlgth;
    resasc *= dhlgth;
    double abserr = magnitude((resk - resg) * hlgth);
    if (resasc != 0.0 && abserr != 0.0) {
        abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
    }
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (50.0 * eps)) {
        abserr = std::max(eps * 50.0 * resabs, abserr);
    }
    return {a, b, result, abserr};
}

}  // namespace detail

/// Integrates f over [a, b] by bisecting the interval with the largest error
/// estimate until the total estimate meets max(abs_tol, rel_tol * |I|).
template <class F>
auto integrate(F&& f, double a, double b, const Options& opt = {})
    -> Result<std::decay_t<decltype(f(a))>> {
    using T = std::decay_t<decltype(f(a))>;
    Result<T> out;
    if (a == b) return out;

    std::priority_queue<detail::Segment<T>> heap;
    heap.push(detail::kronrod21<F, T>(f, a, b));
    out.evals = 21;
    T total = heap.top().value;
    double err = heap.top().error;

    int intervals = 1;
    while (err > std::max(opt.abs_tol, opt.rel_tol * detail::magnitude(total))) {
        if (intervals >= opt.max_intervals) {
            out.converged = false;
            break;
        }
        auto worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= std::min(worst.a, worst.b) || mid >= std::max(worst.a, worst.b)) {
            // Interval collapsed to machine resolution.
            heap.push(worst);
            out.converged = false;
            break;
        }
        auto left = detail::kronrod21<F, T>(f, worst.a, mid);
        auto right = detail::kronrod21<F, T>(f, mid, worst.b);
        out.evals += 42;
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++intervals;
    }

    // Resum from scratch so that the drift of the running update does not leak
    // into the result.
    std::vector<detail::Segment<T>> segs;
    segs.reserve(heap.size());
    while (!heap.empty()) {
        segs.push_back(heap.top());
        heap.pop();
    }
    std::sort(segs.begin(), segs.end(),
              [](const auto& l, const auto& r) { return l.a < r.a; });
    T sum{};
    double esum = 0.0;
    for (const auto& s : segs) {
        sum += s.value;
        esum += s.error;
    }
    out.value = sum;
    out.error = esum;
    return out;
}

/// Integral of u^alpha h(u) over (0, b] for Re(alpha) > -1, with the algebraic
/// endpoint factor absorbed by u = b e^{-y}. The value h(0) is integrated in
/// closed form, so the transformed integrand decays like e^{-(Re alpha + 2) y}.
template <class H>
auto integrate_algebraic_left(H&& h, std::complex<double> alpha, double b, const Options& opt = {})
    -> Result<std::complex<double>> {
    using C = std::complex<double>;
    const C h0 = C(h(0.0));
    const C ap1 = alpha + 1.0;
    const C scale = std::exp(ap1 * std::log(b));
    const double decay = ap1.real() + 1.0;
    const double y_max = 41.5 / decay;
    auto g = [&](double y) -> C {
        const double u = b * std::exp(-y);
        return std::exp(-ap1 * y) * (C(h(u)) - h0);
    };
    auto r = integrate(g, 0.0, y_max, opt);
    Result<C> out;
    out.value = scale * (h0 / ap1 + r.value);
    out.error = std::abs(scale) * r.error;
    out.evals = r.evals + 1;
    out.converged = r.converged;
    return out;
}

}  // namespace tzeta::quad
