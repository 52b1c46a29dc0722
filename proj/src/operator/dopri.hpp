#pragma once

// Dormand-Prince 5(4) with FSAL and standard step control, over a fixed-size
// state of real or complex components.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <type_traits>

#include "tzeta/core/errors.hpp"

namespace tzeta::opdet::detail {

template <class T, std::size_t N>
using State = std::array<T, N>;

struct OdeOptions {
    double rtol = 1e-13;
    double atol = 1e-15;
    long max_steps = 200000;
};

/// `observe(x, y)` is called after every accepted step.
template <class T, std::size_t N, class F, class Obs = std::nullptr_t>
State<T, N> dopri45(F&& rhs, double x0, double x1, State<T, N> y, const OdeOptions& opt, double h0 = 0.0,
                    Obs&& observe = nullptr) {
    constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                     a65 = -5103.0 / 18656;
    constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                     e6 = 22.0 / 525, e7 = -1.0 / 40;

    if (x1 == x0) return y;
    const double span = x1 - x0;
    double h = h0 > 0.0 ? std::min(h0, span) : span * 1e-3;
    double x = x0;
    State<T, N> k1 = rhs(x, y), k2, k3, k4, k5, k6, k7, yt, ynew;
    auto comb = [&](std::initializer_list<std::pair<double, const State<T, N>*>> terms, double hh) {
        State<T, N> out = y;
        for (const auto& [c, k] : terms) {
            for (std::size_t i = 0; i < N; ++i) out[i] += hh * c * (*k)[i];
        }
        return out;
    };
    long steps = 0;
    while (x < x1) {
        if (++steps > opt.max_steps) throw OdeToleranceError("ODE integrator exceeded its step budget");
        if (x + h > x1) h = x1 - x;
        yt = comb({{a21, &k1}}, h);
        k2 = rhs(x + c2 * h, yt);
        yt = comb({{a31, &k1}, {a32, &k2}}, h);
        k3 = rhs(x + c3 * h, yt);
        yt = comb({{a41, &k1}, {a42, &k2}, {a43, &k3}}, h);
        k4 = rhs(x + c4 * h, yt);
        yt = comb({{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}, h);
        k5 = rhs(x + c5 * h, yt);
        yt = comb({{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}, h);
        k6 = rhs(x + h, yt);
        ynew = comb({{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}}, h);
        k7 = rhs(x + h, ynew);

        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const T e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double sc = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            err = std::max(err, std::abs(e) / sc);
        }
        if (!std::isfinite(err)) {
            h *= 0.25;
        } else if (err <= 1.0) {
            x = (x1 - x - h <= 1e-15 * std::abs(span)) ? x1 : x + h;
            y = ynew;
            k1 = k7;
            if constexpr (!std::is_same_v<std::decay_t<Obs>, std::nullptr_t>) observe(x, y);
            h *= std::min(5.0, 0.9 * std::pow(std::max(err, 1e-10), -0.2));
        } else {
            h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
        }
        if (h < 1e-14 * std::abs(span)) throw OdeToleranceError("ODE step size underflow");
    }
    return y;
}

}  // namespace tzeta::opdet::detail
