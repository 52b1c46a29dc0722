#include <cmath>

#include "tzeta/kernels/row_sums.hpp"

namespace tzeta::kernels::scalar {

Complex power_row_sum(double a, double b, double c, long j0, long j1, Complex s) {
    double re = 0.0, im = 0.0;
    for (long j = j0; j <= j1; ++j) {
        const double x = static_cast<double>(j);
        const double q = std::fma(std::fma(a, x, b), x, c);
        const double l = std::log(q);
        const double mag = std::exp(-s.real() * l);
        const double ph = s.imag() * l;
        re += mag * std::cos(ph);
        im -= mag * std::sin(ph);
    }
    return {re, im};
}

double gaussian_row_sum(double a, double b, double c, long j0, long j1, double scale) {
    double acc = 0.0;
    for (long j = j0; j <= j1; ++j) {
        const double x = static_cast<double>(j);
        acc += std::exp(-scale * std::fma(std::fma(a, x, b), x, c));
    }
    return acc;
}

}  // namespace tzeta::kernels::scalar
