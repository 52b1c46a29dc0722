#include <cstdlib>
#include <cstring>

#include "tzeta/kernels/row_sums.hpp"

namespace tzeta::kernels {

#ifndef TZETA_HAVE_AVX2
namespace avx2 {
bool available() { return false; }
Complex power_row_sum(double a, double b, double c, long j0, long j1, Complex s) {
    return scalar::power_row_sum(a, b, c, j0, j1, s);
}
double gaussian_row_sum(double a, double b, double c, long j0, long j1, double scale) {
    return scalar::gaussian_row_sum(a, b, c, j0, j1, scale);
}
}  // namespace avx2
#endif

std::string_view to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

namespace {

Isa detect() {
    const char* env = std::getenv("TZETA_ISA");
    if (env && std::strcmp(env, "scalar") == 0) return Isa::scalar;
    return avx2::available() ? Isa::avx2 : Isa::scalar;
}

}  // namespace

Isa active_isa() {
    static const Isa isa = detect();
    return isa;
}

Complex power_row_sum(double a, double b, double c, long j0, long j1, Complex s) {
    if (j1 < j0) return {};
    return active_isa() == Isa::avx2 ? avx2::power_row_sum(a, b, c, j0, j1, s)
                                     : scalar::power_row_sum(a, b, c, j0, j1, s);
}

double gaussian_row_sum(double a, double b, double c, long j0, long j1, double scale) {
    if (j1 < j0) return 0.0;
    return active_isa() == Isa::avx2 ? avx2::gaussian_row_sum(a, b, c, j0, j1, scale)
                                     : scalar::gaussian_row_sum(a, b, c, j0, j1, scale);
}

}  // namespace tzeta::kernels
