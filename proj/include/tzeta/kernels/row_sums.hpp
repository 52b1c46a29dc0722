#pragma once

// Inner loops of the lattice sums. Every row of a shell or of the theta sum
// is a quadratic Q(j) = a j^2 + b j + c in the running index j, so the heavy
// work reduces to two reductions over contiguous j ranges.

#include <string_view>

#include "tzeta/core/complex.hpp"

namespace tzeta::kernels {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

/// Instruction set picked at first use: AVX2+FMA when the CPU reports both
/// and the build includes them, unless TZETA_ISA=scalar is set.
Isa active_isa();

/// sum_{j=j0}^{j1} Q(j)^{-s}; Q must be positive on the range.
Complex power_row_sum(double a, double b, double c, long j0, long j1, Complex s);

/// sum_{j=j0}^{j1} exp(-scale * Q(j)).
double gaussian_row_sum(double a, double b, double c, long j0, long j1, double scale);

namespace scalar {
Complex power_row_sum(double a, double b, double c, long j0, long j1, Complex s);
double gaussian_row_sum(double a, double b, double c, long j0, long j1, double scale);
}  // namespace scalar

namespace avx2 {
bool available();
Complex power_row_sum(double a, double b, double c, long j0, long j1, Complex s);
double gaussian_row_sum(double a, double b, double c, long j0, long j1, double scale);
}  // namespace avx2

}  // namespace tzeta::kernels
