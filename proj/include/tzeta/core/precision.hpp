#pragma once

#include <cstdint>

namespace tzeta {

/// Truncation orders, quadrature tolerances and differentiation steps shared
/// by every evaluator. The defaults leave at least two digits of margin on
/// all shipped acceptance tolerances.
struct Precision {
    double quad_rel_tol = 1e-12;
    double series_tail_tol = 1e-14;
    std::int64_t n_max = 10'000;
    double diff_step = 1e-5;

    /// Throws DomainError unless every field is strictly positive.
    void validate() const;
};

}  // namespace tzeta
