#include "tzeta/core/precision.hpp"

#include <cmath>

#include "tzeta/core/errors.hpp"

namespace tzeta {

void Precision::validate() const {
    if (!(quad_rel_tol > 0.0) || !std::isfinite(quad_rel_tol)) {
        throw DomainError("quad_rel_tol must be positive");
    }
    if (!(series_tail_tol > 0.0) || !std::isfinite(series_tail_tol)) {
        throw DomainError("series_tail_tol must be positive");
    }
    if (n_max < 1) throw DomainError("n_max must be at least 1");
    if (!(diff_step > 0.0) || !std::isfinite(diff_step)) {
        throw DomainError("diff_step must be positive");
    }
}

}  // namespace tzeta
