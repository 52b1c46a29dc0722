#pragma once

#include <cstdint>

#include "tzeta/core/complex.hpp"

namespace tzeta {

/// Running sum of an exponentially convergent series with the shared stop
/// rule: the current term's envelope is below the tail tolerance and the
/// geometric tail bound env * r / (1 - r), with r the envelope ratio, is too.
/// Compensated (Neumaier) summation keeps the result independent of how many
/// terms were needed.
class SeriesAccumulator {
public:
    SeriesAccumulator(double tail_tol, std::int64_t n_max) : tol_(tail_tol), n_max_(n_max) {}

    /// Adds `term`; `envelope` bounds |term| and drives the ratio estimate so
    /// that sign changes or vanishing cosines do not stop the series early.
    /// Returns true once the series may be truncated.
    bool add(Complex term, double envelope);

    Complex sum() const { return sum_ + comp_; }
    std::int64_t terms() const { return count_; }
    bool capped() const { return capped_; }
    double tail_estimate() const { return tail_; }

private:
    double tol_;
    std::int64_t n_max_;
    Complex sum_{};
    Complex comp_{};
    std::int64_t count_ = 0;
    double prev_env_ = -1.0;
    double tail_ = 0.0;
    bool capped_ = false;
};

}  // namespace tzeta
