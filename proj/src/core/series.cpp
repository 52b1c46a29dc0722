#include "tzeta/core/series.hpp"

#include <cmath>

namespace tzeta {

namespace {

void neumaier(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
        comp += (sum - t) + x;
    } else {
        comp += (x - t) + sum;
    }
    sum = t;
}

}  // namespace

bool SeriesAccumulator::add(Complex term, double envelope) {
    double sr = sum_.real(), si = sum_.imag();
    double cr = comp_.real(), ci = comp_.imag();
    neumaier(sr, cr, term.real());
    neumaier(si, ci, term.imag());
    sum_ = {sr, si};
    comp_ = {cr, ci};
    ++count_;

    bool done = false;
    if (prev_env_ >= 0.0) {
        if (envelope == 0.0 && prev_env_ == 0.0) {
            tail_ = 0.0;
            done = true;
        } else if (prev_env_ > 0.0) {
            const double r = envelope / prev_env_;
            if (r < 1.0) {
                tail_ = envelope * r / (1.0 - r);
                done = envelope < tol_ && tail_ < tol_;
            }
        }
    }
    prev_env_ = envelope;
    if (!done && count_ >= n_max_) {
        capped_ = true;
        done = true;
    }
    return done;
}

}  // namespace tzeta
