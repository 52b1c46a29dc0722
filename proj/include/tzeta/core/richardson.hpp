#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace tzeta {

template <class T>
struct Extrapolated {
    T value{};
    double error = 0.0;
};

/// Richardson table for samples A(h_i), h_{i+1} = h_i / ratio, whose error
/// expansion runs in powers h^{p0}, h^{p0+dp}, h^{p0+2dp}, ...
/// The error estimate is the difference of the last two diagonal entries.
template <class T>
Extrapolated<T> richardson(const std::vector<T>& samples, double ratio, int p0, int dp) {
    Extrapolated<T> out;
    if (samples.empty()) return out;
    std::vector<std::vector<T>> table(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        table[i].push_back(samples[i]);
        for (std::size_t j = 1; j <= i; ++j) {
            const double f = std::pow(ratio, p0 + static_cast<int>(j - 1) * dp);
            table[i].push_back(table[i][j - 1] + (table[i][j - 1] - table[i - 1][j - 1]) / (f - 1.0));
        }
    }
    const auto& last = table.back();
    out.value = last.back();
    if (last.size() >= 2) {
        out.error = std::abs(last.back() - last[last.size() - 2]);
    }
    return out;
}

}  // namespace tzeta
