#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tzeta/core/complex.hpp"

namespace tzeta {

enum class Method { direct, contour, chowla_selberg };

std::string_view to_string(Method m);
/// Accepts "direct", "contour", "cs" and "chowla_selberg".
Method parse_method(std::string_view text);

struct Diagnostics {
    std::int64_t terms_used = 0;
    std::int64_t quad_evals = 0;
    std::vector<std::string> warnings;

    void merge(const Diagnostics& other);
};

struct EvalResult {
    Complex value{};
    double err_estimate = 0.0;
    Method method = Method::direct;
    Diagnostics diagnostics;
};

}  // namespace tzeta
