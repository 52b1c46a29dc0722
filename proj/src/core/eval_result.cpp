#include "tzeta/core/eval_result.hpp"

#include "tzeta/core/errors.hpp"

namespace tzeta {

std::string_view to_string(Method m) {
    switch (m) {
        case Method::direct: return "direct";
        case Method::contour: return "contour";
        case Method::chowla_selberg: return "chowla_selberg";
    }
    return "unknown";
}

Method parse_method(std::string_view text) {
    if (text == "direct") return Method::direct;
    if (text == "contour") return Method::contour;
    if (text == "cs" || text == "chowla_selberg" || text == "chowla-selberg") {
        return Method::chowla_selberg;
    }
    throw ParseError("unknown method '" + std::string(text) + "'");
}

void Diagnostics::merge(const Diagnostics& other) {
    terms_used += other.terms_used;
    quad_evals += other.quad_evals;
    warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
}

}  // namespace tzeta
