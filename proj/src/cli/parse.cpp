#include <cctype>
#include <charconv>
#include <cmath>
#include <memory>
#include <string>

#include "tzeta/cli/cli.hpp"
#include "tzeta/core/errors.hpp"

namespace tzeta::cli {

namespace {

bool parse_real(std::string_view text, double& out) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    if (text.empty()) return false;
    const auto* end = text.data() + text.size();
    const auto r = std::from_chars(text.data(), end, out);
    return r.ec == std::errc() && r.ptr == end && std::isfinite(out);
}

}  // namespace

Complex parse_complex(std::string_view text) {
    const auto bad = [&] { return ParseError("malformed complex number '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    if (text.back() != 'i') {
        double re = 0.0;
        if (!parse_real(text, re)) throw bad();
        return {re, 0.0};
    }
    const std::string_view body = text.substr(0, text.size() - 1);
    // The imaginary part starts at the last sign that is not a leading sign
    // or an exponent sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    double re = 0.0;
    std::string_view im_text = body;
    if (split != std::string_view::npos) {
        if (!parse_real(body.substr(0, split), re)) throw bad();
        im_text = body.substr(split);
    }
    double im = 0.0;
    if (im_text.empty() || im_text == "+") {
        im = 1.0;
    } else if (im_text == "-") {
        im = -1.0;
    } else if (!parse_real(im_text, im)) {
        throw bad();
    }
    return {re, im};
}

namespace {

using Fn = std::function<double(double)>;

class ExpressionParser {
public:
    explicit ExpressionParser(std::string_view text) : text_(text) {}

    Fn parse() {
        Fn f = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return f;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("potential: " + what + " at position " + std::to_string(pos_) + " in '" +
                         std::string(text_) + "'");
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Fn expr() {
        Fn lhs = term();
        for (;;) {
            if (eat('+')) {
                lhs = [l = lhs, r = term()](double x) { return l(x) + r(x); };
            } else if (eat('-')) {
                lhs = [l = lhs, r = term()](double x) { return l(x) - r(x); };
            } else {
                return lhs;
            }
        }
    }

    Fn term() {
        Fn lhs = unary();
        for (;;) {
            if (eat('*')) {
                lhs = [l = lhs, r = unary()](double x) { return l(x) * r(x); };
            } else if (eat('/')) {
                lhs = [l = lhs, r = unary()](double x) { return l(x) / r(x); };
            } else {
                return lhs;
            }
        }
    }

    Fn unary() {
        if (eat('-')) return [f = unary()](double x) { return -f(x); };
        if (eat('+')) return unary();
        return power();
    }

    Fn power() {
        Fn base = primary();
        if (eat('^')) return [b = base, e = unary()](double x) { return std::pow(b(x), e(x)); };
        return base;
    }

    Fn primary() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (eat('(')) {
            Fn f = expr();
            if (!eat(')')) fail("expected ')'");
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            if (name == "x") return [](double x) { return x; };
            if (name == "pi") return [](double) { return kPi; };
            double (*fn)(double) = nullptr;
            if (name == "sin") fn = [](double v) { return std::sin(v); };
            if (name == "cos") fn = [](double v) { return std::cos(v); };
            if (name == "exp") fn = [](double v) { return std::exp(v); };
            if (name == "sqrt") fn = [](double v) { return std::sqrt(v); };
            if (name == "log") fn = [](double v) { return std::log(v); };
            if (!fn) {
                pos_ = start;
                fail("unknown identifier '" + std::string(name) + "'");
            }
            if (!eat('(')) fail("expected '(' after " + std::string(name));
            Fn arg = expr();
            if (!eat(')')) fail("expected ')'");
            return [fn, arg](double x) { return fn(arg(x)); };
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Fn number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
            ++pos_;
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
            if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
                pos_ = p;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            }
        }
        double v = 0.0;
        const auto r = std::from_chars(text_.data() + start, text_.data() + pos_, v);
        if (r.ec != std::errc() || r.ptr != text_.data() + pos_) {
            pos_ = start;
            fail("malformed number");
        }
        return [v](double) { return v; };
    }
};

}  // namespace

std::function<double(double)> parse_expression(std::string_view text) {
    return ExpressionParser(text).parse();
}

}  // namespace tzeta::cli
