#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace birweyl {

// Exact arbitrary-precision rational, the coefficient field of the engine.
using Rational = mpq_class;

// Parses a rational from a decimal string such as "7", "-3/2" or "0".
// Throws std::invalid_argument on malformed input or a zero denominator.
inline Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    bool seen_digit = false, seen_slash = false, digit_after_slash = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c >= '0' && c <= '9') {
            (seen_slash ? digit_after_slash : seen_digit) = true;
        } else if (c == '/' && !seen_slash && seen_digit) {
            seen_slash = true;
        } else {
            throw std::invalid_argument("malformed rational literal: " + text);
        }
    }
    if (!seen_digit || (seen_slash && !digit_after_slash))
        throw std::invalid_argument("malformed rational literal: " + text);
    // GMP does not accept a leading '+'.
    Rational r(text[0] == '+' ? text.substr(1) : text);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator in: " + text);
    r.canonicalize();
    return r;
}

inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace birweyl
