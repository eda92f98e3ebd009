#pragma once

#include <string>

#include <json.hpp>

#include "birweyl/rational_function.hpp"

namespace birweyl {

// Position-carrying failure for expression parsing. Positions are 0-based
// character offsets into the source text.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Parses the expression grammar: + - * / ^ ( ), integer and p/q literals,
// declared variable names. '^' binds tighter than '*'/'/', which bind tighter
// than '+'/'-'. Throws ParseError (syntax) with position info; unknown
// variable names also raise ParseError with the name in the message.
RationalFunction parse_expression(const std::string& src, VariableTablePtr table);

// JSON term-list form of a polynomial:
//   [{"coeff":"-3/2","monomial":{"x":2,"a":1}}, ...]
// in descending graded-lex order, only nonzero exponents listed.
nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j, VariableTablePtr table);

// {"num": [...], "den": [...]} pair of term lists.
nlohmann::json rational_function_to_json(const RationalFunction& f);

}  // namespace birweyl
