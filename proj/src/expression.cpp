#include "birweyl/expression.hpp"

#include <cctype>

namespace birweyl {

namespace {

// Recursive-descent parser over the fraction field.
class Parser {
public:
    Parser(const std::string& src, VariableTablePtr table)
        : src_(src), table_(std::move(table)) {}

    RationalFunction parse() {
        RationalFunction v = sum();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    RationalFunction sum() {
        RationalFunction v = product();
        for (;;) {
            skip_ws();
            if (accept('+')) {
                v = v + product();
            } else if (accept('-')) {
                v = v - product();
            } else {
                return v;
            }
        }
    }

    RationalFunction product() {
        RationalFunction v = factor();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                v = v * factor();
            } else if (accept('/')) {
                std::size_t at = pos_;
                RationalFunction d = factor();
                if (d.is_zero()) throw ParseError(at, "division by zero");
                v = v / d;
            } else {
                return v;
            }
        }
    }

    RationalFunction factor() {
        skip_ws();
        int sign = 1;
        while (accept('-') ? (sign = -sign, true) : accept('+')) skip_ws();
        RationalFunction v = power();
        return sign < 0 ? -v : v;
    }

    RationalFunction power() {
        RationalFunction v = atom();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            bool neg = accept('-');
            std::size_t at = pos_;
            if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                fail("expected integer exponent");
            long e = 0;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                e = e * 10 + (src_[pos_++] - '0');
            if (e > 1000) throw ParseError(at, "exponent too large");
            v = v.pow(static_cast<int>(neg ? -e : e));
        }
        return v;
    }

    RationalFunction atom() {
        skip_ws();
        if (pos_ >= src_.size()) fail("unexpected end of input");
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction v = sum();
            skip_ws();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class n = 0;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                n = n * 10 + (src_[pos_++] - '0');
            return RationalFunction::constant(table_, Rational(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at = pos_;
            std::string name;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                name += src_[pos_++];
            auto id = table_->find(name);
            if (!id) throw ParseError(at, "unknown variable '" + name + "'");
            return RationalFunction::variable(table_, *id);
        }
        fail("unexpected character");
    }

    bool accept(char c) {
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

    const std::string& src_;
    VariableTablePtr table_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_expression(const std::string& src, VariableTablePtr table) {
    return Parser(src, std::move(table)).parse();
}

nlohmann::json polynomial_to_json(const Polynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json mono = nlohmann::json::object();
        for (int id = 0; id < m.nvars(); ++id)
            if (m.exp(id) != 0) mono[p.table()->name(id)] = m.exp(id);
        terms.push_back({{"coeff", rational_to_string(c)}, {"monomial", mono}});
    }
    return terms;
}

Polynomial polynomial_from_json(const nlohmann::json& j, VariableTablePtr table) {
    Polynomial p = Polynomial::zero(table);
    for (const auto& term : j) {
        Rational c = rational_from_string(term.at("coeff").get<std::string>());
        Monomial m(table->size());
        for (const auto& [name, e] : term.at("monomial").items()) {
            auto id = table->find(name);
            if (!id) throw std::invalid_argument("unknown variable '" + name + "' in term list");
            int exp = e.get<int>();
            if (exp < 0) throw std::invalid_argument("negative exponent in term list");
            m.set_exp(*id, exp);
        }
        p.add_term(m, c);
    }
    return p;
}

nlohmann::json rational_function_to_json(const RationalFunction& f) {
    return {{"num", polynomial_to_json(f.num())}, {"den", polynomial_to_json(f.den())}};
}

}  // namespace birweyl
