#pragma once

#include <optional>
#include <string>

#include "birweyl/polynomial.hpp"

namespace birweyl {

// Element of the fraction field, kept as a normalized numerator/denominator
// pair. Normalization strips the common monomial factor and the common
// integer content of num and den, and makes den's leading coefficient
// positive. No multivariate gcd is computed: equality is decided by
// cross-multiplication, polynomiality by exact division.
class RationalFunction {
public:
    static RationalFunction of(Polynomial num);
    static RationalFunction of(Polynomial num, Polynomial den);  // throws on den == 0
    static RationalFunction zero(VariableTablePtr table);
    static RationalFunction one(VariableTablePtr table);
    static RationalFunction constant(VariableTablePtr table, const Rational& c);
    static RationalFunction variable(VariableTablePtr table, int var_id);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const VariableTablePtr& table() const { return num_.table(); }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator+(const RationalFunction& other) const;
    RationalFunction operator-(const RationalFunction& other) const;
    RationalFunction operator*(const RationalFunction& other) const;
    RationalFunction operator/(const RationalFunction& other) const;  // throws on 0
    RationalFunction operator-() const;
    RationalFunction inverse() const;  // throws on 0
    RationalFunction pow(int k) const; // negative k inverts first

    // Field equality by cross-multiplication.
    bool equals(const RationalFunction& other) const;

    // Structural identity of the normalized pairs (used by tests).
    bool same_representation(const RationalFunction& other) const;

    // The polynomial equal to *this when den divides num exactly.
    std::optional<Polynomial> to_polynomial() const;

    // "num" when den == 1, otherwise "(num)/(den)".
    std::string to_string() const;

private:
    RationalFunction(Polynomial num, Polynomial den);
    void normalize();

    Polynomial num_, den_;
};

inline bool rf_eq(const RationalFunction& f, const RationalFunction& g) {
    return f.equals(g);
}

// prod(lhs) == prod(rhs) in the fraction field, decided by one multi-factor
// cross-multiplication instead of materializing either product.
bool rf_products_equal(const std::vector<RationalFunction>& lhs,
                       const std::vector<RationalFunction>& rhs);

// Running product of rational functions that keeps the denominator in
// factored form and cancels numerator against denominator factors by exact
// division as it goes. Products of cocycle factors collapse back to
// polynomials this way without any multivariate gcd.
class FractionAccumulator {
public:
    explicit FractionAccumulator(VariableTablePtr table);

    void multiply(const RationalFunction& f);
    RationalFunction value() const;

private:
    Polynomial num_;
    std::vector<std::pair<Polynomial, int>> den_;  // factor, exponent
};

}  // namespace birweyl
