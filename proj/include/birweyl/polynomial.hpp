#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "birweyl/rational.hpp"
#include "birweyl/variables.hpp"

namespace birweyl {

// Exponent vector over a fixed VariableTable. Stored dense; zero exponents
// never appear in the serialized forms.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int nvars) : exps_(static_cast<std::size_t>(nvars), 0) {}

    int nvars() const { return static_cast<int>(exps_.size()); }
    int exp(int id) const { return exps_[static_cast<std::size_t>(id)]; }
    void set_exp(int id, int e) { exps_[static_cast<std::size_t>(id)] = e; }
    int degree() const;
    bool is_one() const;

    Monomial times(const Monomial& other) const;
    // Componentwise quotient; nullopt when some exponent would go negative.
    std::optional<Monomial> divided_by(const Monomial& other) const;
    static Monomial componentwise_min(const Monomial& a, const Monomial& b);
    static Monomial componentwise_max(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

private:
    std::vector<std::int32_t> exps_;
};

// Descending graded-lexicographic term order: higher total degree first; ties
// broken lexicographically with generator variables (in table order) taking
// priority over lambda variables (by index).
struct GrlexDescending {
    int lambda_count = 0;
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Returns <0, 0, >0 as a ranks after, equal to, before b in the canonical
// descending order (i.e. >0 means a is the more leading monomial).
int grlex_compare(int lambda_count, const Monomial& a, const Monomial& b);

// Sparse exact multivariate polynomial over the rationals. Immutable value
// type; the zero polynomial is the empty term map. Terms iterate in
// descending graded-lex order, leading term first.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexDescending>;

    static Polynomial zero(VariableTablePtr table);
    static Polynomial constant(VariableTablePtr table, const Rational& c);
    static Polynomial variable(VariableTablePtr table, int var_id);
    static Polynomial term(VariableTablePtr table, Monomial m, const Rational& c);

    const VariableTablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    int term_count() const { return static_cast<int>(terms_.size()); }
    int total_degree() const;  // -1 for the zero polynomial
    // Coefficient of m (zero when absent).
    Rational coeff(const Monomial& m) const;
    const Monomial& leading_monomial() const;  // requires nonzero
    const Rational& leading_coeff() const;     // requires nonzero

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial scaled(const Rational& c) const;
    Polynomial times_monomial(const Monomial& m) const;
    Polynomial pow(int k) const;  // k >= 0

    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    // Exact single-divisor division under the graded-lex order: returns r
    // with *this == q*r, or nullopt when the remainder is nonzero.
    // Throws std::domain_error when q is zero.
    std::optional<Polynomial> exact_divide(const Polynomial& q) const;

    // Partial derivative with respect to one variable.
    Polynomial derivative(int var_id) const;

    // Componentwise minimum of all exponent vectors (the largest common
    // monomial factor). Requires nonzero.
    Monomial common_monomial() const;

    // Canonical text form: descending graded-lex, '^' powers, explicit '*'.
    std::string to_string() const;

    // Adds c*m into the accumulating map; drops the term if it cancels.
    void add_term(const Monomial& m, const Rational& c);

private:
    explicit Polynomial(VariableTablePtr table);

    VariableTablePtr table_;
    TermMap terms_;
};

// Throws std::invalid_argument unless both live over the same table.
void require_same_table(const Polynomial& a, const Polynomial& b);

// Decides prod(a) == prod(b) exactly without materializing the products over
// Q. The products are compared modulo enough fixed 62-bit primes to exceed
// twice the coefficient bound (a proof, not a heuristic), with exponent
// vectors packed into 64-bit keys when the degree bounds permit; otherwise
// falls back to exact expansion. An empty factor list is the constant 1.
bool products_equal(const std::vector<const Polynomial*>& a,
                    const std::vector<const Polynomial*>& b);

inline bool product_equals(const Polynomial& a1, const Polynomial& a2, const Polynomial& b1,
                           const Polynomial& b2) {
    return products_equal({&a1, &a2}, {&b1, &b2});
}

}  // namespace birweyl
