#include "birweyl/rational_function.hpp"

#include <stdexcept>

namespace birweyl {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    require_same_table(num_, den_);
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    normalize();
}

RationalFunction RationalFunction::of(Polynomial num) {
    auto table = num.table();
    return RationalFunction(std::move(num), Polynomial::constant(table, 1));
}

RationalFunction RationalFunction::of(Polynomial num, Polynomial den) {
    return RationalFunction(std::move(num), std::move(den));
}

RationalFunction RationalFunction::zero(VariableTablePtr table) {
    return of(Polynomial::zero(std::move(table)));
}

RationalFunction RationalFunction::one(VariableTablePtr table) {
    return of(Polynomial::constant(std::move(table), 1));
}

RationalFunction RationalFunction::constant(VariableTablePtr table, const Rational& c) {
    return of(Polynomial::constant(std::move(table), c));
}

RationalFunction RationalFunction::variable(VariableTablePtr table, int var_id) {
    return of(Polynomial::variable(std::move(table), var_id));
}

namespace {

// gcd of the coefficient numerators and lcm of their denominators, taken over
// both polynomials: dividing by num_gcd/den_lcm makes every coefficient an
// integer and their overall gcd one.
Rational joint_content(const Polynomial& a, const Polynomial& b) {
    mpz_class g = 0, l = 1;
    auto absorb = [&](const Polynomial& p) {
        for (const auto& [m, c] : p.terms()) {
            mpz_class num = c.get_num();
            mpz_class den = c.get_den();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        }
    };
    absorb(a);
    absorb(b);
    if (g == 0) g = 1;
    Rational content(g, l);
    content.canonicalize();
    return content;
}

Polynomial divide_out_monomial(const Polynomial& p, const Monomial& m) {
    Polynomial out = Polynomial::zero(p.table());
    for (const auto& [mm, c] : p.terms()) out.add_term(*mm.divided_by(m), c);
    return out;
}

}  // namespace

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(num_.table(), 1);
        return;
    }
    Monomial common = Monomial::componentwise_min(num_.common_monomial(), den_.common_monomial());
    if (!common.is_one()) {
        num_ = divide_out_monomial(num_, common);
        den_ = divide_out_monomial(den_, common);
    }
    Rational content = joint_content(num_, den_);
    if (den_.leading_coeff() < 0) content = -content;
    if (content != 1) {
        Rational inv = 1 / content;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFunction RationalFunction::operator+(const RationalFunction& other) const {
    return RationalFunction(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& other) const {
    return RationalFunction(num_ * other.den_ - other.num_ * den_, den_ * other.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& other) const {
    return RationalFunction(num_ * other.num_, den_ * other.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& other) const {
    if (other.is_zero()) throw std::domain_error("division by zero rational function");
    return RationalFunction(num_ * other.den_, den_ * other.num_);
}

RationalFunction RationalFunction::operator-() const {
    return RationalFunction(-num_, den_);
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    return RationalFunction(num_.pow(k), den_.pow(k));
}

bool RationalFunction::equals(const RationalFunction& other) const {
    require_same_table(num_, other.num_);
    if (same_representation(other)) return true;
    return product_equals(num_, other.den_, other.num_, den_);
}

bool RationalFunction::same_representation(const RationalFunction& other) const {
    return num_ == other.num_ && den_ == other.den_;
}

std::optional<Polynomial> RationalFunction::to_polynomial() const {
    if (den_.is_one()) return num_;
    return num_.exact_divide(den_);
}

std::string RationalFunction::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

bool rf_products_equal(const std::vector<RationalFunction>& lhs,
                       const std::vector<RationalFunction>& rhs) {
    std::vector<const Polynomial*> a, b;
    for (const auto& f : lhs) {
        a.push_back(&f.num());
        b.push_back(&f.den());
    }
    for (const auto& g : rhs) {
        b.push_back(&g.num());
        a.push_back(&g.den());
    }
    return products_equal(a, b);
}

FractionAccumulator::FractionAccumulator(VariableTablePtr table)
    : num_(Polynomial::constant(std::move(table), 1)) {}

void FractionAccumulator::multiply(const RationalFunction& f) {
    num_ = num_ * f.num();
    if (!f.den().is_one()) {
        bool merged = false;
        for (auto& [factor, exp] : den_)
            if (factor == f.den()) {
                ++exp;
                merged = true;
                break;
            }
        if (!merged) den_.emplace_back(f.den(), 1);
    }
    // Cancel: divide the numerator by denominator factors while possible.
    for (auto& [factor, exp] : den_) {
        if (factor.is_constant()) continue;
        while (exp > 0) {
            auto q = num_.exact_divide(factor);
            if (!q) break;
            num_ = std::move(*q);
            --exp;
        }
    }
    std::erase_if(den_, [](const auto& fe) { return fe.second == 0; });
}

RationalFunction FractionAccumulator::value() const {
    Polynomial den = Polynomial::constant(num_.table(), 1);
    for (const auto& [factor, exp] : den_) den = den * factor.pow(exp);
    return RationalFunction::of(num_, std::move(den));
}

}  // namespace birweyl

