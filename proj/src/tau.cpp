#include "birweyl/tau.hpp"

#include <stdexcept>

#include "birweyl/expression.hpp"

namespace birweyl {

nlohmann::json CocycleValue::to_json(bool with_integrality) const {
    nlohmann::json j;
    nlohmann::json w = nlohmann::json::array();
    for (int letter : word) w.push_back(letter + 1);
    j["word"] = w;
    j["weight"] = weight;
    j["value"] = value.to_string();
    if (polynomial_form) {
        j["polynomial"] = polynomial_form->to_string();
        j["terms"] = polynomial_to_json(*polynomial_form);
        if (with_integrality) {
            bool integral = true;
            for (const auto& [m, c] : polynomial_form->terms())
                if (!is_integer(c)) integral = false;
            j["integral"] = integral;
        }
    } else {
        j["polynomial"] = nullptr;
        j["terms"] = rational_function_to_json(value);
        if (with_integrality) j["integral"] = nullptr;
    }
    return j;
}

TauTerm tau_action(const PoissonStructure& ps, const std::vector<Substitution>& reflections,
                   const WeylWord& word, TauTerm t) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int i = *it;
        long exponent = t.weight[static_cast<std::size_t>(i)];  // <h_i, weight>
        t.coeff = reflections[static_cast<std::size_t>(i)].apply(t.coeff) *
                  ps.phi(i).pow(static_cast<int>(exponent));
        t.weight = reflect_weight(ps.cartan(), i, t.weight);
    }
    return t;
}

TauTerm tau_action(const PoissonStructure& ps, const WeylWord& word, TauTerm t) {
    return tau_action(ps, simple_reflections(ps), word, std::move(t));
}

CocycleValue cocycle(const PoissonStructure& ps, const std::vector<Substitution>& reflections,
                     const WeylWord& word, const Weight& weight) {
    const std::size_t p = word.size();
    // Suffix weights S_k = r_{j(k+1)}..r_{jp} Lambda (1-based k; S_p = Lambda).
    std::vector<Weight> suffix(p + 1);
    suffix[p] = weight;
    for (std::size_t k = p; k-- > 1;)
        suffix[k] = reflect_weight(ps.cartan(), word[k], suffix[k + 1]);

    FractionAccumulator acc(ps.table());
    WeylWord prefix;
    for (std::size_t k = 1; k <= p; ++k) {
        int letter = word[k - 1];
        long exponent = suffix[k][static_cast<std::size_t>(letter)];
        if (exponent != 0) {
            auto base = apply_word(reflections, prefix, ps.phi(letter));
            if (exponent < 0) base = base.inverse();
            for (long t = 0; t < std::abs(exponent); ++t) acc.multiply(base);
        }
        prefix.push_back(letter);
    }
    RationalFunction value = acc.value();
    CocycleValue out{word, weight, value, value.to_polynomial()};
    return out;
}

CocycleValue cocycle(const PoissonStructure& ps, const WeylWord& word, const Weight& weight) {
    return cocycle(ps, simple_reflections(ps), word, weight);
}

namespace {

CheckEntry compare_entry(const std::string& name, const RationalFunction& lhs,
                         const RationalFunction& rhs) {
    return {name, rf_eq(lhs, rhs), lhs.to_string(), rhs.to_string()};
}

Weight add_weights(const Weight& a, const Weight& b) {
    Weight out = a;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += b[k];
    return out;
}

}  // namespace

CheckReport check_cocycle_relations(const PoissonStructure& ps, const WeylWord& w,
                                    const WeylWord& w2, const Weight& l, const Weight& l2) {
    CheckReport report;
    report.title = "cocycle_relations";
    auto refl = simple_reflections(ps);

    // Compared in factored form; the expanded products can be enormous even
    // when both sides are small.
    auto push = [&report](const std::string& name, const RationalFunction& lhs,
                          const RationalFunction& f1, const RationalFunction& f2) {
        bool ok = rf_products_equal({lhs}, {f1, f2});
        report.entries.push_back(
            {name, ok, lhs.to_string(),
             ok ? lhs.to_string() : "(" + f1.to_string() + ") * (" + f2.to_string() + ")"});
    };

    // phi_w(L + L') = phi_w(L) phi_w(L')
    auto sum = cocycle(ps, refl, w, add_weights(l, l2));
    auto left = cocycle(ps, refl, w, l);
    auto right = cocycle(ps, refl, w, l2);
    push("additivity", sum.value, left.value, right.value);

    // phi_{w w'}(L) = w(phi_{w'}(L)) phi_w(w'.L)
    WeylWord ww2 = w;
    ww2.insert(ww2.end(), w2.begin(), w2.end());
    auto lhs = cocycle(ps, refl, ww2, l);
    auto inner = cocycle(ps, refl, w2, l);
    auto outer = cocycle(ps, refl, w, act_weight(ps.cartan(), w2, l));
    push("composition", lhs.value, apply_word(refl, w, inner.value), outer.value);
    return report;
}

CheckReport check_word_independence(const PoissonStructure& ps,
                                    const std::vector<WeylWord>& words, const Weight& weight) {
    CheckReport report;
    report.title = "word_independence";
    if (words.empty()) return report;
    // The words must agree as group elements: compare the linear actions.
    for (std::size_t k = 1; k < words.size(); ++k) {
        for (int i = 0; i < ps.rank(); ++i) {
            auto fw = fundamental_weight(ps.rank(), i);
            auto root = simple_root(ps.rank(), i);
            if (act_weight(ps.cartan(), words[0], fw) != act_weight(ps.cartan(), words[k], fw) ||
                act_root(ps.cartan(), words[0], root) != act_root(ps.cartan(), words[k], root))
                throw std::domain_error("WORDS_DIFFER_AS_GROUP_ELEMENTS");
        }
    }
    auto refl = simple_reflections(ps);
    auto base = cocycle(ps, refl, words[0], weight);
    for (std::size_t k = 1; k < words.size(); ++k) {
        auto other = cocycle(ps, refl, words[k], weight);
        report.entries.push_back(
            compare_entry("word " + std::to_string(k) + " vs word 0", base.value, other.value));
    }
    return report;
}

CheckReport check_regularity(const PoissonStructure& ps, const WeylWord& word,
                             const Weight& weight) {
    CheckReport report;
    report.title = "regularity";
    auto cv = cocycle(ps, word, weight);
    CheckEntry entry;
    entry.name = "polynomial form";
    entry.pass = cv.polynomial_form.has_value();
    entry.expected = "polynomial";
    entry.actual = cv.polynomial_form ? cv.polynomial_form->to_string()
                                      : "REGULARITY_FAIL: " + cv.value.to_string();
    report.entries.push_back(std::move(entry));
    return report;
}

bool divided_power_condition(const PoissonStructure& ps, std::string* why) {
    // Structure constants integral.
    for (int p = 0; p < ps.generator_count(); ++p)
        for (int q = p + 1; q < ps.generator_count(); ++q)
            for (const auto& [m, c] : ps.bracket_generators(p, q).terms())
                if (!is_integer(c)) {
                    if (why)
                        *why = "structure constant " + rational_to_string(c) + " in {" +
                               ps.generator(p).name + "," + ps.generator(q).name +
                               "} is not an integer";
                    return false;
                }
    // (1/k!) ad(phi_j)^k(g) stays in the integral span of the basis.
    for (int j = 0; j < ps.rank(); ++j) {
        for (int g = 0; g < ps.generator_count(); ++g) {
            Polynomial cur = Polynomial::variable(ps.table(), ps.generator_var(g));
            Rational factorial(1);
            for (int k = 1; !cur.is_zero(); ++k) {
                cur = ps.ad_power(j, cur, 1);
                factorial *= k;
                for (const auto& [m, c] : cur.terms())
                    if (!is_integer(Rational(c / factorial))) {
                        if (why)
                            *why = "(1/" + std::to_string(k) + "!) ad(phi_" +
                                   std::to_string(j + 1) + ")^" + std::to_string(k) + "(" +
                                   ps.generator(g).name + ") is not integral";
                        return false;
                    }
            }
        }
    }
    return true;
}

IntegralityReport check_integrality(const PoissonStructure& ps, const WeylWord& word,
                                    const Weight& weight) {
    std::string why;
    if (!divided_power_condition(ps, &why))
        return {IntegralityStatus::PreconditionFail, "PRECONDITION_FAIL: " + why};
    auto cv = cocycle(ps, word, weight);
    if (!cv.polynomial_form)
        return {IntegralityStatus::NotPolynomial,
                "cocycle value is not a polynomial: " + cv.value.to_string()};
    for (const auto& [m, c] : cv.polynomial_form->terms())
        if (!is_integer(c))
            return {IntegralityStatus::IntegralityFail,
                    "INTEGRALITY_FAIL: coefficient " + rational_to_string(c)};
    return {IntegralityStatus::Pass, cv.polynomial_form->to_string()};
}

namespace {

// alpha_i = lambda_i / eps_i as a polynomial in the lambdas; beta in Q maps
// to sum_i m_i alpha_i.
Polynomial root_as_lambda_polynomial(const PoissonStructure& ps, const RootVector& beta) {
    const auto& eps = ps.cartan().epsilon;
    if (!eps) throw std::domain_error("normalization cocycle requires symmetrizers");
    Polynomial out = Polynomial::zero(ps.table());
    for (int i = 0; i < ps.rank(); ++i) {
        long m = beta[static_cast<std::size_t>(i)];
        if (m == 0) continue;
        out = out + Polynomial::variable(ps.table(), ps.lambda_var(i))
                        .scaled(Rational(m) / (*eps)[static_cast<std::size_t>(i)]);
    }
    return out;
}

}  // namespace

RationalFunction normalization_cocycle(const PoissonStructure& ps, const WeylWord& word,
                                       const Weight& weight) {
    const std::size_t p = word.size();
    std::vector<Weight> suffix(p + 1);
    suffix[p] = weight;
    for (std::size_t k = p; k-- > 1;)
        suffix[k] = reflect_weight(ps.cartan(), word[k], suffix[k + 1]);

    RationalFunction value = RationalFunction::one(ps.table());
    WeylWord prefix;
    for (std::size_t k = 1; k <= p; ++k) {
        int letter = word[k - 1];
        long exponent = suffix[k][static_cast<std::size_t>(letter)];
        if (exponent != 0) {
            RootVector beta = act_root(ps.cartan(), prefix, simple_root(ps.rank(), letter));
            auto factor = RationalFunction::of(-root_as_lambda_polynomial(ps, beta));
            value = value * factor.pow(static_cast<int>(exponent));
        }
        prefix.push_back(word[k - 1]);
    }
    return value;
}

RationalFunction rdot_cocycle(const PoissonStructure& ps, const WeylWord& word,
                              const Weight& weight) {
    auto refl = simple_reflections(ps);
    RationalFunction coeff = RationalFunction::one(ps.table());
    Weight cur = weight;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int i = *it;
        long exponent = cur[static_cast<std::size_t>(i)];
        auto alpha = RationalFunction::of(
            root_as_lambda_polynomial(ps, simple_root(ps.rank(), i)));
        auto factor = -(ps.phi(i) / alpha);
        coeff = refl[static_cast<std::size_t>(i)].apply(coeff) *
                factor.pow(static_cast<int>(exponent));
        cur = reflect_weight(ps.cartan(), i, cur);
    }
    return coeff;
}

CheckReport check_reconstruction(const PoissonStructure& ps, const WeylWord& word, int j) {
    CheckReport report;
    report.title = "reconstruction(phi_" + std::to_string(j + 1) + ")";
    auto refl = simple_reflections(ps);
    WeylWord wsj = word;
    wsj.push_back(j);
    // w(phi_j) * prod_{i != j} phi_w(L_i)^{-a_ij} = phi_w(L_j) phi_{w s_j}(L_j)
    std::vector<RationalFunction> lhs{apply_word(refl, word, ps.phi(j))};
    for (int i = 0; i < ps.rank(); ++i) {
        if (i == j) continue;
        int e = static_cast<int>(-ps.cartan().entry(i, j));
        auto factor = cocycle(ps, refl, word, fundamental_weight(ps.rank(), i)).value;
        for (int k = 0; k < e; ++k) lhs.push_back(factor);
    }
    std::vector<RationalFunction> rhs{
        cocycle(ps, refl, word, fundamental_weight(ps.rank(), j)).value,
        cocycle(ps, refl, wsj, fundamental_weight(ps.rank(), j)).value};
    bool ok = rf_products_equal(lhs, rhs);
    report.entries.push_back({"w(phi_j)", ok, "cocycle reconstruction", ok ? "holds" : "differs"});
    return report;
}

}  // namespace birweyl
