#include "birweyl/birational.hpp"

#include <stdexcept>

namespace birweyl {

namespace {

bool has_monomial_denominators(const std::vector<RationalFunction>& images) {
    for (const auto& f : images)
        if (f.den().term_count() > 1) return false;
    return true;
}

}  // namespace

Substitution Substitution::identity(VariableTablePtr table) {
    std::vector<RationalFunction> images;
    for (int id = 0; id < table->size(); ++id)
        images.push_back(RationalFunction::variable(table, id));
    return from_images(std::move(table), std::move(images));
}

Substitution Substitution::from_images(VariableTablePtr table,
                                       std::vector<RationalFunction> images) {
    if (static_cast<int>(images.size()) != table->size())
        throw std::invalid_argument("substitution needs one image per variable");
    for (const auto& f : images)
        if (!same_table(f.table(), table))
            throw std::invalid_argument("substitution image over a foreign variable table");
    Substitution s;
    s.table_ = std::move(table);
    s.monomial_denominators_ = has_monomial_denominators(images);
    s.images_ = std::move(images);
    return s;
}

namespace {

// Image of a polynomial when every variable image is N/x^D with monomial
// denominator: accumulate over the running common monomial denominator so
// everything stays in polynomial arithmetic.
struct MonoFraction {
    Polynomial num;
    Monomial den;
};

MonoFraction substitute_monomial_path(const Substitution& sub, const Polynomial& p) {
    const auto& table = p.table();
    const int n = table->size();
    // Power cache per variable: powers[id][k] = image(id)^k as num / x^den,
    // with the denominator's coefficient folded into num.
    std::vector<std::vector<MonoFraction>> powers(static_cast<std::size_t>(n));
    auto power_of = [&](int id, int e) -> const MonoFraction& {
        auto& cache = powers[static_cast<std::size_t>(id)];
        if (cache.empty())
            cache.push_back({Polynomial::constant(table, 1), Monomial(n)});
        while (static_cast<int>(cache.size()) <= e) {
            const auto& prev = cache.back();
            const auto& img = sub.image(id);
            cache.push_back({(prev.num * img.num()).scaled(1 / img.den().leading_coeff()),
                             prev.den.times(img.den().leading_monomial())});
        }
        return cache[static_cast<std::size_t>(e)];
    };

    // First pass: the common monomial denominator over all terms (the
    // denominator of image(id)^e is den(image(id))^e, exponent-linear).
    Monomial global(n);
    for (const auto& [m, c] : p.terms()) {
        Monomial tden(n);
        for (int id = 0; id < n; ++id) {
            int e = m.exp(id);
            if (e == 0) continue;
            const Monomial& d = sub.image(id).den().leading_monomial();
            for (int v = 0; v < n; ++v)
                if (d.exp(v) != 0) tden.set_exp(v, tden.exp(v) + e * d.exp(v));
        }
        global = Monomial::componentwise_max(global, tden);
    }

    // Second pass: accumulate every substituted term over that denominator.
    Polynomial acc = Polynomial::zero(table);
    for (const auto& [m, c] : p.terms()) {
        Polynomial tnum = Polynomial::constant(table, c);
        Monomial tden(n);
        for (int id = 0; id < n; ++id) {
            int e = m.exp(id);
            if (e == 0) continue;
            const auto& pw = power_of(id, e);
            tnum = tnum * pw.num;
            tden = tden.times(pw.den);
        }
        Monomial shift = *global.divided_by(tden);
        for (const auto& [tm, tc] : tnum.terms()) acc.add_term(tm.times(shift), tc);
    }
    return {std::move(acc), std::move(global)};
}

RationalFunction substitute_generic(const Substitution& sub, const Polynomial& p) {
    const auto& table = p.table();
    RationalFunction acc = RationalFunction::zero(table);
    std::vector<std::vector<RationalFunction>> powers(static_cast<std::size_t>(table->size()));
    auto power_of = [&](int id, int e) -> const RationalFunction& {
        auto& cache = powers[static_cast<std::size_t>(id)];
        if (cache.empty()) cache.push_back(RationalFunction::one(table));
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(cache.back() * sub.image(id));
        return cache[static_cast<std::size_t>(e)];
    };
    for (const auto& [m, c] : p.terms()) {
        RationalFunction term = RationalFunction::constant(table, c);
        for (int id = 0; id < table->size(); ++id)
            if (int e = m.exp(id); e != 0) term = term * power_of(id, e);
        acc = acc + term;
    }
    return acc;
}

}  // namespace

RationalFunction Substitution::apply(const RationalFunction& f) const {
    if (!same_table(f.table(), table_))
        throw std::invalid_argument("substitution applied across variable tables");
    if (monomial_denominators_) {
        MonoFraction num = substitute_monomial_path(*this, f.num());
        MonoFraction den = substitute_monomial_path(*this, f.den());
        if (den.num.is_zero()) throw std::domain_error("substituted denominator is zero");
        // (num.num / x^num.den) / (den.num / x^den.den)
        return RationalFunction::of(num.num.times_monomial(den.den),
                                    den.num.times_monomial(num.den));
    }
    RationalFunction num = substitute_generic(*this, f.num());
    RationalFunction den = substitute_generic(*this, f.den());
    if (den.is_zero()) throw std::domain_error("substituted denominator is zero");
    return num / den;
}

namespace {

// Generator images of exp((t/phi_i) ad(phi_i)); lambda images supplied by
// the caller.
std::vector<RationalFunction> exponential_images(const PoissonStructure& ps, int i,
                                                 const Polynomial& t,
                                                 std::vector<RationalFunction> lambda_images) {
    const auto& table = ps.table();
    std::vector<RationalFunction> images = std::move(lambda_images);
    auto phi_poly = Polynomial::variable(table, ps.phi_var(i));
    for (int k = 0; k < ps.generator_count(); ++k) {
        int var = ps.generator_var(k);
        // sum_m (t^m / m!) ad^m(g) / phi_i^m, a finite sum by nilpotency.
        Polynomial num = Polynomial::variable(table, var);  // m = 0 term times phi^K
        Polynomial ad = num;
        Polynomial tpow = Polynomial::constant(table, 1);
        Rational factorial(1);
        std::vector<Polynomial> summands{num};
        int depth = 0;
        for (;;) {
            ad = ps.bracket(phi_poly, ad);
            if (ad.is_zero()) break;
            ++depth;
            factorial *= depth;
            tpow = tpow * t;
            summands.push_back((tpow * ad).scaled(1 / factorial));
        }
        // Common denominator phi_i^depth: summand m gains phi_i^(depth-m).
        Polynomial total = Polynomial::zero(table);
        for (std::size_t m = 0; m < summands.size(); ++m)
            total = total + summands[m] * phi_poly.pow(depth - static_cast<int>(m));
        images.push_back(RationalFunction::of(std::move(total), phi_poly.pow(depth)));
    }
    return images;
}

std::vector<RationalFunction> lambda_reflection_images(const PoissonStructure& ps, int i) {
    const auto& table = ps.table();
    std::vector<RationalFunction> images;
    for (int j = 0; j < ps.rank(); ++j) {
        Polynomial img = Polynomial::variable(table, ps.lambda_var(j)) -
                         Polynomial::variable(table, ps.lambda_var(i))
                             .scaled(Rational(ps.cartan().entry(j, i)));
        images.push_back(RationalFunction::of(std::move(img)));
    }
    return images;
}

std::vector<RationalFunction> lambda_identity_images(const PoissonStructure& ps) {
    std::vector<RationalFunction> images;
    for (int j = 0; j < ps.rank(); ++j)
        images.push_back(RationalFunction::variable(ps.table(), ps.lambda_var(j)));
    return images;
}

}  // namespace

Substitution simple_reflection(const PoissonStructure& ps, int i) {
    auto lambda_i = Polynomial::variable(ps.table(), ps.lambda_var(i));
    return Substitution::from_images(
        ps.table(), exponential_images(ps, i, lambda_i, lambda_reflection_images(ps, i)));
}

Substitution r_operator(const PoissonStructure& ps, int i, const Polynomial& t) {
    for (const auto& [m, c] : t.terms())
        for (int id = ps.rank(); id < ps.table()->size(); ++id)
            if (m.exp(id) != 0)
                throw std::invalid_argument("R-operator parameter must be a polynomial in lambdas");
    return Substitution::from_images(ps.table(),
                                     exponential_images(ps, i, t, lambda_identity_images(ps)));
}

Substitution reflect_lambda(const PoissonStructure& ps, int i) {
    auto images = lambda_reflection_images(ps, i);
    for (int k = 0; k < ps.generator_count(); ++k)
        images.push_back(RationalFunction::variable(ps.table(), ps.generator_var(k)));
    return Substitution::from_images(ps.table(), std::move(images));
}

std::vector<Substitution> simple_reflections(const PoissonStructure& ps) {
    std::vector<Substitution> out;
    for (int i = 0; i < ps.rank(); ++i) out.push_back(simple_reflection(ps, i));
    return out;
}

RationalFunction apply_word(const std::vector<Substitution>& reflections, const WeylWord& word,
                            RationalFunction f) {
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        f = reflections[static_cast<std::size_t>(*it)].apply(f);
    return f;
}

RationalFunction apply_word(const PoissonStructure& ps, const WeylWord& word,
                            RationalFunction f) {
    return apply_word(simple_reflections(ps), word, std::move(f));
}

namespace {

CheckEntry compare_entry(const std::string& name, const RationalFunction& lhs,
                         const RationalFunction& rhs) {
    return {name, rf_eq(lhs, rhs), lhs.to_string(), rhs.to_string()};
}

}  // namespace

CheckReport check_braid(const PoissonStructure& ps, int i, int j) {
    CheckReport report;
    report.title = "braid(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    int m = coxeter_m(ps.cartan(), i, j);
    if (m == kCoxeterInfinity) {
        report.skipped = true;
        report.skip_reason = "SKIPPED_INFINITE";
        return report;
    }
    WeylWord lhs, rhs;
    for (int k = 0; k < m; ++k) {
        lhs.push_back(k % 2 == 0 ? i : j);
        rhs.push_back(k % 2 == 0 ? j : i);
    }
    auto refl = simple_reflections(ps);
    for (int id = 0; id < ps.table()->size(); ++id) {
        auto f = RationalFunction::variable(ps.table(), id);
        report.entries.push_back(compare_entry(ps.table()->name(id),
                                               apply_word(refl, lhs, f),
                                               apply_word(refl, rhs, f)));
    }
    return report;
}

CheckReport check_canonical(const PoissonStructure& ps, int i) {
    CheckReport report;
    report.title = "canonical(s" + std::to_string(i + 1) + ")";
    auto s = simple_reflection(ps, i);
    for (int p = 0; p < ps.generator_count(); ++p)
        for (int q = p + 1; q < ps.generator_count(); ++q) {
            auto gp = RationalFunction::variable(ps.table(), ps.generator_var(p));
            auto gq = RationalFunction::variable(ps.table(), ps.generator_var(q));
            auto lhs = s.apply(ps.bracket(gp, gq));
            auto rhs = ps.bracket(s.apply(gp), s.apply(gq));
            report.entries.push_back(compare_entry(
                "{" + ps.generator(p).name + "," + ps.generator(q).name + "}", lhs, rhs));
        }
    return report;
}

RationalFunction alternating_product(const PoissonStructure& ps,
                                     const std::vector<std::pair<int, int>>& chain) {
    auto refl = simple_reflections(ps);
    FractionAccumulator value(ps.table());
    WeylWord prefix;
    for (const auto& [letter, exponent] : chain) {
        auto base = apply_word(refl, prefix, ps.phi(letter));
        for (int k = 0; k < exponent; ++k) value.multiply(base);
        prefix.push_back(letter);
    }
    return value.value();
}

CheckReport check_lemma_identities(const PoissonStructure& ps, int i, int j) {
    long aij = ps.cartan().entry(i, j), aji = ps.cartan().entry(j, i);
    if (aji != -1 && aij == -1) {
        std::swap(i, j);
        std::swap(aij, aji);
    }
    if (!(aji == -1 && (aij == -1 || aij == -2 || aij == -3)))
        throw std::domain_error("CASE_MISMATCH: (a_ij, a_ji) fits none of the rank-2 cases");

    // Each identity says E is invariant under the outer letter.
    struct Identity {
        std::vector<std::pair<int, int>> chain;
        int outer;
    };
    std::vector<Identity> identities;
    if (aij == -1) {
        identities.push_back({{{j, 1}, {i, 1}}, i});
        identities.push_back({{{i, 1}, {j, 1}}, j});
    } else if (aij == -2) {
        identities.push_back({{{i, 1}, {j, 1}, {i, 1}}, j});
        identities.push_back({{{j, 1}, {i, 2}, {j, 1}}, i});
    } else {
        identities.push_back({{{i, 1}, {j, 1}, {i, 2}, {j, 1}, {i, 1}}, j});
        identities.push_back({{{j, 1}, {i, 3}, {j, 2}, {i, 3}, {j, 1}}, i});
    }

    CheckReport report;
    report.title = "lemma_identities(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                   ") case (" + std::to_string(aij) + "," + std::to_string(aji) + ")";
    for (std::size_t k = 0; k < identities.size(); ++k) {
        auto value = alternating_product(ps, identities[k].chain);
        auto image = simple_reflection(ps, identities[k].outer).apply(value);
        report.entries.push_back(compare_entry(
            "identity " + std::to_string(k + 1) + " invariant under s" +
                std::to_string(identities[k].outer + 1),
            value, image));
    }
    return report;
}

}  // namespace birweyl
