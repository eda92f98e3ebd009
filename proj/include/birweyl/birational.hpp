#pragma once

#include <string>
#include <vector>

#include "birweyl/poisson.hpp"

namespace birweyl {

// A field homomorphism of K given by simultaneous images of every variable.
// For the simple reflections built here, lambda images are degree-1
// polynomials and generator images have denominators that are powers of the
// corresponding phi_i.
class Substitution {
public:
    static Substitution identity(VariableTablePtr table);
    static Substitution from_images(VariableTablePtr table, std::vector<RationalFunction> images);

    const VariableTablePtr& table() const { return table_; }
    const RationalFunction& image(int var_id) const {
        return images_[static_cast<std::size_t>(var_id)];
    }

    // Homomorphic image. Throws std::domain_error when the substituted
    // denominator vanishes (cannot occur for the reflections built here).
    RationalFunction apply(const RationalFunction& f) const;

private:
    Substitution() = default;
    VariableTablePtr table_;
    std::vector<RationalFunction> images_;
    bool monomial_denominators_ = false;
};

// s_i = exp((lambda_i/phi_i) ad(phi_i)) o r_i: lambda_j maps to
// lambda_j - a_{ji} lambda_i, a generator g maps to the finite sum
// sum_k (lambda_i^k / k!) ad(phi_i)^k(g) / phi_i^k.
Substitution simple_reflection(const PoissonStructure& ps, int i);

// R_i(t) = exp((t/phi_i) ad(phi_i)): fixes the lambdas, generators map to
// sum_k (t^k / k!) ad(phi_i)^k(g) / phi_i^k. t is a polynomial in lambdas.
Substitution r_operator(const PoissonStructure& ps, int i, const Polynomial& t);

// The linear part r_i alone: lambda_j -> lambda_j - a_{ji} lambda_i,
// generators fixed.
Substitution reflect_lambda(const PoissonStructure& ps, int i);

// s_{j1}(s_{j2}(...s_{jp}(f)...)): operator composition, first letter
// outermost.
RationalFunction apply_word(const PoissonStructure& ps, const WeylWord& word, RationalFunction f);
RationalFunction apply_word(const std::vector<Substitution>& reflections, const WeylWord& word,
                            RationalFunction f);

// All n simple reflections, hoisted once for hot loops.
std::vector<Substitution> simple_reflections(const PoissonStructure& ps);

struct CheckEntry {
    std::string name;
    bool pass;
    std::string expected;  // canonical text of the two compared values
    std::string actual;
    double ms = 0;
};

struct CheckReport {
    std::string title;
    bool skipped = false;
    std::string skip_reason;
    std::vector<CheckEntry> entries;
    bool pass() const {
        if (skipped) return true;
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
};

// Applies both alternating words of length m_ij to every variable and
// compares; skips with SKIPPED_INFINITE when m_ij is infinite.
CheckReport check_braid(const PoissonStructure& ps, int i, int j);

// s_i({g,h}) = {s_i(g), s_i(h)} for all generator pairs.
CheckReport check_canonical(const PoissonStructure& ps, int i);

// The product identities of the three rank-2 cases (-1,-1), (-2,-1),
// (-3,-1): each says a certain alternating product of phi's and s-images is
// invariant under the outer letter. Throws std::domain_error (CASE_MISMATCH)
// when (a_ij, a_ji) matches none of the cases in either orientation.
CheckReport check_lemma_identities(const PoissonStructure& ps, int i, int j);

// Evaluates phi_{a1}^{e1} * s_{a1}(phi_{a2}^{e2} * s_{a2}(...)), i.e.
// prod_k s_{a1}..s_{a(k-1)}(phi_{ak}^{ek}).
RationalFunction alternating_product(const PoissonStructure& ps,
                                     const std::vector<std::pair<int, int>>& chain);

}  // namespace birweyl
