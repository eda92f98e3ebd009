#pragma once

#include <json.hpp>

#include "birweyl/birational.hpp"

namespace birweyl {

// coeff * tau^weight, where tau^Lambda = prod_i tau_i^{<h_i, Lambda>}.
struct TauTerm {
    RationalFunction coeff;
    Weight weight;
};

// phi_w(Lambda) together with its certified polynomial form when den
// divides num exactly.
struct CocycleValue {
    WeylWord word;
    Weight weight;
    RationalFunction value;
    std::optional<Polynomial> polynomial_form;

    nlohmann::json to_json(bool with_integrality = false) const;
};

// Letter-by-letter action of a word on a tau-term: each s_i multiplies the
// coefficient by phi_i^{<h_i, current weight>}, applies s_i to the
// coefficient, and reflects the weight. Innermost (last) letter first.
TauTerm tau_action(const PoissonStructure& ps, const WeylWord& word, TauTerm t);
TauTerm tau_action(const PoissonStructure& ps, const std::vector<Substitution>& reflections,
                   const WeylWord& word, TauTerm t);

// phi_w(Lambda) by the product formula
//   prod_{k=1}^p s_{j1}..s_{j(k-1)}( phi_{jk} ^ <h_{jk}, r_{j(k+1)}..r_{jp} Lambda> ),
// with negative exponents taken as field inverses. polynomial_form is
// attached when exact division succeeds.
CocycleValue cocycle(const PoissonStructure& ps, const WeylWord& word, const Weight& weight);
CocycleValue cocycle(const PoissonStructure& ps, const std::vector<Substitution>& reflections,
                     const WeylWord& word, const Weight& weight);

// phi_w(L+L') = phi_w(L) phi_w(L') and phi_{ww'}(L) = w(phi_{w'}(L)) phi_w(w'.L).
CheckReport check_cocycle_relations(const PoissonStructure& ps, const WeylWord& w,
                                    const WeylWord& w2, const Weight& l, const Weight& l2);

// All words must represent the same group element (verified on L and Q);
// then all cocycle values must agree.
CheckReport check_word_independence(const PoissonStructure& ps,
                                    const std::vector<WeylWord>& words, const Weight& weight);

// Asserts rf_to_polynomial succeeds for the given (word, weight); reports
// the polynomial.
CheckReport check_regularity(const PoissonStructure& ps, const WeylWord& word,
                             const Weight& weight);

// Z-form precondition (divided powers of ad(phi_j) keep the integral span)
// plus integrality of the cocycle polynomial's coefficients.
enum class IntegralityStatus { Pass, PreconditionFail, IntegralityFail, NotPolynomial };
struct IntegralityReport {
    IntegralityStatus status;
    std::string detail;
    bool pass() const { return status == IntegralityStatus::Pass; }
};
// Checks condition (iii) on the basis: (1/k!) ad(phi_j)^k maps the integral
// span of the generators into itself, for every j and k; also requires the
// structure constants to be integers.
bool divided_power_condition(const PoissonStructure& ps, std::string* why = nullptr);
IntegralityReport check_integrality(const PoissonStructure& ps, const WeylWord& word,
                                    const Weight& weight);

// N_wdot(Lambda) = prod_k (-s_{j1}..s_{j(k-1)}(alpha_{jk}))^{<h_{jk}, s_{j(k+1)}..s_{jp} Lambda>}
// as a rational function purely in the lambda variables via alpha_i =
// lambda_i / eps_i. Requires symmetrizers. Polynomial in the alphas for
// reduced words and dominant Lambda.
RationalFunction normalization_cocycle(const PoissonStructure& ps, const WeylWord& word,
                                       const Weight& weight);

// The dressing-action counterpart: computed like tau_action but with the
// per-letter factor (-phi_i/alpha_i)^{<h_i, weight>}. Satisfies
// rdot = phi_w(Lambda) / N_wdot(Lambda) for reduced words.
RationalFunction rdot_cocycle(const PoissonStructure& ps, const WeylWord& word,
                              const Weight& weight);

// w(phi_j) = phi_w(L_j) phi_{w sj}(L_j) / prod_{i != j} phi_w(L_i)^{-a_ij}.
CheckReport check_reconstruction(const PoissonStructure& ps, const WeylWord& word, int j);

}  // namespace birweyl
