#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "birweyl/cartan.hpp"
#include "birweyl/rational_function.hpp"

namespace birweyl {

struct GeneratorSpec {
    std::string name;
    RootVector root;  // positive root; height = sum of coordinates
};

enum class PoissonErrorKind { Jacobi, Serre, Grading, Structure };

struct PoissonError {
    PoissonErrorKind kind;
    std::string detail;
};

std::string to_string(const PoissonError& e);

// Finite graded nilpotent Lie-Poisson structure: a basis of generators with
// positive roots, structure constants, and the distinguished height-1
// generators phi_i (one per index, with root alpha_i). Values are immutable
// after construction; the bracket and all derived operations are pure.
class PoissonStructure {
public:
    // Bracket table entry: {left, right} = sum of coeff * generator, plus an
    // optional constant component (generator name "1", used by the numeric
    // height-2 truncation).
    struct BracketEntry {
        std::string left, right;
        std::vector<std::pair<std::string, Rational>> value;
    };

    // Assembles the structure without validating the Poisson axioms; name
    // clashes and malformed shapes still throw std::invalid_argument.
    static PoissonStructure assemble(CartanData cartan,
                                     std::vector<std::string> lambda_names,
                                     std::vector<GeneratorSpec> generators,
                                     std::vector<std::string> phi_names,
                                     const std::vector<BracketEntry>& brackets);

    // Jacobi on all basis triples, Serre relations, grading consistency.
    std::vector<PoissonError> validate() const;

    const CartanData& cartan() const { return cartan_; }
    const VariableTablePtr& table() const { return table_; }
    int rank() const { return cartan_.rank(); }
    int generator_count() const { return static_cast<int>(gens_.size()); }
    const GeneratorSpec& generator(int k) const { return gens_[static_cast<std::size_t>(k)]; }
    // Variable id of the k-th generator / of phi_i / of lambda_i.
    int generator_var(int k) const;
    int phi_var(int i) const;
    int lambda_var(int i) const { return table_->lambda_id(i); }
    RationalFunction phi(int i) const { return RationalFunction::variable(table_, phi_var(i)); }
    RationalFunction lambda(int i) const { return RationalFunction::variable(table_, lambda_var(i)); }
    int max_height() const;

    // {g_p, g_q} for basis generators, by table lookup.
    const Polynomial& bracket_generators(int p, int q) const;

    // Bracket extended to polynomials by bilinearity and the Leibniz rule;
    // lambda variables are central.
    Polynomial bracket(const Polynomial& f, const Polynomial& g) const;
    // ... and to quotients by the derivation quotient rule.
    RationalFunction bracket(const RationalFunction& f, const RationalFunction& g) const;

    // ad(phi_i)^k(f); finite by local nilpotency.
    RationalFunction ad_power(int i, const RationalFunction& f, int k) const;
    Polynomial ad_power(int i, const Polynomial& f, int k) const;

    nlohmann::json to_json() const;

private:
    CartanData cartan_;
    VariableTablePtr table_;
    std::vector<GeneratorSpec> gens_;   // in table order
    std::vector<int> phi_;              // generator position of phi_i per i
    std::vector<std::vector<Polynomial>> bracket_;  // antisymmetric matrix over generators
};

// The exact structures of the rank-2 examples: "2A1", "A2", "B2", "G2".
// Throws std::invalid_argument for unknown names.
PoissonStructure preset(const std::string& name);
bool is_preset_name(const std::string& name);

// The height-2 truncated structure: generators f1..fn of height 1 plus
// central z_{ ij} = {f_i, f_j} for i < j with a_ij != 0. When `constants` is
// given, {f_i, f_j} is instead specialized to the constant u_ij / eps_i.
// Requires a symmetrizable Cartan matrix.
PoissonStructure preset_height2(
    const CartanData& cartan,
    const std::optional<std::map<std::pair<int, int>, Rational>>& constants = std::nullopt);

// Structure-file document handling (see README for the schema). Parse errors
// throw std::invalid_argument with field diagnostics; validation errors are
// returned.
std::variant<PoissonStructure, std::vector<PoissonError>> load_structure(
    const nlohmann::json& document);

}  // namespace birweyl
