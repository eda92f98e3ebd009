#pragma once

#include <cstdint>
#include <json.hpp>

#include "birweyl/tau.hpp"

namespace birweyl {

// Reference tables for one rank-2 structure: the s-action rows, the
// tau-cocycle values, and invariance facts. Letters and words are 1-based
// in the data files.
struct FixtureSet {
    struct SAction {
        int letter;  // 1-based
        std::string var;
        std::string image;
    };
    struct Cocycle {
        std::vector<std::vector<int>> words;  // 1-based; all share the value
        Weight weight;
        std::string value;
    };
    struct Invariance {
        std::string expression;
        int letter;  // 1-based
    };

    std::string preset;
    std::vector<SAction> s_action;
    std::vector<Cocycle> cocycle;
    std::vector<Invariance> invariance;

    static FixtureSet from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

FixtureSet load_fixture_file(const std::string& path);

// Flips the sign of one term of one fixture value (chosen by the seed);
// run_fixture_suite must then fail.
FixtureSet mutate_flip_sign(const FixtureSet& fixture, std::uint64_t seed);

// Recomputes every entry through the birational/tau modules and compares
// with exact rational-function equality. Cocycle entries are checked along
// both computation paths (product formula and tau-action).
CheckReport run_fixture_suite(const FixtureSet& fixture);

// Involution, braid, canonical-transformation, rank-2 product identities,
// cocycle relations, word independence, regularity, reconstruction and the
// ratio identity, with deterministic sampling from the seed.
CheckReport run_property_suite(const PoissonStructure& ps, int max_word_len, std::uint64_t seed);

nlohmann::json report_to_json(const CheckReport& report);
// One line per entry plus a summary; returns the exit code (0 pass, 1 fail).
int print_report(const CheckReport& report, std::ostream& os, bool verbose);

// Deterministic sampling helpers shared by the suites and the tests.
struct Sampler {
    explicit Sampler(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next();
    long bounded(long lo, long hi);  // inclusive
    std::uint64_t state;
};

Polynomial random_polynomial(Sampler& rng, const VariableTablePtr& table, int max_terms,
                             int max_exp);
WeylWord random_word(Sampler& rng, int rank, int max_len);
Weight random_weight(Sampler& rng, int rank, long bound);

}  // namespace birweyl
