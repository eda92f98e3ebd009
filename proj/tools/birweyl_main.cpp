// Command-line interface: structure loading, expression parsing, the action
// and cocycle computations, and the verification suites.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "birweyl/expression.hpp"
#include "birweyl/verify.hpp"

using namespace birweyl;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFail = 1;
constexpr int kExitInputError = 2;

struct Options {
    std::string preset_name;
    std::string structure_path;
    std::string format = "text";
    std::string fixtures_dir = BIRWEYL_DEFAULT_FIXTURES_DIR;
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

PoissonStructure load_active_structure(const Options& opt) {
    if (!opt.preset_name.empty()) {
        if (!is_preset_name(opt.preset_name))
            throw InputError("unknown preset '" + opt.preset_name + "' (try 2A1, A2, B2, G2)");
        return preset(opt.preset_name);
    }
    if (opt.structure_path.empty())
        throw InputError("no structure selected: pass --preset or --structure");
    std::ifstream in(opt.structure_path);
    if (!in) throw InputError("cannot open structure file: " + opt.structure_path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("structure file is not valid JSON: " + std::string(e.what()));
    }
    auto loaded = load_structure(doc);
    if (std::holds_alternative<std::vector<PoissonError>>(loaded)) {
        std::string msg = "structure file fails validation:";
        for (const auto& e : std::get<std::vector<PoissonError>>(loaded))
            msg += "\n  " + to_string(e);
        throw InputError(msg);
    }
    return std::get<PoissonStructure>(loaded);
}

// Words are written 1-based, either comma-separated ("1,2,1") or as a digit
// string ("121").
WeylWord parse_word(const std::string& text, int rank) {
    WeylWord word;
    auto push = [&](long v) {
        if (v < 1 || v > rank)
            throw InputError("word letter " + std::to_string(v) + " outside 1.." +
                             std::to_string(rank));
        word.push_back(static_cast<int>(v) - 1);
    };
    if (text.empty()) return word;
    if (text.find(',') == std::string::npos) {
        for (char c : text) {
            if (c < '0' || c > '9') throw InputError("malformed word: " + text);
            push(c - '0');
        }
        return word;
    }
    std::size_t pos = 0;
    for (;;) {
        std::size_t comma = text.find(',', pos);
        std::string item =
            comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("malformed word: " + text);
        push(std::stol(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return word;
}

// Weights are written as "L1+2*L3", "L1-L2", or a JSON vector "[1,0,2]".
Weight parse_weight(const std::string& text, int rank) {
    Weight w(static_cast<std::size_t>(rank), 0);
    if (!text.empty() && text.front() == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception&) {
            throw InputError("malformed weight vector: " + text);
        }
        if (!j.is_array() || static_cast<int>(j.size()) != rank)
            throw InputError("weight vector must have " + std::to_string(rank) + " entries");
        for (int i = 0; i < rank; ++i)
            w[static_cast<std::size_t>(i)] = j[static_cast<std::size_t>(i)].get<long>();
        return w;
    }
    std::size_t pos = 0;
    auto fail = [&]() -> void { throw InputError("malformed weight: " + text); };
    while (pos < text.size()) {
        long sign = 1;
        while (pos < text.size() && (text[pos] == '+' || text[pos] == '-' || text[pos] == ' ')) {
            if (text[pos] == '-') sign = -sign;
            ++pos;
        }
        if (pos >= text.size()) fail();
        long coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                coeff = coeff * 10 + (text[pos++] - '0');
            if (pos < text.size() && text[pos] == '*') ++pos;
        }
        if (pos >= text.size() || (text[pos] != 'L' && text[pos] != 'l')) fail();
        ++pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail();
        long index = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            index = index * 10 + (text[pos++] - '0');
        if (index < 1 || index > rank)
            throw InputError("weight names L" + std::to_string(index) + " outside 1.." +
                             std::to_string(rank));
        w[static_cast<std::size_t>(index - 1)] += sign * coeff;
    }
    return w;
}

std::string weight_to_text(const Weight& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        long c = w[i];
        if (c == 0) continue;
        if (!out.empty())
            out += c > 0 ? "+" : "-";
        else if (c < 0)
            out += "-";
        long mag = c > 0 ? c : -c;
        if (mag != 1) out += std::to_string(mag) + "*";
        out += "L" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

void emit_value(const Options& opt, const nlohmann::json& json_doc, const std::string& text) {
    if (opt.format == "json")
        std::cout << json_doc.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

int emit_report(const Options& opt, const CheckReport& report, bool verbose) {
    if (opt.format == "json") {
        std::cout << report_to_json(report).dump(2) << "\n";
        return report.pass() ? kExitOk : kExitCheckFail;
    }
    return print_report(report, std::cout, verbose) == 0 ? kExitOk : kExitCheckFail;
}

int run_bracket(const Options& opt, const std::string& f_text, const std::string& g_text) {
    auto ps = load_active_structure(opt);
    auto f = parse_expression(f_text, ps.table());
    auto g = parse_expression(g_text, ps.table());
    auto value = ps.bracket(f, g);
    emit_value(opt, {{"value", value.to_string()}, {"terms", rational_function_to_json(value)}},
               value.to_string());
    return kExitOk;
}

int run_act(const Options& opt, const std::string& word_text, const std::string& expr) {
    auto ps = load_active_structure(opt);
    auto word = parse_word(word_text, ps.rank());
    auto value = apply_word(ps, word, parse_expression(expr, ps.table()));
    emit_value(opt, {{"value", value.to_string()}, {"terms", rational_function_to_json(value)}},
               value.to_string());
    return kExitOk;
}

int run_tau(const Options& opt, const std::string& word_text, const std::string& weight_text) {
    auto ps = load_active_structure(opt);
    auto word = parse_word(word_text, ps.rank());
    auto weight = parse_weight(weight_text, ps.rank());
    auto out = tau_action(ps, word, {RationalFunction::one(ps.table()), weight});
    nlohmann::json j{{"coefficient", out.coeff.to_string()}, {"weight", out.weight}};
    emit_value(opt, j,
               "coefficient " + out.coeff.to_string() + "\nweight " + weight_to_text(out.weight));
    return kExitOk;
}

int run_cocycle(const Options& opt, const std::string& word_text, const std::string& weight_text,
                bool certify, bool integrality) {
    auto ps = load_active_structure(opt);
    auto word = parse_word(word_text, ps.rank());
    auto weight = parse_weight(weight_text, ps.rank());
    auto cv = cocycle(ps, word, weight);
    int exit_code = kExitOk;
    std::string text = cv.value.to_string();
    if (certify && !cv.polynomial_form) {
        text += "\nNOT_POLYNOMIAL";
        exit_code = kExitCheckFail;
    }
    nlohmann::json j = cv.to_json(integrality);
    if (integrality) {
        auto r = check_integrality(ps, word, weight);
        j["integrality"] = r.pass() ? "PASS" : r.detail;
        if (!r.pass()) {
            text += "\n" + r.detail;
            exit_code = kExitCheckFail;
        }
    }
    emit_value(opt, j, text);
    return exit_code;
}

int run_normalization(const Options& opt, const std::string& word_text,
                      const std::string& weight_text) {
    auto ps = load_active_structure(opt);
    if (!ps.cartan().epsilon) throw InputError("NOT_SYMMETRIZABLE: no symmetrizers available");
    auto word = parse_word(word_text, ps.rank());
    auto weight = parse_weight(weight_text, ps.rank());
    auto value = normalization_cocycle(ps, word, weight);
    emit_value(opt, {{"value", value.to_string()}, {"terms", rational_function_to_json(value)}},
               value.to_string());
    return kExitOk;
}

int run_verify_fixtures(const Options& opt, const std::string& preset_name) {
    if (!is_preset_name(preset_name))
        throw InputError("unknown preset '" + preset_name + "' (try 2A1, A2, B2, G2)");
    auto fixture = load_fixture_file(opt.fixtures_dir + "/" + preset_name + ".json");
    return emit_report(opt, run_fixture_suite(fixture), false);
}

int run_verify_properties(const Options& opt, int max_len, std::uint64_t seed, bool verbose) {
    auto ps = load_active_structure(opt);
    return emit_report(opt, run_property_suite(ps, max_len, seed), verbose);
}

int run_validate(const Options& opt, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open structure file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("structure file is not valid JSON: " + std::string(e.what()));
    }
    auto loaded = load_structure(doc);
    if (std::holds_alternative<std::vector<PoissonError>>(loaded)) {
        const auto& errors = std::get<std::vector<PoissonError>>(loaded);
        nlohmann::json j{{"status", "FAIL"}, {"errors", nlohmann::json::array()}};
        std::string text;
        for (const auto& e : errors) {
            j["errors"].push_back(to_string(e));
            text += to_string(e) + "\n";
        }
        emit_value(opt, j, text + "FAIL");
        return kExitCheckFail;
    }
    const auto& ps = std::get<PoissonStructure>(loaded);
    nlohmann::json j{{"status", "PASS"},
                     {"rank", ps.rank()},
                     {"generators", ps.generator_count()},
                     {"max_height", ps.max_height()}};
    emit_value(opt, j,
               "PASS: rank " + std::to_string(ps.rank()) + ", " +
                   std::to_string(ps.generator_count()) + " generators, max height " +
                   std::to_string(ps.max_height()));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Birational Weyl group actions from nilpotent Poisson algebras"};
    app.require_subcommand(1);
    app.fallthrough();  // --preset etc. may follow the subcommand name

    Options opt;
    app.add_option("--preset", opt.preset_name, "built-in structure: 2A1, A2, B2, G2");
    app.add_option("--structure", opt.structure_path, "structure file (JSON)")
        ->excludes("--preset");
    app.add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--fixtures-dir", opt.fixtures_dir, "fixture directory");

    std::string word_text, weight_text, expr_f, expr_g;
    bool certify = false, integrality = false, verbose = false;
    int max_len = 4;
    std::uint64_t seed = 1;
    std::string fixture_preset, validate_path;

    auto* bracket_cmd = app.add_subcommand("bracket", "Poisson bracket {f, g}");
    bracket_cmd->add_option("f", expr_f)->required();
    bracket_cmd->add_option("g", expr_g)->required();

    auto* act_cmd = app.add_subcommand("act", "apply a Weyl word to an expression");
    act_cmd->add_option("--word", word_text)->required();
    act_cmd->add_option("expr", expr_f)->required();

    auto* tau_cmd = app.add_subcommand("tau", "action of a word on tau^Lambda");
    tau_cmd->add_option("--word", word_text)->required();
    tau_cmd->add_option("--weight", weight_text)->required();

    auto* cocycle_cmd = app.add_subcommand("cocycle", "tau-cocycle value phi_w(Lambda)");
    cocycle_cmd->add_option("--word", word_text)->required();
    cocycle_cmd->add_option("--weight", weight_text)->required();
    cocycle_cmd->add_flag("--certify-polynomial", certify,
                          "fail unless the value is a polynomial");
    cocycle_cmd->add_flag("--check-integrality", integrality,
                          "check the Z-form precondition and integer coefficients");

    auto* norm_cmd = app.add_subcommand("normalization", "normalization cocycle N_w(Lambda)");
    norm_cmd->add_option("--word", word_text)->required();
    norm_cmd->add_option("--weight", weight_text)->required();

    auto* verify_cmd = app.add_subcommand("verify", "verification suites");
    verify_cmd->require_subcommand(1);
    auto* fixtures_cmd = verify_cmd->add_subcommand("fixtures", "recompute a fixture table");
    fixtures_cmd->add_option("--preset", fixture_preset, "fixture preset name")->required();
    auto* properties_cmd = verify_cmd->add_subcommand("properties", "identity checks");
    properties_cmd->add_option("--max-len", max_len, "maximum word length");
    properties_cmd->add_option("--seed", seed, "sampling seed");
    properties_cmd->add_flag("--verbose", verbose, "print every check");

    auto* validate_cmd = app.add_subcommand("validate", "validate a structure file");
    validate_cmd->add_option("file", validate_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*bracket_cmd) return run_bracket(opt, expr_f, expr_g);
        if (*act_cmd) return run_act(opt, word_text, expr_f);
        if (*tau_cmd) return run_tau(opt, word_text, weight_text);
        if (*cocycle_cmd) return run_cocycle(opt, word_text, weight_text, certify, integrality);
        if (*norm_cmd) return run_normalization(opt, word_text, weight_text);
        if (*fixtures_cmd) return run_verify_fixtures(opt, fixture_preset);
        if (*properties_cmd) return run_verify_properties(opt, max_len, seed, verbose);
        if (*validate_cmd) return run_validate(opt, validate_path);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
