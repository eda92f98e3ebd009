#include "birweyl/poisson.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace birweyl {

std::string to_string(const PoissonError& e) {
    const char* tag = "";
    switch (e.kind) {
        case PoissonErrorKind::Jacobi: tag = "JACOBI_FAIL"; break;
        case PoissonErrorKind::Serre: tag = "SERRE_FAIL"; break;
        case PoissonErrorKind::Grading: tag = "GRADING_FAIL"; break;
        case PoissonErrorKind::Structure: tag = "STRUCTURE_FAIL"; break;
    }
    return std::string(tag) + ": " + e.detail;
}

namespace {

int root_height(const RootVector& r) {
    long h = 0;
    for (auto m : r) h += m;
    return static_cast<int>(h);
}

std::vector<std::string> default_lambda_names(int rank) {
    // a, b, c, ... ; falls back to l<i> past 'z' - 'a'.
    std::vector<std::string> names;
    for (int i = 0; i < rank; ++i) {
        if (i < 26)
            names.push_back(std::string(1, static_cast<char>('a' + i)));
        else
            names.push_back("l" + std::to_string(i + 1));
    }
    return names;
}

}  // namespace

PoissonStructure PoissonStructure::assemble(CartanData cartan,
                                            std::vector<std::string> lambda_names,
                                            std::vector<GeneratorSpec> generators,
                                            std::vector<std::string> phi_names,
                                            const std::vector<BracketEntry>& brackets) {
    const int n = cartan.rank();
    if (lambda_names.empty()) lambda_names = default_lambda_names(n);
    if (static_cast<int>(lambda_names.size()) != n)
        throw std::invalid_argument("lambda name count does not match the Cartan rank");
    if (static_cast<int>(phi_names.size()) != n)
        throw std::invalid_argument("phi name count does not match the Cartan rank");

    for (const auto& g : generators) {
        if (static_cast<int>(g.root.size()) != n)
            throw std::invalid_argument("generator '" + g.name + "' root has wrong rank");
        if (!is_positive_root(g.root))
            throw std::invalid_argument("generator '" + g.name + "' root is not positive");
    }
    // Table order: generators sorted by (height, declaration index).
    std::stable_sort(generators.begin(), generators.end(),
                     [](const GeneratorSpec& a, const GeneratorSpec& b) {
                         return root_height(a.root) < root_height(b.root);
                     });
    std::vector<std::pair<std::string, int>> gen_table;
    for (const auto& g : generators) gen_table.emplace_back(g.name, root_height(g.root));

    PoissonStructure ps;
    ps.cartan_ = std::move(cartan);
    ps.table_ = VariableTable::create(std::move(lambda_names), std::move(gen_table));
    ps.gens_ = std::move(generators);

    auto gen_pos = [&](const std::string& name) {
        for (int k = 0; k < ps.generator_count(); ++k)
            if (ps.gens_[static_cast<std::size_t>(k)].name == name) return k;
        throw std::invalid_argument("unknown generator name '" + name + "'");
    };
    for (int i = 0; i < n; ++i) ps.phi_.push_back(gen_pos(phi_names[static_cast<std::size_t>(i)]));

    const int g = ps.generator_count();
    ps.bracket_.assign(static_cast<std::size_t>(g),
                       std::vector<Polynomial>(static_cast<std::size_t>(g),
                                               Polynomial::zero(ps.table_)));
    for (const auto& entry : brackets) {
        int p = gen_pos(entry.left), q = gen_pos(entry.right);
        if (p == q) throw std::invalid_argument("bracket {g,g} must be omitted (it is zero)");
        Polynomial value = Polynomial::zero(ps.table_);
        for (const auto& [name, coeff] : entry.value) {
            if (name.empty() || name == "1") {
                value = value + Polynomial::constant(ps.table_, coeff);
            } else {
                auto id = ps.table_->find(name);
                if (!id || ps.table_->is_lambda(*id))
                    throw std::invalid_argument("bracket value names unknown generator '" +
                                                name + "'");
                value = value + Polynomial::variable(ps.table_, *id).scaled(coeff);
            }
        }
        ps.bracket_[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = value;
        ps.bracket_[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)] = -value;
    }
    return ps;
}

int PoissonStructure::generator_var(int k) const { return table_->generator_id(k); }

int PoissonStructure::phi_var(int i) const {
    return generator_var(phi_[static_cast<std::size_t>(i)]);
}

int PoissonStructure::max_height() const {
    int h = 0;
    for (const auto& g : gens_) h = std::max(h, root_height(g.root));
    return h;
}

const Polynomial& PoissonStructure::bracket_generators(int p, int q) const {
    return bracket_[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
}

std::vector<PoissonError> PoissonStructure::validate() const {
    std::vector<PoissonError> errors;
    const int n = rank();
    const int g = generator_count();

    // phi_i must be the height-1 generator attached to alpha_i.
    for (int i = 0; i < n; ++i) {
        const auto& spec = gens_[static_cast<std::size_t>(phi_[static_cast<std::size_t>(i)])];
        RootVector alpha = simple_root(n, i);
        if (spec.root != alpha)
            errors.push_back({PoissonErrorKind::Grading,
                              "phi_" + std::to_string(i + 1) + " ('" + spec.name +
                                  "') does not have root alpha_" + std::to_string(i + 1)});
    }

    // Bracket values: linear combinations of basis elements (constants
    // allowed), with every generator component matching the root sum.
    for (int p = 0; p < g; ++p) {
        for (int q = p + 1; q < g; ++q) {
            const Polynomial& v = bracket_generators(p, q);
            if (v.is_zero()) continue;
            RootVector sum = gens_[static_cast<std::size_t>(p)].root;
            for (int k = 0; k < n; ++k)
                sum[static_cast<std::size_t>(k)] +=
                    gens_[static_cast<std::size_t>(q)].root[static_cast<std::size_t>(k)];
            std::string pair_name = "{" + gens_[static_cast<std::size_t>(p)].name + "," +
                                    gens_[static_cast<std::size_t>(q)].name + "}";
            for (const auto& [m, c] : v.terms()) {
                if (m.is_one()) continue;  // constant component
                int var = -1;
                bool linear = m.degree() == 1;
                for (int id = 0; id < table_->size() && linear; ++id)
                    if (m.exp(id) != 0) {
                        var = id;
                        if (table_->is_lambda(id)) linear = false;
                    }
                if (!linear) {
                    errors.push_back({PoissonErrorKind::Grading,
                                      pair_name + " is not a linear combination of generators"});
                    continue;
                }
                const auto& comp = gens_[static_cast<std::size_t>(var - table_->lambda_count())];
                if (comp.root != sum)
                    errors.push_back({PoissonErrorKind::Grading,
                                      pair_name + " contains '" + comp.name +
                                          "' whose root is not the root sum"});
            }
        }
    }
    if (!errors.empty()) return errors;  // bracket evaluation needs a sane table

    // Jacobi identity on all basis triples.
    for (int p = 0; p < g; ++p)
        for (int q = p + 1; q < g; ++q)
            for (int r = q + 1; r < g; ++r) {
                auto P = Polynomial::variable(table_, generator_var(p));
                auto Q = Polynomial::variable(table_, generator_var(q));
                auto R = Polynomial::variable(table_, generator_var(r));
                Polynomial jac = bracket(P, bracket(Q, R)) + bracket(Q, bracket(R, P)) +
                                 bracket(R, bracket(P, Q));
                if (!jac.is_zero())
                    errors.push_back({PoissonErrorKind::Jacobi,
                                      "triple (" + gens_[static_cast<std::size_t>(p)].name + "," +
                                          gens_[static_cast<std::size_t>(q)].name + "," +
                                          gens_[static_cast<std::size_t>(r)].name + ")"});
            }

    // Serre relations ad(phi_i)^{1 - a_ij}(phi_j) = 0.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            auto target = Polynomial::variable(table_, phi_var(j));
            int k = 1 - static_cast<int>(cartan_.entry(i, j));
            if (!ad_power(i, target, k).is_zero())
                errors.push_back({PoissonErrorKind::Serre,
                                  "(i,j)=(" + std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + ")"});
        }
    return errors;
}

Polynomial PoissonStructure::bracket(const Polynomial& f, const Polynomial& g) const {
    require_same_table(f, g);
    if (!same_table(f.table(), table_))
        throw std::invalid_argument("bracket arguments over a foreign variable table");
    // Biderivation formula over the generator coordinates: lambda variables
    // are central and contribute nothing.
    Polynomial out = Polynomial::zero(table_);
    const int gcount = generator_count();
    std::vector<std::pair<int, Polynomial>> df;
    for (int p = 0; p < gcount; ++p) {
        Polynomial d = f.derivative(generator_var(p));
        if (!d.is_zero()) df.emplace_back(p, std::move(d));
    }
    if (df.empty()) return out;
    for (int q = 0; q < gcount; ++q) {
        Polynomial dg = g.derivative(generator_var(q));
        if (dg.is_zero()) continue;
        for (const auto& [p, dfp] : df) {
            const Polynomial& c = bracket_[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
            if (c.is_zero()) continue;
            out = out + c * dfp * dg;
        }
    }
    return out;
}

RationalFunction PoissonStructure::bracket(const RationalFunction& f,
                                           const RationalFunction& g) const {
    const Polynomial &n1 = f.num(), &d1 = f.den(), &n2 = g.num(), &d2 = g.den();
    if (d1.is_one() && d2.is_one()) return RationalFunction::of(bracket(n1, n2));
    // Quotient rule for a biderivation:
    // {n1/d1, n2/d2} = ({n1,n2} d1 d2 - {d1,n2} n1 d2 - {n1,d2} d1 n2
    //                   + {d1,d2} n1 n2) / (d1^2 d2^2)
    Polynomial num = bracket(n1, n2) * d1 * d2 - bracket(d1, n2) * n1 * d2 -
                     bracket(n1, d2) * d1 * n2 + bracket(d1, d2) * n1 * n2;
    return RationalFunction::of(std::move(num), d1 * d1 * d2 * d2);
}

Polynomial PoissonStructure::ad_power(int i, const Polynomial& f, int k) const {
    Polynomial out = f;
    auto phi_i = Polynomial::variable(table_, phi_var(i));
    for (int t = 0; t < k && !out.is_zero(); ++t) out = bracket(phi_i, out);
    return out;
}

RationalFunction PoissonStructure::ad_power(int i, const RationalFunction& f, int k) const {
    RationalFunction out = f;
    auto phi_i = phi(i);
    for (int t = 0; t < k && !out.is_zero(); ++t) out = bracket(phi_i, out);
    return out;
}

namespace {

PoissonStructure make_preset(const std::string& name,
                             std::vector<std::vector<long>> gcm,
                             std::vector<GeneratorSpec> gens,
                             std::vector<std::string> phi_names,
                             const std::vector<std::tuple<std::string, std::string, std::string>>&
                                 bracket_text /* (left, right, coeff*gen expression) */) {
    auto validated = validate_gcm(gcm);
    CartanData cartan = with_symmetrizers(std::get<CartanData>(validated));
    std::vector<PoissonStructure::BracketEntry> entries;
    for (const auto& [l, r, expr] : bracket_text) {
        // Bracket values are c*gen with integer c; parse by hand.
        std::size_t star = expr.find('*');
        Rational c = star == std::string::npos ? Rational(1)
                                               : rational_from_string(expr.substr(0, star));
        std::string gname = star == std::string::npos ? expr : expr.substr(star + 1);
        entries.push_back({l, r, {{gname, c}}});
    }
    PoissonStructure ps = PoissonStructure::assemble(cartan, {"a", "b"}, gens, phi_names, entries);
    auto errors = ps.validate();
    if (!errors.empty()) throw std::logic_error("preset '" + name + "' failed validation");
    return ps;
}

}  // namespace

bool is_preset_name(const std::string& name) {
    return name == "2A1" || name == "A2" || name == "B2" || name == "G2";
}

PoissonStructure preset(const std::string& name) {
    if (name == "2A1")
        return make_preset(name, {{2, 0}, {0, 2}},
                           {{"x", {1, 0}}, {"y", {0, 1}}}, {"x", "y"}, {});
    if (name == "A2")
        return make_preset(name, {{2, -1}, {-1, 2}},
                           {{"x", {1, 0}}, {"y", {0, 1}}, {"z", {1, 1}}}, {"x", "y"},
                           {{"x", "y", "z"}});
    if (name == "B2")
        return make_preset(name, {{2, -2}, {-1, 2}},
                           {{"x", {1, 0}}, {"y", {0, 1}}, {"z", {1, 1}}, {"w", {2, 1}}},
                           {"x", "y"},
                           {{"x", "y", "z"}, {"x", "z", "2*w"}});
    if (name == "G2")
        return make_preset(name, {{2, -3}, {-1, 2}},
                           {{"u", {1, 0}},
                            {"v", {0, 1}},
                            {"w", {1, 1}},
                            {"x", {2, 1}},
                            {"y", {3, 1}},
                            {"z", {3, 2}}},
                           {"u", "v"},
                           {{"u", "v", "w"},
                            {"u", "w", "2*x"},
                            {"u", "x", "3*y"},
                            {"v", "y", "z"},
                            {"w", "x", "-3*z"}});
    throw std::invalid_argument("unknown preset '" + name + "' (try 2A1, A2, B2, G2)");
}

PoissonStructure preset_height2(
    const CartanData& cartan,
    const std::optional<std::map<std::pair<int, int>, Rational>>& constants) {
    const int n = cartan.rank();
    if (n > 9)
        throw std::invalid_argument("preset_height2 default names support rank <= 9");
    auto eps = cartan.epsilon ? cartan.epsilon : symmetrize(cartan);
    if (!eps) throw std::domain_error("Cartan matrix is not symmetrizable");
    CartanData full = cartan;
    full.epsilon = eps;

    std::vector<GeneratorSpec> gens;
    std::vector<std::string> phi_names;
    for (int i = 0; i < n; ++i) {
        std::string name = "f" + std::to_string(i + 1);
        gens.push_back({name, simple_root(n, i)});
        phi_names.push_back(name);
    }
    std::vector<PoissonStructure::BracketEntry> entries;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (cartan.entry(i, j) == 0) continue;
            std::string fi = "f" + std::to_string(i + 1);
            std::string fj = "f" + std::to_string(j + 1);
            std::string name = "z" + std::to_string(i + 1) + std::to_string(j + 1);
            if (constants) {
                auto it = constants->find({i, j});
                Rational u = it == constants->end() ? Rational(0) : it->second;
                if (u != 0)
                    entries.push_back({fi, fj, {{"1", u / (*eps)[static_cast<std::size_t>(i)]}}});
            } else {
                RootVector root = simple_root(n, i);
                root[static_cast<std::size_t>(j)] += 1;
                gens.push_back({name, root});
                entries.push_back({fi, fj, {{name, Rational(1)}}});
            }
        }
    PoissonStructure ps = PoissonStructure::assemble(full, {}, gens, phi_names, entries);
    auto errors = ps.validate();
    if (!errors.empty())
        throw std::logic_error("height-2 truncation failed validation: " +
                               to_string(errors.front()));
    return ps;
}

namespace {

[[noreturn]] void doc_fail(const std::string& where, const std::string& what) {
    throw std::invalid_argument("structure document: " + where + ": " + what);
}

}  // namespace

std::variant<PoissonStructure, std::vector<PoissonError>> load_structure(
    const nlohmann::json& document) {
    if (!document.is_object()) doc_fail("$", "expected a JSON object");
    if (!document.contains("gcm")) doc_fail("gcm", "missing");
    std::vector<std::vector<long>> matrix;
    for (const auto& row : document.at("gcm")) {
        matrix.emplace_back();
        for (const auto& x : row) {
            if (!x.is_number_integer()) doc_fail("gcm", "entries must be integers");
            matrix.back().push_back(x.get<long>());
        }
    }
    auto validated = validate_gcm(matrix);
    if (std::holds_alternative<std::vector<GcmError>>(validated)) {
        std::vector<PoissonError> errors;
        for (auto e : std::get<std::vector<GcmError>>(validated))
            errors.push_back({PoissonErrorKind::Structure, "gcm: " + to_string(e)});
        return errors;
    }
    CartanData cartan = std::get<CartanData>(validated);
    if (document.contains("epsilon")) {
        std::vector<Rational> eps;
        for (const auto& e : document.at("epsilon"))
            eps.push_back(rational_from_string(e.get<std::string>()));
        if (static_cast<int>(eps.size()) != cartan.rank())
            doc_fail("epsilon", "length does not match the Cartan rank");
        for (int i = 0; i < cartan.rank(); ++i)
            for (int j = 0; j < cartan.rank(); ++j)
                if (Rational(cartan.entry(i, j)) * eps[static_cast<std::size_t>(j)] !=
                    Rational(cartan.entry(j, i)) * eps[static_cast<std::size_t>(i)])
                    doc_fail("epsilon", "a_ij*eps_j = a_ji*eps_i fails at (" +
                                            std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                            ")");
        cartan.epsilon = std::move(eps);
    } else {
        cartan.epsilon = symmetrize(cartan);  // absent when not symmetrizable
    }

    std::vector<std::string> lambda_names;
    if (document.contains("lambda"))
        for (const auto& s : document.at("lambda")) lambda_names.push_back(s.get<std::string>());

    if (!document.contains("generators")) doc_fail("generators", "missing");
    std::vector<GeneratorSpec> gens;
    for (const auto& g : document.at("generators")) {
        if (!g.contains("name") || !g.contains("root")) doc_fail("generators", "need name and root");
        GeneratorSpec spec;
        spec.name = g.at("name").get<std::string>();
        for (const auto& x : g.at("root")) spec.root.push_back(x.get<long>());
        gens.push_back(std::move(spec));
    }
    if (!document.contains("phi")) doc_fail("phi", "missing");
    std::vector<std::string> phi_names;
    for (const auto& s : document.at("phi")) phi_names.push_back(s.get<std::string>());

    std::vector<PoissonStructure::BracketEntry> entries;
    if (document.contains("brackets")) {
        for (const auto& b : document.at("brackets")) {
            if (!b.contains("left") || !b.contains("right") || !b.contains("value"))
                doc_fail("brackets", "entries need left, right, value");
            PoissonStructure::BracketEntry entry;
            entry.left = b.at("left").get<std::string>();
            entry.right = b.at("right").get<std::string>();
            for (const auto& item : b.at("value")) {
                Rational c = rational_from_string(item.at("coeff").get<std::string>());
                entry.value.emplace_back(
                    item.contains("gen") ? item.at("gen").get<std::string>() : "1", c);
            }
            entries.push_back(std::move(entry));
        }
    }
    PoissonStructure ps;
    try {
        ps = PoissonStructure::assemble(cartan, lambda_names, gens, phi_names, entries);
    } catch (const std::invalid_argument& e) {
        doc_fail("$", e.what());
    }
    auto errors = ps.validate();
    if (!errors.empty()) return errors;
    return ps;
}

nlohmann::json PoissonStructure::to_json() const {
    nlohmann::json doc;
    doc["gcm"] = nlohmann::json::array();
    for (int i = 0; i < rank(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < rank(); ++j) row.push_back(cartan_.entry(i, j));
        doc["gcm"].push_back(row);
    }
    if (cartan_.epsilon) {
        doc["epsilon"] = nlohmann::json::array();
        for (const auto& e : *cartan_.epsilon) doc["epsilon"].push_back(rational_to_string(e));
    }
    doc["lambda"] = nlohmann::json::array();
    for (int i = 0; i < rank(); ++i) doc["lambda"].push_back(table_->name(lambda_var(i)));
    doc["generators"] = nlohmann::json::array();
    for (const auto& g : gens_) {
        nlohmann::json root = nlohmann::json::array();
        for (auto m : g.root) root.push_back(m);
        doc["generators"].push_back({{"name", g.name}, {"root", root}});
    }
    doc["phi"] = nlohmann::json::array();
    for (int i = 0; i < rank(); ++i) doc["phi"].push_back(table_->name(phi_var(i)));
    doc["brackets"] = nlohmann::json::array();
    for (int p = 0; p < generator_count(); ++p)
        for (int q = p + 1; q < generator_count(); ++q) {
            const Polynomial& v = bracket_generators(p, q);
            if (v.is_zero()) continue;
            nlohmann::json value = nlohmann::json::array();
            for (const auto& [m, c] : v.terms()) {
                nlohmann::json item{{"coeff", rational_to_string(c)}};
                if (!m.is_one())
                    for (int id = 0; id < table_->size(); ++id)
                        if (m.exp(id) != 0) item["gen"] = table_->name(id);
                value.push_back(item);
            }
            doc["brackets"].push_back({{"left", gens_[static_cast<std::size_t>(p)].name},
                                       {"right", gens_[static_cast<std::size_t>(q)].name},
                                       {"value", value}});
        }
    return doc;
}

}  // namespace birweyl
