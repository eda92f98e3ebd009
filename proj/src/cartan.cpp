#include "birweyl/cartan.hpp"

#include <map>
#include <queue>
#include <stdexcept>

namespace birweyl {

std::string to_string(GcmError e) {
    switch (e) {
        case GcmError::DiagonalNotTwo: return "DIAGONAL_NOT_TWO";
        case GcmError::PositiveOffdiagonal: return "POSITIVE_OFFDIAGONAL";
        case GcmError::ZeroPatternAsymmetric: return "ZERO_PATTERN_ASYMMETRIC";
        case GcmError::NotSquare: return "NOT_SQUARE";
    }
    return "?";
}

std::variant<CartanData, std::vector<GcmError>> validate_gcm(
    const std::vector<std::vector<long>>& matrix) {
    std::vector<GcmError> errors;
    const std::size_t n = matrix.size();
    for (const auto& row : matrix)
        if (row.size() != n) {
            errors.push_back(GcmError::NotSquare);
            return errors;
        }
    auto push_once = [&](GcmError e) {
        for (auto x : errors)
            if (x == e) return;
        errors.push_back(e);
    };
    for (std::size_t i = 0; i < n; ++i) {
        if (matrix[i][i] != 2) push_once(GcmError::DiagonalNotTwo);
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (matrix[i][j] > 0) push_once(GcmError::PositiveOffdiagonal);
            if ((matrix[i][j] == 0) != (matrix[j][i] == 0))
                push_once(GcmError::ZeroPatternAsymmetric);
        }
    }
    if (!errors.empty()) return errors;
    return CartanData{matrix, std::nullopt};
}

std::optional<std::vector<Rational>> symmetrize(const CartanData& c) {
    const int n = c.rank();
    std::vector<Rational> eps(static_cast<std::size_t>(n), Rational(0));
    std::vector<bool> assigned(static_cast<std::size_t>(n), false);
    for (int start = 0; start < n; ++start) {
        if (assigned[static_cast<std::size_t>(start)]) continue;
        // BFS over the nonzero off-diagonal pattern; first vertex of the
        // component gets 1, edges propagate eps_j = eps_i * a_ji / a_ij.
        eps[static_cast<std::size_t>(start)] = 1;
        assigned[static_cast<std::size_t>(start)] = true;
        std::queue<int> bfs;
        bfs.push(start);
        while (!bfs.empty()) {
            int i = bfs.front();
            bfs.pop();
            for (int j = 0; j < n; ++j) {
                if (i == j || c.entry(i, j) == 0) continue;
                Rational need = eps[static_cast<std::size_t>(i)] *
                                Rational(c.entry(j, i)) / Rational(c.entry(i, j));
                if (!assigned[static_cast<std::size_t>(j)]) {
                    if (need <= 0) return std::nullopt;
                    eps[static_cast<std::size_t>(j)] = need;
                    assigned[static_cast<std::size_t>(j)] = true;
                    bfs.push(j);
                } else if (eps[static_cast<std::size_t>(j)] != need) {
                    return std::nullopt;
                }
            }
        }
    }
    return eps;
}

CartanData with_symmetrizers(CartanData c) {
    auto eps = symmetrize(c);
    if (!eps) throw std::domain_error("Cartan matrix is not symmetrizable");
    c.epsilon = std::move(*eps);
    return c;
}

int coxeter_m(const CartanData& c, int i, int j) {
    if (i == j) throw std::invalid_argument("coxeter_m requires i != j");
    long p = c.entry(i, j) * c.entry(j, i);
    switch (p) {
        case 0: return 2;
        case 1: return 3;
        case 2: return 4;
        case 3: return 6;
        default: return kCoxeterInfinity;
    }
}

Weight reflect_weight(const CartanData& c, int i, const Weight& w) {
    Weight out = w;
    long ci = w[static_cast<std::size_t>(i)];
    for (int k = 0; k < c.rank(); ++k) out[static_cast<std::size_t>(k)] -= c.entry(k, i) * ci;
    return out;
}

Weight act_weight(const CartanData& c, const WeylWord& word, Weight w) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) w = reflect_weight(c, *it, w);
    return w;
}

RootVector reflect_root(const CartanData& c, int i, const RootVector& r) {
    RootVector out = r;
    long pairing = 0;
    for (int j = 0; j < c.rank(); ++j) pairing += c.entry(i, j) * r[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] -= pairing;
    return out;
}

RootVector act_root(const CartanData& c, const WeylWord& word, RootVector r) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = reflect_root(c, *it, r);
    return r;
}

RootVector reflect_coroot(const CartanData& c, int i, const RootVector& h) {
    RootVector out = h;
    long pairing = 0;
    for (int k = 0; k < c.rank(); ++k) pairing += c.entry(k, i) * h[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(i)] -= pairing;
    return out;
}

RootVector act_coroot(const CartanData& c, const WeylWord& word, RootVector h) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) h = reflect_coroot(c, *it, h);
    return h;
}

long pair(const RootVector& h, const Weight& w) {
    long out = 0;
    for (std::size_t k = 0; k < h.size(); ++k) out += h[k] * w[k];
    return out;
}

Weight root_to_weight(const CartanData& c, const RootVector& r) {
    Weight out(static_cast<std::size_t>(c.rank()), 0);
    for (int k = 0; k < c.rank(); ++k)
        for (int j = 0; j < c.rank(); ++j)
            out[static_cast<std::size_t>(k)] += c.entry(k, j) * r[static_cast<std::size_t>(j)];
    return out;
}

bool is_positive_root(const RootVector& r) {
    bool nonzero = false;
    for (auto m : r) {
        if (m < 0) return false;
        if (m > 0) nonzero = true;
    }
    return nonzero;
}

bool is_dominant(const Weight& w) {
    for (auto c : w)
        if (c < 0) return false;
    return true;
}

bool is_reduced(const CartanData& c, const WeylWord& word) {
    for (std::size_t k = 0; k < word.size(); ++k) {
        RootVector beta = simple_root(c.rank(), word[k]);
        for (std::size_t m = k; m-- > 0;) beta = reflect_root(c, word[m], beta);
        if (!is_positive_root(beta)) return false;
    }
    return true;
}

Weight fundamental_weight(int rank, int i) {
    Weight w(static_cast<std::size_t>(rank), 0);
    w[static_cast<std::size_t>(i)] = 1;
    return w;
}

RootVector simple_root(int rank, int i) {
    RootVector r(static_cast<std::size_t>(rank), 0);
    r[static_cast<std::size_t>(i)] = 1;
    return r;
}

namespace {

// Matrix of a group element acting on L, as the list of images of the
// fundamental weights; a faithful invariant for the finite groups the
// verification suites enumerate.
std::vector<Weight> weight_matrix(const CartanData& c, const WeylWord& word) {
    std::vector<Weight> cols;
    for (int i = 0; i < c.rank(); ++i)
        cols.push_back(act_weight(c, word, fundamental_weight(c.rank(), i)));
    return cols;
}

}  // namespace

std::vector<std::vector<WeylWord>> reduced_words_by_element(const CartanData& c,
                                                            int max_len,
                                                            int max_elements) {
    std::map<std::vector<Weight>, std::size_t> index;
    std::vector<std::vector<WeylWord>> out;
    std::vector<WeylWord> frontier{WeylWord{}};
    index[weight_matrix(c, {})] = 0;
    out.push_back({WeylWord{}});
    for (int len = 1; len <= max_len; ++len) {
        std::vector<WeylWord> next;
        for (const auto& w : frontier) {
            for (int i = 0; i < c.rank(); ++i) {
                WeylWord cand = w;
                cand.push_back(i);
                if (!is_reduced(c, cand)) continue;
                auto key = weight_matrix(c, cand);
                auto [it, inserted] = index.emplace(key, out.size());
                if (inserted) {
                    out.push_back({});
                    if (out.size() > static_cast<std::size_t>(max_elements))
                        throw std::domain_error("Weyl group too large to enumerate");
                }
                out[it->second].push_back(cand);
                next.push_back(cand);
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return out;
}

}  // namespace birweyl
