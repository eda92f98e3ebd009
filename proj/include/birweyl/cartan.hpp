#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "birweyl/rational.hpp"

namespace birweyl {

// Word in the simple reflections; letters are 0-based indices into I.
// The empty word is the identity. A word (j1,...,jp) acts by operator
// composition with the FIRST letter outermost: w(f) = s_{j1}(s_{j2}(...)).
using WeylWord = std::vector<int>;

// Integer coordinates of Lambda = sum c_i Lambda_i in the weight lattice L.
using Weight = std::vector<long>;

// Integer coordinates of alpha = sum m_i alpha_i in the root lattice Q.
using RootVector = std::vector<long>;

enum class GcmError { DiagonalNotTwo, PositiveOffdiagonal, ZeroPatternAsymmetric, NotSquare };

std::string to_string(GcmError e);

// A generalized Cartan matrix with optional symmetrizers epsilon satisfying
// a_ij * eps_j = a_ji * eps_i.
struct CartanData {
    std::vector<std::vector<long>> a;
    std::optional<std::vector<Rational>> epsilon;

    int rank() const { return static_cast<int>(a.size()); }
    long entry(int i, int j) const { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
};

// Checks the GCM axioms; returns the validated data or the list of violations.
std::variant<CartanData, std::vector<GcmError>> validate_gcm(
    const std::vector<std::vector<long>>& matrix);

// The componentwise-smallest positive rational solution of
// a_ij eps_j = a_ji eps_i, normalized so the first index of each connected
// component gets eps = 1. nullopt when no positive solution exists.
std::optional<std::vector<Rational>> symmetrize(const CartanData& c);

// Attaches symmetrizers (throws std::domain_error when not symmetrizable).
CartanData with_symmetrizers(CartanData c);

inline constexpr int kCoxeterInfinity = -1;

// 2, 3, 4, 6 or kCoxeterInfinity according to a_ij*a_ji = 0, 1, 2, 3, >= 4.
int coxeter_m(const CartanData& c, int i, int j);

// One simple reflection on weight coordinates: c_k -> c_k - a_{ki} c_i.
Weight reflect_weight(const CartanData& c, int i, const Weight& w);
// Left action of a word, rightmost letter applied first.
Weight act_weight(const CartanData& c, const WeylWord& word, Weight w);

// One simple reflection on root coordinates: m_i -> m_i - sum_j a_{ij} m_j.
RootVector reflect_root(const CartanData& c, int i, const RootVector& r);
RootVector act_root(const CartanData& c, const WeylWord& word, RootVector r);

// One simple reflection on coroot coordinates: d_i -> d_i - sum_k a_{ki} d_k.
RootVector reflect_coroot(const CartanData& c, int i, const RootVector& h);
RootVector act_coroot(const CartanData& c, const WeylWord& word, RootVector h);

// Pairing <h, Lambda> = sum_k d_k c_k.
long pair(const RootVector& h, const Weight& w);

// The image of a root under the natural W-map Q -> L: alpha_j maps to the
// weight with coordinates (a_{kj})_k.
Weight root_to_weight(const CartanData& c, const RootVector& r);

bool is_positive_root(const RootVector& r);
bool is_dominant(const Weight& w);

// True iff every root s_{j1}...s_{j(k-1)}(alpha_{jk}) is positive.
bool is_reduced(const CartanData& c, const WeylWord& word);

Weight fundamental_weight(int rank, int i);
RootVector simple_root(int rank, int i);

// Enumeration helpers for finite Weyl groups (used by the verification
// suites). Elements are identified by their matrix on the weight lattice;
// returns, for each element, all reduced words of length <= max_len.
// Throws std::domain_error when the group has more than max_elements.
std::vector<std::vector<WeylWord>> reduced_words_by_element(const CartanData& c,
                                                            int max_len,
                                                            int max_elements = 4096);

}  // namespace birweyl
