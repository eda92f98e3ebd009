#include <doctest.h>

#include <map>

#include "birweyl/cartan.hpp"

using namespace birweyl;

namespace {

CartanData gcm(std::vector<std::vector<long>> m) {
    return std::get<CartanData>(validate_gcm(m));
}

const CartanData kA2 = gcm({{2, -1}, {-1, 2}});
const CartanData kB2 = gcm({{2, -2}, {-1, 2}});
const CartanData kG2 = gcm({{2, -3}, {-1, 2}});
const CartanData k2A1 = gcm({{2, 0}, {0, 2}});

}  // namespace

TEST_SUITE_BEGIN("cartan");

TEST_CASE("validate_gcm") {
    CHECK(std::holds_alternative<CartanData>(validate_gcm({{2, -1}, {-1, 2}})));
    CHECK(std::holds_alternative<CartanData>(validate_gcm({{2, -2}, {-1, 2}})));
    auto bad = validate_gcm({{2, 0}, {-1, 2}});
    REQUIRE(std::holds_alternative<std::vector<GcmError>>(bad));
    CHECK(std::get<std::vector<GcmError>>(bad) ==
          std::vector<GcmError>{GcmError::ZeroPatternAsymmetric});
    auto worse = validate_gcm({{1, 1}, {0, 2}});
    auto errors = std::get<std::vector<GcmError>>(worse);
    CHECK(errors.size() == 3);  // diagonal, positive offdiagonal, zero pattern
}

TEST_CASE("symmetrize solves a_ij eps_j = a_ji eps_i") {
    auto check_valid = [](const CartanData& c) {
        auto eps = symmetrize(c);
        REQUIRE(eps.has_value());
        for (int i = 0; i < c.rank(); ++i) {
            CHECK((*eps)[static_cast<std::size_t>(i)] > 0);
            for (int j = 0; j < c.rank(); ++j)
                CHECK(Rational(c.entry(i, j)) * (*eps)[static_cast<std::size_t>(j)] ==
                      Rational(c.entry(j, i)) * (*eps)[static_cast<std::size_t>(i)]);
        }
        return *eps;
    };
    CHECK(check_valid(kA2) == std::vector<Rational>{1, 1});
    CHECK(check_valid(kB2) == std::vector<Rational>{Rational(1), Rational(1, 2)});
    CHECK(check_valid(kG2) == std::vector<Rational>{Rational(1), Rational(1, 3)});
    CHECK(check_valid(k2A1) == std::vector<Rational>{1, 1});
    check_valid(gcm({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
    // An inconsistent 3-cycle has no symmetrizer.
    CHECK_FALSE(symmetrize(gcm({{2, -1, -2}, {-2, 2, -1}, {-1, -2, 2}})).has_value());
}

TEST_CASE("coxeter_m") {
    CHECK(coxeter_m(kA2, 0, 1) == 3);
    CHECK(coxeter_m(k2A1, 0, 1) == 2);
    CHECK(coxeter_m(kB2, 0, 1) == 4);
    CHECK(coxeter_m(kG2, 1, 0) == 6);
    CHECK(coxeter_m(gcm({{2, -2}, {-2, 2}}), 0, 1) == kCoxeterInfinity);
    CHECK_THROWS_AS(coxeter_m(kA2, 1, 1), std::invalid_argument);
}

TEST_CASE("act_weight matches the reflection formula") {
    // r_i(Lambda_j) = Lambda_j for i != j.
    CHECK(act_weight(kA2, {0}, {0, 1}) == Weight{0, 1});
    // r_1(Lambda_1) = -Lambda_1 + Lambda_2 in A2.
    CHECK(act_weight(kA2, {0}, {1, 0}) == Weight{-1, 1});
    CHECK(act_weight(kA2, {}, {3, -2}) == Weight{3, -2});
}

TEST_CASE("act_root matches the reflection formula") {
    CHECK(act_root(kA2, {0}, {1, 0}) == RootVector{-1, 0});
    CHECK(act_root(kA2, {0}, {0, 1}) == RootVector{1, 1});
    // r_2(alpha_1) = alpha_1 - a_21 alpha_2 in B2 (the lambda table row
    // "a -> a+2b" is the reflect_lambda action, not this one).
    CHECK(act_root(kB2, {1}, {1, 0}) == RootVector{1, 1});
    CHECK(act_root(kG2, {0}, {0, 1}) == RootVector{3, 1});
}

TEST_CASE("is_reduced") {
    CHECK(is_reduced(kA2, {0, 1, 0}));
    CHECK_FALSE(is_reduced(kA2, {0, 0}));
    CHECK_FALSE(is_reduced(kB2, {1, 1}));
    CHECK(is_reduced(kG2, {0, 1, 0, 1, 0, 1}));
    CHECK_FALSE(is_reduced(kG2, {0, 1, 0, 1, 0, 1, 0}));
}

TEST_CASE("word inverse acts as inverse on weights") {
    for (const CartanData* c : {&kA2, &kB2, &kG2, &k2A1}) {
        WeylWord word{0, 1, 0, 1, 1, 0};
        WeylWord inverse(word.rbegin(), word.rend());
        for (long u = -2; u <= 2; ++u)
            for (long v = -2; v <= 2; ++v) {
                Weight w{u, v};
                CHECK(act_weight(*c, inverse, act_weight(*c, word, w)) == w);
            }
    }
}

TEST_CASE("pairing invariance under the diagonal action") {
    for (const CartanData* c : {&kA2, &kB2, &kG2}) {
        WeylWord word{1, 0, 1};
        for (long u = -2; u <= 2; ++u)
            for (long v = -2; v <= 2; ++v) {
                RootVector h{u, v + 1};
                Weight w{v, u - 1};
                CHECK(pair(act_coroot(*c, word, h), act_weight(*c, word, w)) == pair(h, w));
            }
    }
}

TEST_CASE("Q -> L intertwines the actions") {
    for (const CartanData* c : {&kA2, &kB2, &kG2, &k2A1}) {
        WeylWord word{0, 1, 0};
        for (long u = -2; u <= 2; ++u)
            for (long v = -2; v <= 2; ++v) {
                RootVector r{u, v};
                CHECK(root_to_weight(*c, act_root(*c, word, r)) ==
                      act_weight(*c, word, root_to_weight(*c, r)));
            }
    }
}

namespace {

std::vector<Weight> action_key(const CartanData& c, const WeylWord& w) {
    std::vector<Weight> key;
    for (int i = 0; i < c.rank(); ++i)
        key.push_back(act_weight(c, w, fundamental_weight(c.rank(), i)));
    return key;
}

// Exhaustive oracle: minimal word length realizing each linear action.
std::map<std::vector<Weight>, std::size_t> bfs_lengths(const CartanData& c, int max_len) {
    std::map<std::vector<Weight>, std::size_t> dist;
    std::vector<WeylWord> frontier{WeylWord{}};
    dist[action_key(c, {})] = 0;
    for (int len = 1; len <= max_len; ++len) {
        std::vector<WeylWord> next;
        for (const auto& w : frontier)
            for (int i = 0; i < c.rank(); ++i) {
                WeylWord cand = w;
                cand.push_back(i);
                if (dist.emplace(action_key(c, cand), cand.size()).second)
                    next.push_back(cand);
            }
        frontier = std::move(next);
    }
    return dist;
}

}  // namespace

TEST_CASE("is_reduced agrees with exhaustive minimal-length search") {
    for (const CartanData* c : {&kA2, &kB2, &kG2, &k2A1}) {
        auto dist = bfs_lengths(*c, 6);
        for (int len = 0; len <= 6; ++len)
            for (int code = 0; code < (1 << len); ++code) {
                WeylWord w;
                for (int k = 0; k < len; ++k) w.push_back((code >> k) & 1);
                CHECK(is_reduced(*c, w) == (dist.at(action_key(*c, w)) == w.size()));
            }
    }
}

TEST_CASE("reduced word enumeration finds the rank-2 group orders") {
    CHECK(reduced_words_by_element(kA2, 3).size() == 6);
    CHECK(reduced_words_by_element(kB2, 4).size() == 8);
    CHECK(reduced_words_by_element(kG2, 6).size() == 12);
    CHECK(reduced_words_by_element(k2A1, 2).size() == 4);
    // The longest element is the only one with two reduced words.
    auto classes = reduced_words_by_element(kG2, 6);
    int doubles = 0;
    for (const auto& words : classes)
        if (words.size() == 2) ++doubles;
    CHECK(doubles == 1);
}

TEST_SUITE_END();
