#include <doctest.h>

#include "testutil.hpp"

using namespace birweyl;
using testutil::F;
using testutil::P;

TEST_SUITE_BEGIN("tau");

TEST_CASE("tau_action on fundamental weights") {
    auto a2 = preset("A2");
    auto t = a2.table();
    SUBCASE("s1 twists tau^L1 by phi_1 = x") {
        auto out = tau_action(a2, {0}, {RationalFunction::one(t), {1, 0}});
        CHECK(rf_eq(out.coeff, F(t, "x")));
        CHECK(out.weight == Weight{-1, 1});
    }
    SUBCASE("s_i fixes tau^L_j for j != i") {
        auto out = tau_action(a2, {0}, {RationalFunction::one(t), {0, 1}});
        CHECK(rf_eq(out.coeff, F(t, "1")));
        CHECK(out.weight == Weight{0, 1});
    }
    SUBCASE("empty word is the identity") {
        auto out = tau_action(a2, {}, {F(t, "x*y/z"), {2, -1}});
        CHECK(rf_eq(out.coeff, F(t, "x*y/z")));
        CHECK(out.weight == Weight{2, -1});
    }
}

TEST_CASE("cocycle values from the A2 table") {
    auto a2 = preset("A2");
    auto t = a2.table();
    auto check = [&](WeylWord w, Weight l, const char* expected) {
        auto cv = cocycle(a2, w, l);
        CHECK(rf_eq(cv.value, F(t, expected)));
    };
    check({}, {1, 0}, "1");
    check({0}, {1, 0}, "x");
    check({1}, {1, 0}, "1");
    check({1, 0}, {1, 0}, "x*y - b*z");
    check({0, 1}, {1, 0}, "x");
    check({0, 1, 0}, {1, 0}, "x*y - b*z");
    check({1, 0, 1}, {1, 0}, "x*y - b*z");
    check({1}, {0, 1}, "y");
    check({0, 1}, {0, 1}, "x*y + a*z");
    check({0, 1, 0}, {0, 1}, "x*y + a*z");
}

TEST_CASE("cocycle values from the B2 and G2 tables") {
    auto b2 = preset("B2");
    CHECK(rf_eq(cocycle(b2, {0, 1}, {0, 1}).value,
                F(b2.table(), "x^2*y + a*x*z + a^2*w")));
    CHECK(rf_eq(cocycle(b2, {1, 0, 1}, {0, 1}).value,
                F(b2.table(), "x^2*y^2 + a*x*y*z - (a+b)*b*z^2 + (a+2*b)^2*y*w")));
    auto g2 = preset("G2");
    CHECK(rf_eq(cocycle(g2, {1, 0}, {1, 0}).value, F(g2.table(), "u*v - b*w")));
    CHECK(rf_eq(cocycle(g2, {0, 1}, {0, 1}).value,
                F(g2.table(), "u^3*v + a*u^2*w + a^2*u*x + a^3*y")));
}

TEST_CASE("polynomial form is certified when it exists") {
    auto a2 = preset("A2");
    auto cv = cocycle(a2, {1, 0}, {1, 0});
    REQUIRE(cv.polynomial_form.has_value());
    CHECK(*cv.polynomial_form == P(a2.table(), "x*y - b*z"));
    // Non-dominant weight: phi_{s1}(L2 - L1) = x^{-1}.
    auto inv = cocycle(a2, {0}, {-1, 1});
    CHECK_FALSE(inv.polynomial_form.has_value());
    CHECK(rf_eq(inv.value, F(a2.table(), "1/x")));
    // Empty word: 1 is a polynomial.
    auto unit = cocycle(a2, {}, {3, -2});
    REQUIRE(unit.polynomial_form.has_value());
    CHECK(unit.polynomial_form->is_one());
}

TEST_CASE("oracle equivalence: product formula vs tau action") {
    for (const char* name : {"2A1", "A2", "B2", "G2"}) {
        auto ps = preset(name);
        auto refl = simple_reflections(ps);
        Sampler rng(static_cast<std::uint64_t>(name[0]));
        for (int trial = 0; trial < 12; ++trial) {
            auto w = random_word(rng, 2, 5);
            auto l = random_weight(rng, 2, 2);
            auto cv = cocycle(ps, refl, w, l);
            auto tt = tau_action(ps, refl, w, {RationalFunction::one(ps.table()), l});
            CHECK(rf_eq(cv.value, tt.coeff));
            CHECK(tt.weight == act_weight(ps.cartan(), w, l));
        }
    }
    // Exhaustively on B2: every word of length <= 5, both fundamental weights.
    auto b2 = preset("B2");
    auto refl = simple_reflections(b2);
    for (int len = 0; len <= 5; ++len)
        for (int code = 0; code < (1 << len); ++code) {
            WeylWord w;
            for (int k = 0; k < len; ++k) w.push_back((code >> k) & 1);
            for (int j = 0; j < 2; ++j) {
                Weight fw = fundamental_weight(2, j);
                auto cv = cocycle(b2, refl, w, fw);
                auto tt = tau_action(b2, refl, w, {RationalFunction::one(b2.table()), fw});
                CHECK(rf_eq(cv.value, tt.coeff));
            }
        }
}

TEST_CASE("cocycle relations") {
    auto b2 = preset("B2");
    SUBCASE("examples") {
        CHECK(check_cocycle_relations(b2, {0}, {1}, {1, 0}, {0, 1}).pass());
        // additivity with L' = 0 is trivially multiplicative by 1.
        CHECK(check_cocycle_relations(b2, {1, 0}, {1}, {0, 1}, {0, 0}).pass());
    }
    SUBCASE("random tuples over every preset") {
        for (const char* name : {"A2", "B2", "G2"}) {
            auto ps = preset(name);
            Sampler rng(1234);
            for (int trial = 0; trial < 8; ++trial)
                CHECK(check_cocycle_relations(ps, random_word(rng, 2, 4),
                                              random_word(rng, 2, 4), random_weight(rng, 2, 2),
                                              random_weight(rng, 2, 2))
                          .pass());
        }
    }
    SUBCASE("composition law pins the A2 column") {
        auto a2 = preset("A2");
        // phi_{s1 s2}(L1) = s1(phi_{s2}(L1)) * phi_{s1}(r2 L1) = x.
        auto lhs = cocycle(a2, {0, 1}, {1, 0});
        CHECK(rf_eq(lhs.value, F(a2.table(), "x")));
    }
}

TEST_CASE("word independence across reduced words") {
    auto a2 = preset("A2");
    CHECK(check_word_independence(a2, {{0, 1, 0}, {1, 0, 1}}, {1, 0}).pass());
    CHECK(check_word_independence(a2, {{0}, {0}}, {0, 1}).pass());
    CHECK_THROWS_AS(check_word_independence(a2, {{0}, {1}}, {1, 0}), std::domain_error);
    auto b2 = preset("B2");
    CHECK(check_word_independence(b2, {{1, 0, 1, 0}, {0, 1, 0, 1}}, {0, 1}).pass());
    // Every element of W, all reduced words, both fundamental weights.
    for (const char* name : {"A2", "B2", "G2"}) {
        auto ps = preset(name);
        auto classes = reduced_words_by_element(ps.cartan(), 6);
        for (const auto& words : classes)
            for (int j = 0; j < 2; ++j)
                CHECK(check_word_independence(ps, words, fundamental_weight(2, j)).pass());
    }
}

TEST_CASE("regularity") {
    auto g2 = preset("G2");
    auto report = check_regularity(g2, {0, 1, 0, 1, 0}, {1, 0});
    CHECK(report.pass());
    // The 9-term polynomial for phi_{s1s2s1s2s1}(L1).
    auto cv = cocycle(g2, {0, 1, 0, 1, 0}, {1, 0});
    REQUIRE(cv.polynomial_form.has_value());
    auto expected = P(g2.table(),
                      "u^4*v^2 - 2*b*u^3*v*w - (2*a^2+6*a*b+3*b^2)*u^2*v*x + b^2*u^2*w^2"
                      " - (2*a+3*b)^3*u*v*y + b*(2*a^2+6*a*b+3*b^2)*u*w*x"
                      " - (a+b)*(a+3*b)*(2*a+3*b)^2*u*z - a*(a+2*b)*(2*a+3*b)^2*w*y"
                      " + a*(a+b)*(a+2*b)*(a+3*b)*x^2");
    CHECK(*cv.polynomial_form == expected);
}

TEST_CASE("integrality") {
    auto b2 = preset("B2");
    CHECK(check_integrality(b2, {1, 0, 1}, {0, 1}).pass());
    auto g2 = preset("G2");
    CHECK(check_integrality(g2, {1, 0, 1, 0, 1}, {0, 1}).pass());
    std::string why;
    CHECK(divided_power_condition(b2, &why));
    CHECK(divided_power_condition(g2, &why));

    // With {x,z} = w instead of 2w, (1/2) ad(x)^2(y) = w/2 leaves the span.
    std::vector<GeneratorSpec> gens;
    for (int k = 0; k < b2.generator_count(); ++k) gens.push_back(b2.generator(k));
    auto halved = PoissonStructure::assemble(
        b2.cartan(), {"a", "b"}, gens, {"x", "y"},
        {{"x", "y", {{"z", 1}}}, {"x", "z", {{"w", 1}}}});
    REQUIRE(halved.validate().empty());
    auto broken = check_integrality(halved, {1, 0, 1}, {0, 1});
    CHECK(broken.status == IntegralityStatus::PreconditionFail);
    // A fractional structure constant also fails the precondition.
    Rational half(1, 2);
    auto fractional = PoissonStructure::assemble(
        b2.cartan(), {"a", "b"}, gens, {"x", "y"},
        {{"x", "y", {{"z", half}}}, {"x", "z", {{"w", 2}}}});
    REQUIRE(fractional.validate().empty());
    CHECK(check_integrality(fractional, {1, 0, 1}, {0, 1}).status ==
          IntegralityStatus::PreconditionFail);
}

TEST_CASE("normalization cocycle") {
    auto a2 = preset("A2");
    auto t = a2.table();
    // word (i), L_i -> -alpha_i; A2 has eps = (1,1) so alpha = lambda.
    CHECK(rf_eq(normalization_cocycle(a2, {0}, {1, 0}), F(t, "-a")));
    CHECK(rf_eq(normalization_cocycle(a2, {0}, {0, 1}), F(t, "1")));
    CHECK(rf_eq(normalization_cocycle(a2, {0, 1}, {1, 0}), F(t, "-a")));
    // B2 has eps = (1, 1/2), so alpha_2 = 2b.
    auto b2 = preset("B2");
    CHECK(rf_eq(normalization_cocycle(b2, {1}, {0, 1}), F(b2.table(), "-2*b")));
    // Dominant weight + reduced word: polynomial in the alphas.
    auto n = normalization_cocycle(b2, {0, 1, 0, 1}, {1, 1});
    CHECK(n.to_polynomial().has_value());
}

TEST_CASE("ratio identity: rdot = phi / N") {
    for (const char* name : {"A2", "B2", "G2"}) {
        auto ps = preset(name);
        auto refl = simple_reflections(ps);
        auto classes = reduced_words_by_element(ps.cartan(), 4);
        for (const auto& words : classes)
            for (int j = 0; j < 2; ++j) {
                Weight fw = fundamental_weight(2, j);
                auto lhs = rdot_cocycle(ps, words.front(), fw);
                auto phi = cocycle(ps, refl, words.front(), fw).value;
                auto n = normalization_cocycle(ps, words.front(), fw);
                CHECK(rf_eq(lhs, phi / n));
            }
        // Also on non-reduced words and non-dominant weights.
        Sampler rng(5);
        for (int trial = 0; trial < 6; ++trial) {
            auto w = random_word(rng, 2, 4);
            auto l = random_weight(rng, 2, 2);
            CHECK(rf_eq(rdot_cocycle(ps, w, l),
                        cocycle(ps, refl, w, l).value / normalization_cocycle(ps, w, l)));
        }
    }
}

TEST_CASE("reconstruction of w(phi_j)") {
    for (const char* name : {"A2", "B2", "G2"}) {
        auto ps = preset(name);
        Sampler rng(77);
        for (int trial = 0; trial < 5; ++trial) {
            auto w = random_word(rng, 2, 4);
            for (int j = 0; j < 2; ++j) CHECK(check_reconstruction(ps, w, j).pass());
        }
    }
}

TEST_CASE("cocycle on the height-2 truncated affine structure") {
    auto c = std::get<CartanData>(validate_gcm({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
    auto ps = preset_height2(c);
    auto refl = simple_reflections(ps);
    Sampler rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        auto w = random_word(rng, 3, 5);
        for (int j = 0; j < 3; ++j) {
            auto cv = cocycle(ps, refl, w, fundamental_weight(3, j));
            CHECK(cv.polynomial_form.has_value());
            auto tt = tau_action(ps, refl, w,
                                 {RationalFunction::one(ps.table()), fundamental_weight(3, j)});
            CHECK(rf_eq(cv.value, tt.coeff));
        }
    }
}

TEST_CASE("cocycle JSON serialization") {
    auto a2 = preset("A2");
    auto cv = cocycle(a2, {1, 0}, {1, 0});
    auto j = cv.to_json(true);
    CHECK(j["word"] == nlohmann::json({2, 1}));
    CHECK(j["weight"] == nlohmann::json({1, 0}));
    CHECK(j["value"] == "x*y - b*z");
    CHECK(j["polynomial"] == "x*y - b*z");
    CHECK(j["integral"] == true);
    CHECK(j["terms"].size() == 2);
}

TEST_SUITE_END();
