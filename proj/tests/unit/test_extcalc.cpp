#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curcoh/errors.hpp"
#include "curcoh/extcalc.hpp"

using namespace curcoh;
using namespace curcoh::ext;

namespace {

const std::vector<Rational> kPoints{Rational(0), Rational(1)};

WeightAssignment two_point(const RootSystem& rs, const Weight& a, const Weight& b) {
    return WeightAssignment::from({{Rational(0), a}, {Rational(1), b}}, rs);
}

std::vector<Weight> small_weights(int rank) {
    std::vector<Weight> out;
    std::vector<int> c(static_cast<std::size_t>(rank), 0);
    while (true) {
        out.emplace_back(c);
        std::size_t i = 0;
        while (i < c.size() && c[i] == 2)
            c[i++] = 0;
        if (i == c.size())
            break;
        ++c[i];
    }
    return out;
}

} // namespace

TEST_CASE("weight assignment parsing") {
    RootSystem a2('A', 2);
    auto w = WeightAssignment::parse("1:[0,1]; 0:[2,0];1/2:[0,0]", a2);
    CHECK(w.entries.size() == 2);
    CHECK(w.entries[0].first == 0);
    CHECK(w.at(Rational(1), 2) == Weight({0, 1}));
    CHECK(w.at(Rational(1, 2), 2) == Weight({0, 0}));
    CHECK(w.str() == "0:[2,0];1:[0,1]");
    CHECK_THROWS_AS(WeightAssignment::parse("0:[1]", a2), ValidationError);
    CHECK_THROWS_AS(WeightAssignment::parse("0:[1,-1]", a2), ValidationError);
    CHECK_THROWS_AS(WeightAssignment::parse("0:[1,0];0:[0,1]", a2), ValidationError);
    CHECK_THROWS_AS(WeightAssignment::parse("x[1,0]", a2), ValidationError);
    CHECK_THROWS_AS(WeightAssignment::parse("0:[1,a]", a2), ValidationError);
}

TEST_CASE("Ext1 closed form") {
    RootSystem a1('A', 1);
    auto P = [&](const char* s) { return WeightAssignment::parse(s, a1); };
    CHECK(ext1(a1, P("0:[0]"), P("0:[0]")) == 0);
    CHECK(ext1(a1, P("0:[2]"), P("0:[2]")) == 1);
    CHECK(ext1(a1, P("0:[1];1:[1]"), P("0:[3];1:[3]")) == 0);
    CHECK(ext1(a1, P("0:[1]"), P("0:[3]")) == 1);
    CHECK(ext1(a1, P("0:[1]"), P("0:[1]")) == 1);
    CHECK(ext1(a1, P("0:[1];1:[1]"), P("0:[1];1:[1]")) == 2);
    CHECK(ext1(a1, P("0:[1];1:[2]"), P("0:[1];1:[4]")) == 1);
    CHECK(ext1(a1, P("0:[1];1:[2]"), P("0:[1];1:[4]"), {{Rational(1), 3}}) == 3);
    CHECK(ext1(a1, P("0:[1]"), P("0:[1]"), {{Rational(0), 2}}) == 2);
    CHECK_THROWS_AS(ext1(a1, P("0:[1]"), P("0:[1]"), {{Rational(0), 0}}), ValidationError);
    // symmetry
    RootSystem b2('B', 2);
    for (const auto& l : small_weights(2))
        for (const auto& m : small_weights(2)) {
            auto x = WeightAssignment::from({{Rational(0), l}}, b2);
            auto y = WeightAssignment::from({{Rational(0), m}}, b2);
            CHECK(ext1(b2, x, y) == ext1(b2, y, x));
        }
}

TEST_CASE("Ext1 agrees with Hom into H1 of the truncated ideal") {
    for (auto rs : {RootSystem('A', 1), RootSystem('A', 2)}) {
        const auto h1 = h1_truncated(rs, kPoints, 2);
        CHECK(h1.total_multiplicity() == 2);
        const auto h1_next = h1_truncated(rs, kPoints, 3);
        CHECK(h1 == h1_next);
        const auto ws = small_weights(rs.rank());
        int queries = 0;
        for (const auto& a : ws)
            for (const auto& b : ws)
                for (const auto& c : ws)
                    for (const auto& d : ws) {
                        auto pi = two_point(rs, a, b), pi2 = two_point(rs, c, d);
                        CHECK(ext1(rs, pi, pi2) == ext1_via_h1(rs, h1, kPoints, pi, pi2));
                        ++queries;
                    }
        CHECK(queries >= 30);
    }
}

TEST_CASE("Ext2 between distinct sl2 modules") {
    CHECK(ext2_sl2_twopoint(0, 0, 4, 0, kPoints) == 1);
    CHECK(ext2_sl2_twopoint(2, 0, 0, 0, kPoints) == 0);
    CHECK(ext2_sl2_twopoint(2, 2, 0, 0, kPoints) == 1);
    CHECK(ext2_sl2_twopoint(0, 0, 0, 4, kPoints) == 1);
    CHECK_THROWS_AS(ext2_sl2_twopoint(1, 1, 1, 1, kPoints), ValidationError);
    CHECK_THROWS_AS(ext2_sl2_twopoint(1, 0, 1, 1, {Rational(2), Rational(2)}), ValidationError);
    CHECK_THROWS_AS(ext2_sl2_twopoint(-1, 0, 1, 1, kPoints), ValidationError);
    // no V(3)⊠V(1), V(1)⊠V(3) or V(1)⊠V(1) factor
    // V(3) ⊂ V(4)⊗V(1): these reach V(4)⊠C, not a V(3)⊠V(1) factor
    CHECK(ext2_sl2_twopoint(3, 0, 1, 0, kPoints) == 1);
    CHECK(ext2_sl2_twopoint(1, 0, 3, 0, kPoints) == 1);
    CHECK(ext2_sl2_twopoint(3, 1, 0, 0, kPoints) == 0);
    CHECK(ext2_sl2_twopoint(1, 3, 0, 0, kPoints) == 0);
    CHECK(ext2_sl2_twopoint(1, 1, 0, 0, kPoints) == 0);
    CHECK(ext2_sl2_twopoint(0, 0, 1, 1, kPoints) == 0);
    CHECK(ext2_sl2_twopoint(0, 0, 3, 1, kPoints) == 0);
    CHECK(ext2_sl2_twopoint(0, 0, 1, 3, kPoints) == 0);
    // through V(2)⊠V(2) and V(4)⊠C, once each
    CHECK(ext2_sl2_twopoint(1, 1, 3, 1, kPoints) == 2);
}

TEST_CASE("self Ext2 for sl2") {
    CHECK(self_ext2_sl2(1, 0, kPoints) == 0);
    CHECK(self_ext2_sl2(2, 0, kPoints) == 1);
    CHECK(self_ext2_sl2(1, 1, kPoints) == 1);
    CHECK(self_ext2_sl2(0, 2, kPoints) == 1);
    CHECK(self_ext2_sl2(0, 0, kPoints) == 0);
    // V(2)⊗V(2) ⊠ V(2)⊗V(2) hits V(4) twice and V(2)⊠V(2) once
    CHECK(self_ext2_sl2(2, 2, kPoints) == 3);
}

TEST_CASE("assembled H2 of the sl2 ideal") {
    for (int s : {3, 4})
        CHECK(assembled_h2_ideal(RootSystem('A', 1), kPoints, s) == sl2_h2_two_points());
}

TEST_CASE("general Ext2 report") {
    RootSystem a1('A', 1);
    auto P = [&](const char* s) { return WeightAssignment::parse(s, a1); };
    auto r = ext2_general_report(a1, kPoints, P(""), P("0:[4]"), 3);
    CHECK(r.dim == 1);
    CHECK(r.annotations == std::vector<std::string>{"matches closed form"});
    auto r2 = ext2_general_report(a1, kPoints, P("0:[2];1:[2]"), P(""), 3);
    CHECK(r2.dim == 1);
    CHECK(r2.annotations.front() == "matches closed form");
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 4; ++c) {
                auto pi = two_point(a1, Weight({a}), Weight({b}));
                auto pi2 = two_point(a1, Weight({c}), Weight({0}));
                if (a == c && b == 0)
                    continue;
                CHECK(ext2_general_report(a1, kPoints, pi, pi2, 3).annotations.front() == "matches closed form");
            }
    CHECK_THROWS_AS(ext2_general_report(a1, kPoints, P("0:[1]"), P("0:[1]"), 3), ValidationError);
    CHECK_THROWS_AS(ext2_general_report(a1, kPoints, P("2:[1]"), P("0:[1]"), 3), ValidationError);
    CHECK_THROWS_AS(ext2_general_report(a1, {Rational(0)}, P("0:[1]"), P(""), 3), ValidationError);

    RootSystem a2('A', 2);
    auto Q = [&](const char* s) { return WeightAssignment::parse(s, a2); };
    auto r3 = ext2_general_report(a2, kPoints, Q(""), Q("0:[3,0]"), 3);
    CHECK(r3.dim == 1);
    CHECK(r3.annotations == std::vector<std::string>{"truncation-based"});
    CHECK(ext2_general_report(a2, kPoints, Q(""), Q("1:[0,3]"), 3).dim == 1);
}
