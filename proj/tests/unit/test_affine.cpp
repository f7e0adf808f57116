#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curcoh/affine.hpp"
#include "curcoh/errors.hpp"

using namespace curcoh;

namespace {
Weight W(std::vector<int> c) { return Weight(std::move(c)); }
} // namespace

TEST_CASE("affine pairings") {
    CHECK(affinize(RootSystem('A', 1)).alpha0_pairings == std::vector<int>{-2});
    CHECK(affinize(RootSystem('A', 2)).alpha0_pairings == std::vector<int>{-1, -1});
    CHECK(table1(affinize(RootSystem('G', 2))) == std::set<int>{2});
    // corank one: rows weighted by the marks of the highest root and a_0 = 1 vanish
    for (auto [t, n] : {std::pair{'B', 3}, std::pair{'E', 7}, std::pair{'F', 4}, std::pair{'C', 4}}) {
        RootSystem rs(t, n);
        auto ard = affinize(rs);
        std::vector<int> marks{1};
        std::vector<int> kroot = rs.theta_root();
        // δ = α₀ + θ pairs to zero with every coroot
        for (std::size_t i = 0; i < ard.affine_cartan.size(); ++i) {
            int v = ard.affine_cartan[i][0];
            for (std::size_t j = 1; j < ard.affine_cartan.size(); ++j)
                v += kroot[j - 1] * ard.affine_cartan[i][j];
            CHECK(v == 0);
        }
    }
}

TEST_CASE("affine degree sets") {
    struct Row { char t; int n; std::set<int> j; };
    for (const auto& r : {Row{'A', 1, {1}}, Row{'A', 5, {1, 5}}, Row{'B', 4, {2}}, Row{'C', 5, {1}}, Row{'D', 6, {2}},
                          Row{'E', 6, {2}}, Row{'E', 7, {1}}, Row{'E', 8, {8}}, Row{'F', 4, {1}}, Row{'G', 2, {2}}})
        CHECK(table1(affinize(RootSystem(r.t, r.n))) == r.j);
}

TEST_CASE("W_a^1 for sl2") {
    auto els = enumerate_Wa1(affinize(RootSystem('A', 1)), 2);
    REQUIRE(els.size() == 3);
    CHECK(els[0].lambda_w == W({0}));
    CHECK(els[0].d_w == 0);
    CHECK(els[1].lambda_w == W({2}));
    CHECK(els[1].d_w == 1);
    CHECK(els[1].word_str() == "s0");
    CHECK(els[2].lambda_w == W({4}));
    CHECK(els[2].d_w == 3);
    CHECK(els[2].word_str() == "s0 s1");
}

TEST_CASE("length two elements") {
    auto a2 = enumerate_Wa1(affinize(RootSystem('A', 2)), 2);
    std::vector<std::pair<Weight, int>> two;
    for (const auto& e : a2)
        if (e.length == 2)
            two.emplace_back(e.lambda_w, e.d_w);
    CHECK(two.size() == 2);
    CHECK(std::count(two.begin(), two.end(), std::pair{W({0, 3}), 2}) == 1);
    CHECK(std::count(two.begin(), two.end(), std::pair{W({3, 0}), 2}) == 1);

    RootSystem g2('G', 2);
    auto ge = enumerate_Wa1(affinize(g2), 2);
    int count = 0;
    for (const auto& e : ge)
        if (e.length == 2) {
            ++count;
            CHECK(e.lambda_w == g2.theta() * 2 - g2.simple_roots()[1]);
            CHECK(e.d_w == 2);
        }
    CHECK(count == 1);

    for (auto [t, n] : {std::pair{'A', 3}, std::pair{'A', 6}, std::pair{'B', 3}, std::pair{'C', 3}, std::pair{'D', 5},
                        std::pair{'E', 6}, std::pair{'F', 4}}) {
        auto els = enumerate_Wa1(affinize(RootSystem(t, n)), 3);
        std::map<int, int> per_length;
        std::set<std::vector<int>> dots;
        for (const auto& e : els) {
            ++per_length[e.length];
            CHECK(e.lambda_w.dominant());
            dots.insert(e.dot_value);
        }
        CHECK(dots.size() == els.size());
        CHECK(per_length[0] == 1);
        CHECK(per_length[1] == 1);
        CHECK(per_length[2] == (t == 'A' ? 2 : 1));
    }
}

TEST_CASE("Garland-Lepowsky prediction") {
    auto a1 = affinize(RootSystem('A', 1));
    auto r1 = gl_predict(a1, 1);
    REQUIRE(r1.factors.size() == 1);
    CHECK(r1.factors[0].highest == MultiWeight(W({2})));
    CHECK(r1.factors[0].t_degree == 1);
    auto r2 = gl_predict(a1, 2);
    REQUIRE(r2.factors.size() == 1);
    CHECK(r2.factors[0].highest == MultiWeight(W({4})));
    CHECK(r2.factors[0].t_degree == 3);
    auto a2 = gl_predict(affinize(RootSystem('A', 2)), 2);
    CHECK(a2.multiplicity(W({3, 0}), 2) == 1);
    CHECK(a2.multiplicity(W({0, 3}), 2) == 1);
    CHECK(a2.total_multiplicity() == 2);
    CHECK_THROWS_AS(gl_predict(a1, 7), ValidationError);
    CHECK_THROWS_AS(enumerate_Wa1(a1, 7), ValidationError);
}
