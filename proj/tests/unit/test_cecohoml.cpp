#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curcoh/cecohoml.hpp"
#include "curcoh/errors.hpp"

using namespace curcoh;

namespace {

Weight W(std::vector<int> c) { return Weight(std::move(c)); }
MultiWeight P(std::vector<int> a, std::vector<int> b) { return MultiWeight(std::vector<Weight>{W(a), W(b)}); }

DecompositionReport report(std::vector<Factor> fs, int arity = 1) {
    DecompositionReport r;
    r.arity = arity;
    r.factors = std::move(fs);
    r.normalize();
    return r;
}

} // namespace

TEST_CASE("differential of an abelian algebra vanishes") {
    auto L = build_gtp_s(RootSystem('A', 2), 2);
    auto triv = trivial_module(L);
    for (int n = 0; n <= 3; ++n)
        CHECK(ce_differential(L, triv, n).is_zero());
}

TEST_CASE("sl2 boundary of x∧y") {
    RootSystem a1('A', 1);
    auto g = structure_constants(a1);
    auto d2 = ce_differential(g, trivial_module(g), 2);
    // Λ² basis: y∧h, y∧x, h∧x; ∂(y∧x) = −[y,x] = h, hence ∂(x∧y) = −h
    CHECK(d2.rows() == 3);
    CHECK(d2.get(1, 1) == 1);
    CHECK(d2.row(1).size() == 1);
    // module terms: ∂(x⊗v) = −x·v on V(1)
    auto v = irreducible_module(g, W({1}));
    auto d1 = ce_differential(g, v, 1);
    const auto idx = chevalley_index(a1);
    // source row (x, v_low) = idx.x(0)*2 + 1 maps to −(x·v_low) = −v_high in C_0
    CHECK(d1.get(idx.x(0) * 2 + 1, 0) == -v.action[idx.x(0)].get(0, 1));
}

TEST_CASE("gtp3 boundary") {
    RootSystem a1('A', 1);
    auto L = build_gtp_s(a1, 3);
    auto d2 = ce_differential(L, trivial_module(L), 2);
    const auto idx = chevalley_index(a1);
    // pairs in lexicographic order: (y⊗t, x⊗t) is pair (0, 2) -> row 1
    CHECK(d2.get(1, 3 + idx.h(0)) == 1); // ∂(y⊗t ∧ x⊗t) = h⊗t², so ∂(x⊗t ∧ y⊗t) = −h⊗t²
}

TEST_CASE("cohomology of gtp_s for sl2") {
    RootSystem a1('A', 1);
    auto L = build_gtp_s(a1, 5);
    auto triv = trivial_module(L);
    CHECK(decompose_cohomology(L, triv, 0, 1) == report({{W({0}), 1, 0}}));
    CHECK(decompose_cohomology(L, triv, 1, 1) == report({{W({2}), 1, 1}}));
    CHECK(decompose_cohomology(L, triv, 2, 1) == report({{W({4}), 1, 3}, {W({2}), 1, 5}}));
    CHECK_THROWS_AS(decompose_cohomology(L, triv, 2, 2), ValidationError);
}

TEST_CASE("full truncation has no H²") {
    auto L = build_full_truncation(RootSystem('A', 1), {TruncationSpec::Kind::FullPolynomial, 2, {}});
    CHECK(decompose_cohomology(L, trivial_module(L), 2, 1).empty());
}

TEST_CASE("g ⊗ I/I³ over two points") {
    RootSystem a1('A', 1);
    auto L = build_gIs(a1, {0, 1}, 3).first;
    auto triv = trivial_module(L);
    CHECK(decompose_cohomology(L, triv, 1, 2) == report({{P({2}, {0}), 1, {}}, {P({0}, {2}), 1, {}}}, 2));
    CHECK(decompose_cohomology(L, triv, 2, 2) == report({{P({4}, {0}), 1, {}},
                                                         {P({2}, {0}), 1, {}},
                                                         {P({2}, {2}), 1, {}},
                                                         {P({0}, {2}), 1, {}},
                                                         {P({0}, {4}), 1, {}}},
                                                        2));
}

TEST_CASE("Euler characteristic per block") {
    RootSystem a1('A', 1);
    auto abel = build_gtp_s(a1, 2);
    CHECK(euler_check(abel, trivial_module(abel), 3).pass);
    auto g = structure_constants(a1);
    CHECK(euler_check(g, trivial_module(g), 3).pass);
    auto gtp3 = build_gtp_s(a1, 3);
    CHECK(euler_check(gtp3, trivial_module(gtp3), 4).pass);
    auto v = irreducible_module(g, W({2}));
    CHECK(euler_check(g, v, 3).pass);
    // sl2: every nonzero-weight block has vanishing homology
    auto bc = build_block_complex(g, trivial_module(g), 0, 3, ComplexKind::Chains);
    for (const auto& [key, data] : bc.blocks)
        if (!key.weight.is_zero())
            for (int n = 0; n <= 3; ++n)
                CHECK(bc.homology(data, n) == 0);
}

TEST_CASE("Whitehead vanishing") {
    for (auto [t, n] : {std::pair{'A', 1}, std::pair{'A', 2}}) {
        RootSystem rs(t, n);
        auto g = structure_constants(rs);
        std::vector<Weight> ws{Weight::zero(n), rs.theta()};
        ws.push_back(n == 1 ? W({1}) : W({1, 0}));
        for (const auto& w : ws) {
            auto m = irreducible_module(g, w);
            for (int deg : {1, 2}) {
                auto chi = cohomology_character(g, m, deg);
                CHECK(chi.by_degree.empty());
            }
        }
    }
}

TEST_CASE("duality and d∘d") {
    RootSystem a1('A', 1);
    auto gtp = build_gtp_s(a1, 4);
    for (int n = 0; n <= 3; ++n)
        CHECK(duality_check(gtp, n).pass);
    auto gis = build_gIs(a1, {0, 1}, 3).first;
    CHECK(duality_check(gis, 2).pass);
    auto g = structure_constants(RootSystem('A', 2));
    CHECK(dd_check(g, irreducible_module(g, W({1, 1})), 2).pass);
    CHECK(dd_check(gis, trivial_module(gis), 3).pass);
}

TEST_CASE("invariants vanish and support is bounded") {
    for (auto [t, n] : {std::pair{'A', 1}, std::pair{'A', 2}}) {
        RootSystem rs(t, n);
        auto L = build_gtp_s(rs, 4);
        auto triv = trivial_module(L);
        for (int i : {1, 2}) {
            auto r = decompose_cohomology(L, triv, i, 1);
            CHECK(r.multiplicity(Weight::zero(n)) == 0);
            for (const auto& f : r.factors)
                CHECK(rs.dominated_by(f.highest.parts[0], rs.theta() * i));
        }
    }
}

TEST_CASE("thread count does not change results") {
    auto L = build_gtp_s(RootSystem('A', 2), 3);
    auto triv = trivial_module(L);
    EngineOptions one{1, true}, four{4, true};
    CHECK(cohomology_character(L, triv, 2, one) == cohomology_character(L, triv, 2, four));
}

TEST_CASE("stabilization heuristic") {
    RootSystem a1('A', 1);
    auto v = stabilization_gtp(a1, 2, 4);
    CHECK(v.stable);
    auto w = stabilization_gIs(a1, {0, 1}, 2, 3);
    CHECK(w.stable);
}
