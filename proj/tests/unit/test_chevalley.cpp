#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curcoh/chevalley.hpp"
#include "curcoh/errors.hpp"

#include <cstdlib>
#include <set>

using namespace curcoh;
using poly::Poly;

namespace {

Weight W(std::vector<int> c) { return Weight(std::move(c)); }

SparseVec single(std::size_t i, Rational c = 1) { return SparseVec{Term{i, c}}; }

bool abelian(const LieTable& L) {
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < L.dim(); ++j)
            if (!L.bracket(i, j).empty())
                return false;
    return true;
}

// Coefficient of x_{α+β} in [x_α, x_β] (all roots), collected over the table.
std::set<int> structure_constant_values(const RootSystem& rs) {
    std::set<int> out;
    const auto& pos = rs.positive_roots();
    std::vector<RootCoords> roots;
    for (const auto& r : pos) {
        roots.push_back(r);
        RootCoords n = r;
        for (int& x : n)
            x = -x;
        roots.push_back(n);
    }
    for (const auto& a : roots)
        for (const auto& b : roots) {
            RootCoords s = a;
            for (std::size_t i = 0; i < s.size(); ++i)
                s[i] += b[i];
            if (rs.is_root(s))
                out.insert(structure_constant(rs, a, b));
        }
    return out;
}

int string_p(const RootSystem& rs, const RootCoords& a, const RootCoords& b) {
    int p = 0;
    RootCoords c = b;
    for (;;) {
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] -= a[i];
        if (!rs.is_root(c))
            return p;
        ++p;
    }
}

} // namespace

TEST_CASE("sl2 Chevalley table") {
    RootSystem a1('A', 1);
    LieTable g = structure_constants(a1);
    REQUIRE(g.dim() == 3);
    const auto idx = chevalley_index(a1);
    CHECK(g.bracket(idx.x(0), idx.y(0)) == single(idx.h(0)));
    CHECK(g.bracket(idx.h(0), idx.x(0)) == single(idx.x(0), 2));
    CHECK(g.bracket(idx.h(0), idx.y(0)) == single(idx.y(0), -2));
}

TEST_CASE("structure constant magnitudes") {
    CHECK(structure_constant_values(RootSystem('A', 2)) == std::set<int>{-1, 1});
    CHECK(structure_constant_values(RootSystem('B', 2)) == std::set<int>{-2, -1, 1, 2});
    CHECK(structure_constant_values(RootSystem('G', 2)) == std::set<int>{-3, -2, -1, 1, 2, 3});
    CHECK(structure_constants(RootSystem('A', 2)).dim() == 8);
    CHECK(structure_constants(RootSystem('B', 2)).dim() == 10);
    for (auto [t, n] : {std::pair{'B', 3}, std::pair{'C', 3}, std::pair{'G', 2}, std::pair{'F', 4}}) {
        RootSystem rs(t, n);
        const auto& pos = rs.positive_roots();
        for (const auto& a : pos)
            for (const auto& b : pos) {
                RootCoords s = a;
                for (std::size_t i = 0; i < s.size(); ++i)
                    s[i] += b[i];
                if (rs.is_root(s))
                    CHECK(std::abs(structure_constant(rs, a, b)) == string_p(rs, a, b) + 1);
            }
    }
}

TEST_CASE("Jacobi holds for every finite type up to rank 6") {
    for (auto [t, n] : {std::pair{'A', 3}, std::pair{'B', 4}, std::pair{'C', 4}, std::pair{'D', 4}, std::pair{'D', 5},
                        std::pair{'E', 6}, std::pair{'F', 4}, std::pair{'G', 2}}) {
        RootSystem rs(t, n);
        LieTable g = structure_constants(rs);
        CHECK(g.dim() == static_cast<std::size_t>(rs.dim_algebra()));
        CHECK_NOTHROW(g.verify_all());
    }
}

TEST_CASE("positive truncations") {
    RootSystem a1('A', 1);
    auto l2 = build_gtp_s(a1, 2);
    CHECK(l2.dim() == 3);
    CHECK(abelian(l2));
    auto l3 = build_gtp_s(a1, 3);
    CHECK(l3.dim() == 6);
    const auto idx = chevalley_index(a1);
    // basis (t-power, g index): x⊗t = idx.x, h⊗t² = 3 + idx.h
    CHECK(l3.bracket(idx.x(0), idx.y(0)) == single(3 + idx.h(0)));
    CHECK(l3.t_degree(3 + idx.h(0)) == 2);
    CHECK_NOTHROW(l3.verify_all());
    auto a2 = build_gtp_s(RootSystem('A', 2), 2);
    CHECK(a2.dim() == 8);
    CHECK(abelian(a2));
    CHECK_THROWS_AS(build_gtp_s(a1, 1), ValidationError);
}

TEST_CASE("idempotent splitting") {
    auto sp = idempotent_splitting({0, 1}, 2);
    CHECK(sp.idempotents[1] == Poly{0, 0, 3, -2});
    CHECK(sp.idempotents[0] == Poly{1, 0, -3, 2});
    for (int s : {1, 2, 3, 5, 8})
        CHECK_NOTHROW(idempotent_splitting({Rational(-1), Rational(1, 2), Rational(3)}, s));
    CHECK_THROWS_AS(idempotent_splitting({1, 1}, 2), ValidationError);
}

TEST_CASE("g ⊗ I/I^s") {
    RootSystem a1('A', 1);
    auto [l2, sp2] = build_gIs(a1, {0, 1}, 2);
    CHECK(l2.dim() == 6);
    CHECK(abelian(l2));
    auto [l3, sp3] = build_gIs(a1, {0, 1}, 3);
    CHECK(l3.dim() == 12);
    CHECK(l3.weight_arity() == 2);
    CHECK_NOTHROW(l3.verify_all());
    const auto idx = chevalley_index(a1);
    const Poly f{0, -1, 1};
    const SparseVec xf = current_element(l3, idx.x(0), f);
    const SparseVec yf = current_element(l3, idx.y(0), f);
    CHECK(l3.bracket_vec(xf, yf) == current_element(l3, idx.h(0), poly::mul(f, f)));
    // images of the two embeddings commute
    for (std::size_t i = 0; i < l3.dim(); ++i)
        for (std::size_t j = 0; j < l3.dim(); ++j) {
            const bool slot_i = l3.weight(i).parts[0].is_zero() && !l3.weight(i).parts[1].is_zero();
            const bool slot_j = l3.weight(j).parts[1].is_zero() && !l3.weight(j).parts[0].is_zero();
            if (slot_i && slot_j)
                CHECK(l3.bracket(i, j).empty());
        }
    // first filtration layer has k·dim g elements
    std::size_t layer1 = 0;
    for (std::size_t i = 0; i < l3.dim(); ++i)
        layer1 += l3.basis_labels()[i].find("f^") == std::string::npos;
    CHECK(layer1 == 6);
    CHECK_THROWS_AS(build_gIs(a1, {2, 2}, 3), ValidationError);
    CHECK_THROWS_AS(build_gIs(a1, {0, 1}, 1), ValidationError);
    auto three = build_gIs(RootSystem('A', 2), {0, 1, 2}, 2);
    CHECK(three.first.dim() == 24);
    CHECK(three.first.weight_arity() == 3);
}

TEST_CASE("full and unital truncations") {
    RootSystem a1('A', 1);
    const auto idx = chevalley_index(a1);
    auto full2 = build_full_truncation(a1, {TruncationSpec::Kind::FullPolynomial, 2, {}});
    CHECK(full2.dim() == 6);
    CHECK(full2.bracket(idx.h(0), 3 + idx.x(0)) == single(3 + idx.x(0), 2));
    CHECK_NOTHROW(full2.verify_all());
    auto full1 = build_full_truncation(a1, {TruncationSpec::Kind::FullPolynomial, 1, {}});
    CHECK(full1.dim() == 3);
    auto g = structure_constants(a1);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(full1.bracket(i, j) == g.bracket(i, j));
    auto unital = build_full_truncation(a1, {TruncationSpec::Kind::UnitalAugmented, 2, {0, 1}});
    CHECK(unital.dim() == 9);
    CHECK_NOTHROW(unital.verify_all());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(unital.bracket(i, j) == g.bracket(i, j));
}

TEST_CASE("algebra tables") {
    auto u2 = build_algebra_table({0, 1}, 2, true);
    CHECK(u2.dim() == 3);
    CHECK(u2.basis_labels == std::vector<std::string>{"1", "f", "t f"});
    CHECK_NOTHROW(u2.verify());
    auto t3 = build_algebra_table({0}, 3, false);
    CHECK(t3.basis_labels == std::vector<std::string>{"f", "f^2"});
    CHECK(t3.polys[0] == Poly{0, 1});
    CHECK(t3.product(0, 0) == single(1));
    CHECK(t3.product(0, 1).empty());
    auto u3 = build_algebra_table({0, 1}, 3, true);
    CHECK(u3.dim() == 5);
    CHECK(u3.product(1, 1) == single(3));
    CHECK_NOTHROW(u3.verify());
    CHECK_THROWS_AS(build_algebra_table({0, 0}, 3, true), ValidationError);
}

TEST_CASE("irreducible modules") {
    struct Case { char t; int n; std::vector<int> w; std::size_t dim; };
    for (const auto& c : {Case{'A', 1, {3}, 4}, Case{'A', 2, {1, 1}, 8}, Case{'A', 2, {2, 0}, 6}, Case{'A', 2, {2, 2}, 27},
                          Case{'B', 2, {0, 1}, 4}, Case{'B', 2, {1, 1}, 16}, Case{'G', 2, {1, 0}, 7}, Case{'C', 3, {0, 1, 0}, 14}}) {
        RootSystem rs(c.t, c.n);
        auto m = irreducible_module(structure_constants(rs), W(c.w));
        CHECK(m.dim == c.dim);
    }
}

TEST_CASE("evaluation modules") {
    RootSystem a1('A', 1);
    const auto idx = chevalley_index(a1);
    auto gtp = build_gtp_s(a1, 3);
    auto triv = evaluation_module(a1, W({0}), 0, gtp);
    CHECK(triv.dim == 1);
    auto ev0 = evaluation_module(a1, W({1}), 0, gtp);
    for (const auto& a : ev0.action)
        CHECK(a.is_zero());
    CHECK_THROWS_AS(evaluation_module(a1, W({1}), 1, gtp), ValidationError);

    auto host = build_full_truncation(a1, {TruncationSpec::Kind::UnitalAugmented, 2, {0, 1}});
    auto v0 = evaluation_module(a1, W({1}), 0, host);
    auto v1 = evaluation_module(a1, W({1}), 1, host);
    auto g = structure_constants(a1);
    auto rho = irreducible_module(g, W({1}));
    CHECK(v0.action[idx.x(0)] == rho.action[idx.x(0)]);
    auto both = tensor_modules(v0, v1, host);
    CHECK(both.dim == 4);
    CHECK(both.weights[0] == v0.weights[0] + v1.weights[0]);
    CHECK(both.weights[3] == v0.weights[1] + v1.weights[1]);
    auto t = tensor_modules(trivial_module(host), v1, host);
    CHECK(t.dim == v1.dim);
    CHECK(t.action[idx.y(0)] == v1.action[idx.y(0)]);
    CHECK_THROWS_AS(tensor_modules(v0, ev0), ValidationError);

    // trivial modules at distinct points coincide
    auto z0 = evaluation_module(a1, W({0}), 0, host);
    auto z1 = evaluation_module(a1, W({0}), 1, host);
    CHECK(z0.action == z1.action);

    auto [gis, sp] = build_gIs(a1, {0, 1}, 3);
    auto slot2 = evaluation_module(a1, W({2}), 1, gis);
    CHECK(slot2.weights[0] == MultiWeight(std::vector<Weight>{W({0}), W({2})}));

    CHECK_NOTHROW(dual_module(rho).verify(g));
}
