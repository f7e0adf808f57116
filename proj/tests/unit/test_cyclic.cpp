#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curcoh/chevalley.hpp"
#include "curcoh/cyclic.hpp"
#include "curcoh/errors.hpp"

#include <algorithm>
#include <numeric>

using namespace curcoh;
using namespace curcoh::cyclic;

namespace {

Rational leibniz(const std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    Rational total = 0;
    do {
        int inv = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                inv += p[i] > p[j];
        Rational prod = 1;
        for (std::size_t i = 0; i < n; ++i)
            prod *= m[i][p[i]];
        total += inv % 2 ? Rational(-prod) : prod;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

std::vector<std::pair<int, Rational>> as_vec(std::initializer_list<std::pair<int, int>> l) {
    std::vector<std::pair<int, Rational>> v;
    for (auto [d, c] : l)
        v.emplace_back(d, Rational(c));
    return v;
}

int degree_of(std::pair<int, int> label) { return label.first + label.second; }

} // namespace

TEST_CASE("monomial basis and expansion") {
    CHECK(!is_basis_degree(1));
    CHECK(basis_label(4) == std::pair{2, 2});
    CHECK(basis_label(7) == std::pair{4, 3});
    CHECK(label_str(5) == "(3,2)");
    for (int d : {0, 2, 3, 4, 5, 8, 11})
        CHECK(expand(basis_poly(d)) == as_vec({{d, 1}}));
    CHECK_THROWS_AS(expand(poly::Poly{0, 1}), ValidationError);
    // t f^a · t f^b = t² f^{a+b} = f^{a+b+1} + t f^{a+b}
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            const int d = 2 * a + 1, e = 2 * b + 1;
            CHECK(expand(poly::mul(basis_poly(d), basis_poly(e))) == as_vec({{d + e - 1, 1}, {d + e, 1}}));
            CHECK(expand(poly::mul(basis_poly(d), basis_poly(2 * b))) == as_vec({{d + 2 * b, 1}}));
        }
    // (i+1, j) = (i, j+1) + (i, j)
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            poly::Poly lhs = poly::mul(poly::pow(poly::Poly{0, 1}, i + 1), poly::pow(poly::Poly{-1, 1}, j));
            poly::Poly rhs = poly::add(poly::mul(poly::pow(poly::Poly{0, 1}, i), poly::pow(poly::Poly{-1, 1}, j + 1)),
                                       poly::mul(poly::pow(poly::Poly{0, 1}, i), poly::pow(poly::Poly{-1, 1}, j)));
            CHECK(expand_label(i + 1, j) == expand(rhs));
            CHECK(expand(lhs) == expand(rhs));
        }
}

TEST_CASE("HC1 of C plus I with cutoff") {
    const std::vector<Rational> pts{0, 1};
    auto r5 = hc1_cutoff(pts, 5);
    CHECK(r5.dim == 1);
    CHECK(r5.survivors == std::vector<std::string>{"(2,1)∧(1,1)"});
    CHECK(hc1_cutoff(pts, 6).dim == 1);
    for (int D = 7; D <= 14; ++D) {
        auto r = hc1_cutoff(pts, D);
        CHECK(r.dim == 2);
        CHECK(r.survivors == std::vector<std::string>{"(2,1)∧(1,1)", "(3,2)∧(1,1)"});
    }
    // the answer is independent of the two points
    CHECK(hc1_cutoff({Rational(-3), Rational(7, 2)}, 9).dim == 2);
    CHECK_THROWS_AS(hc1_cutoff({Rational(1), Rational(1)}, 8), ValidationError);
    CHECK_THROWS_AS(hc1_cutoff(pts, 4), ValidationError);
    CHECK_THROWS_AS(hc1_cutoff(pts, 17), ValidationError);
    for (int D = 7; D <= 12; ++D)
        CHECK(survivors_independent(D));
}

TEST_CASE("low-degree relations") {
    auto w = build_wedge_space(7);
    // (2,2)∧(1,1) = f² ∧ f is a generator: f·f ∧ 1 + f·1 ∧ f + 1·f ∧ f reduces to f²∧1 terms
    exactmat::RowSpaceBasis span(w.basis.size());
    for (std::size_t g = 0; g < w.generators.rows(); ++g)
        span.insert(w.generators.row(g));
    CHECK(span.contains({{w.index_of(2, 4), Rational(1)}}));
    CHECK(!span.contains({{w.index_of(2, 3), Rational(1)}}));
    // 2 (3,2)∧(1,1) − (2,1)∧(2,2) lies in T
    exactmat::SparseRatMatrix::Row rel{{w.index_of(2, 5), Rational(-2)}, {w.index_of(3, 4), Rational(-1)}};
    CHECK(span.contains(rel));
}

TEST_CASE("HC1 of C[f] with cutoff vanishes") {
    for (int D = 2; D <= 10; ++D)
        CHECK(hc1_Cf_cutoff(D) == 0);
    CHECK_THROWS_AS(hc1_Cf_cutoff(1), ValidationError);
}

TEST_CASE("HC1 of finite algebra tables") {
    // C ⊕ I/I²: Λ² has 1∧f, 1∧tf, f∧tf and only the first two are killed
    CHECK(hc1_finite(build_algebra_table({Rational(0), Rational(1)}, 2, true)) == 1);
    // C[t]/t²: every wedge involves 1 or is zero
    CHECK(hc1_finite(full_truncation_algebra(2)) == 0);
    // a commutative algebra without unit: the square-zero ideal I/I² has Λ² surviving
    auto a = build_algebra_table({Rational(0), Rational(1)}, 2, false);
    CHECK(hc1_finite(a) == a.dim() * (a.dim() - 1) / 2);
    AlgebraTable bad = full_truncation_algebra(2);
    bad.products[1][0] = {{0, Rational(1)}};
    CHECK_THROWS_AS(hc1_finite(bad), ValidationError);
}

TEST_CASE("relation matrix and its determinant") {
    auto m4 = relation_matrix(4).to_dense();
    CHECK(m4 == std::vector<std::vector<Rational>>{{2, -1, 0}, {1, 1, -1}, {0, 0, -3}});
    for (int D = 4; D <= 8; ++D) {
        auto dense = relation_matrix(D).to_dense();
        CHECK(leibniz(dense) == Rational(-(2 * D + 1)));
        CHECK(detM(D) == -(2 * D + 1));
        for (int i = 2; i <= D - 2; ++i) {
            std::vector<Rational> row(static_cast<std::size_t>(D - 1), 0);
            row[0] += 1;
            row[static_cast<std::size_t>(i - 1)] += 1;
            row[static_cast<std::size_t>(i)] -= 1;
            CHECK(dense[static_cast<std::size_t>(i - 1)] == row);
        }
    }
    for (int D = 9; D <= 30; ++D)
        CHECK(detM(D) == -(2 * D + 1));
    CHECK_THROWS_AS(relation_matrix(3), ValidationError);
}

TEST_CASE("relation matrix rows are the top-degree parts of actual generators") {
    for (int D = 4; D <= 9; ++D) {
        const int top = 2 * D + 1;
        auto w = build_wedge_space(top);
        auto dense = relation_matrix(D).to_dense();
        auto project = [&](const exactmat::SparseRatMatrix::Row& row) {
            // coordinates on column c = (D−c+1, D−c)∧(c,c) = e_{2D−2c+1} ∧ e_{2c}
            std::vector<Rational> out(static_cast<std::size_t>(D - 1), 0);
            for (const auto& [k, v] : row) {
                if (w.total_degree(k) != top)
                    continue;
                auto [lo, hi] = w.basis[k];
                const int even = lo % 2 == 0 ? lo : hi;
                const int odd = lo % 2 == 0 ? hi : lo;
                REQUIRE(even >= 2);
                const int c = even / 2;
                REQUIRE(odd == 2 * D - 2 * c + 1);
                out[static_cast<std::size_t>(c - 1)] += odd == lo ? v : Rational(-v);
            }
            return out;
        };
        for (int i = 1; i <= D - 2; ++i) {
            auto g = w.generator(degree_of({D - i, D - i - 1}), degree_of({i, i}), 2);
            CHECK(project(g) == dense[static_cast<std::size_t>(i - 1)]);
        }
        auto last = w.generator(degree_of({D - 2, D - 3}), 3, 3);
        CHECK(project(last) == dense[static_cast<std::size_t>(D - 2)]);
    }
}
