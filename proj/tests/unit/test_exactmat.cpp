#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curcoh/errors.hpp"
#include "curcoh/exactmat.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace curcoh;
using exactmat::SparseRatMatrix;

namespace {

using Dense = std::vector<std::vector<Rational>>;

// Textbook dense Gauss-Jordan, kept deliberately naive.
std::size_t dense_rank(Dense a) {
    std::size_t r = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = 0; j < cols; ++j)
                a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

Rational leibniz(const Dense& a) {
    const std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        int inv = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                inv += perm[i] > perm[j];
        Rational term = inv % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i)
            term *= a[i][perm[i]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Dense random_dense(std::mt19937& rng, std::size_t rows, std::size_t cols, int density_pct) {
    std::uniform_int_distribution<int> val(-4, 4), coin(0, 99), den(1, 3);
    Dense a(rows, std::vector<Rational>(cols, 0));
    for (auto& row : a)
        for (auto& x : row)
            if (coin(rng) < density_pct)
                {
                    x = Rational(val(rng), den(rng));
                    x.canonicalize();
                }
    return a;
}

} // namespace

TEST_CASE("set/get keeps the matrix sparse") {
    SparseRatMatrix m(2, 3);
    m.set(0, 1, Rational(1, 2));
    m.add(0, 1, Rational(-1, 2));
    CHECK(m.nnz() == 0);
    m.set(1, 2, 5);
    CHECK(m.get(1, 2) == 5);
    CHECK_THROWS_AS(m.set(2, 0, 1), ValidationError);
}

TEST_CASE("rank agrees with dense elimination on random matrices") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
        Dense a = random_dense(rng, rows, cols, 20 + static_cast<int>(rng() % 60));
        // plant dependencies
        if (rows > 2)
            for (std::size_t j = 0; j < cols; ++j)
                a[rows - 1][j] = a[0][j] * 3 - a[1][j];
        auto s = SparseRatMatrix::from_dense(a);
        CHECK(exactmat::rank(s) == dense_rank(a));
        CHECK(exactmat::rank(s.transpose()) == dense_rank(a));
        CHECK(exactmat::nullity(s) == cols - dense_rank(a));
    }
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 6;
        Dense a = random_dense(rng, n, n, 70);
        CHECK(exactmat::determinant(SparseRatMatrix::from_dense(a)) == leibniz(a));
    }
    CHECK_THROWS_AS(exactmat::determinant(SparseRatMatrix(2, 3)), ValidationError);
}

TEST_CASE("product and transpose") {
    Dense a{{1, 2}, {0, Rational(1, 3)}};
    Dense b{{0, 1}, {1, 0}};
    auto p = SparseRatMatrix::from_dense(a) * SparseRatMatrix::from_dense(b);
    CHECK(p.to_dense() == Dense{{2, 1}, {Rational(1, 3), 0}});
    CHECK(SparseRatMatrix::from_dense(a).transpose().get(1, 0) == 2);
    CHECK((SparseRatMatrix::identity(3) * SparseRatMatrix::identity(3)) == SparseRatMatrix::identity(3));
}

TEST_CASE("quotient_dim checks containment") {
    Dense big{{1, 0, 0}, {0, 1, 0}};
    Dense small{{1, 1, 0}};
    Dense outside{{0, 0, 1}};
    CHECK(exactmat::quotient_dim(SparseRatMatrix::from_dense(big), SparseRatMatrix::from_dense(small)) == 1);
    CHECK_THROWS_AS(
        exactmat::quotient_dim(SparseRatMatrix::from_dense(big), SparseRatMatrix::from_dense(outside)),
        InvariantViolation);
}

TEST_CASE("RowSpaceBasis tracks independence") {
    exactmat::RowSpaceBasis b(3);
    CHECK(b.insert({{0, 2}, {1, 4}}));
    CHECK_FALSE(b.insert({{0, Rational(1, 2)}, {1, 1}}));
    CHECK(b.insert({{1, 1}}));
    CHECK(b.contains({{0, 7}}));
    CHECK_FALSE(b.contains({{2, 1}}));
    CHECK(b.dim() == 2);
}
