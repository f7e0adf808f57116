#include "curcoh/cyclic.hpp"

#include "curcoh/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace curcoh::cyclic {

using exactmat::SparseRatMatrix;
using poly::Poly;

namespace {

const Poly& f_norm() {
    static const Poly f{0, -1, 1};
    return f;
}

void check_points(const std::vector<Rational>& points) {
    if (points.size() != 2)
        throw ValidationError("exactly two points are required");
    if (points[0] == points[1])
        throw ValidationError("points must be distinct (repeated " + points[0].get_str() + ")");
}

} // namespace

bool is_basis_degree(int d) { return d == 0 || d >= 2; }

Poly basis_poly(int d) {
    if (!is_basis_degree(d))
        throw ValidationError("no basis element of degree " + std::to_string(d));
    Poly p = poly::pow(f_norm(), d / 2);
    return d % 2 ? poly::mul(Poly{0, 1}, p) : p;
}

std::pair<int, int> basis_label(int d) {
    if (d % 2 == 0)
        return {d / 2, d / 2};
    return {(d + 1) / 2, (d - 1) / 2};
}

std::string label_str(int d) {
    if (d == 0)
        return "1";
    const auto [i, j] = basis_label(d);
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::vector<std::pair<int, Rational>> expand(const Poly& p) {
    // f-adic expansion p = Σ (c_m + d_m t) f^m
    std::vector<std::pair<int, Rational>> out;
    Poly rest = p;
    poly::trim(rest);
    for (int m = 0; !poly::is_zero(rest); ++m) {
        const Poly r = poly::mod(rest, f_norm());
        const Rational c = r.size() > 0 ? r[0] : Rational(0);
        const Rational d = r.size() > 1 ? r[1] : Rational(0);
        if (c != 0)
            out.emplace_back(2 * m, c);
        if (d != 0) {
            if (m == 0)
                throw ValidationError("polynomial " + poly::str(p) + " is not in C ⊕ I");
            out.emplace_back(2 * m + 1, d);
        }
        // (rest − r)/f
        Poly q = poly::sub(rest, r);
        Poly quotient;
        while (!poly::is_zero(q)) {
            const int dq = poly::degree(q);
            Poly term = poly::monomial(dq - 2, q[static_cast<std::size_t>(dq)]);
            quotient = poly::add(quotient, term);
            q = poly::sub(q, poly::mul(term, f_norm()));
        }
        rest = quotient;
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<std::pair<int, Rational>> expand_label(int i, int j) {
    return expand(poly::mul(poly::pow(Poly{0, 1}, i), poly::pow(Poly{-1, 1}, j)));
}

std::size_t FilteredWedgeSpace::index_of(int du, int dv) const {
    auto it = index.find({du, dv});
    if (it == index.end())
        throw InvariantViolation("wedge outside the cutoff");
    return it->second;
}

std::string FilteredWedgeSpace::label(std::size_t k) const {
    return label_str(basis[k].second) + "∧" + label_str(basis[k].first);
}

namespace {

void add_wedge(const FilteredWedgeSpace& w, SparseRatMatrix::Row& row,
               const std::vector<std::pair<int, Rational>>& u, int v) {
    for (const auto& [du, c] : u) {
        if (du == v)
            continue;
        const auto key = du < v ? std::make_pair(du, v) : std::make_pair(v, du);
        const Rational coeff = du < v ? c : Rational(-c);
        auto [it, fresh] = row.try_emplace(w.index_of(key.first, key.second), coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second == 0)
                row.erase(it);
        }
    }
}

std::vector<std::pair<int, Rational>> product(int a, int b) {
    return expand(poly::mul(basis_poly(a), basis_poly(b)));
}

} // namespace

SparseRatMatrix::Row FilteredWedgeSpace::generator(int a, int b, int c) const {
    if (a + b + c > cutoff)
        throw ValidationError("generator degree exceeds the cutoff");
    SparseRatMatrix::Row row;
    add_wedge(*this, row, product(a, b), c);
    add_wedge(*this, row, product(b, c), a);
    add_wedge(*this, row, product(c, a), b);
    return row;
}

FilteredWedgeSpace build_wedge_space(int D, bool only_f) {
    FilteredWedgeSpace w;
    w.cutoff = D;
    std::vector<int> degs;
    for (int d = 0; d <= D; ++d)
        if (is_basis_degree(d) && (!only_f || d % 2 == 0))
            degs.push_back(d);
    for (int total = 0; total <= D; ++total)
        for (int du : degs)
            for (int dv : degs)
                if (du < dv && du + dv == total) {
                    w.index.emplace(std::make_pair(du, dv), w.basis.size());
                    w.basis.emplace_back(du, dv);
                }
    w.generators = SparseRatMatrix(0, w.basis.size());
    for (std::size_t i = 0; i < degs.size(); ++i)
        for (std::size_t j = i; j < degs.size(); ++j)
            for (std::size_t k = j; k < degs.size(); ++k) {
                if (degs[i] + degs[j] + degs[k] > D)
                    continue;
                auto row = w.generator(degs[i], degs[j], degs[k]);
                if (!row.empty())
                    w.generators.append_row(row);
            }
    return w;
}

HC1Result hc1_cutoff(const std::vector<Rational>& points, int D) {
    check_points(points);
    if (D < 5 || D > 16)
        throw ValidationError("cutoff must lie in [5, 16]");
    const FilteredWedgeSpace w = build_wedge_space(D);
    HC1Result r;
    r.dim = exactmat::quotient_dim(SparseRatMatrix::identity(w.basis.size()), w.generators);
    exactmat::RowSpaceBasis span(w.basis.size());
    for (std::size_t g = 0; g < w.generators.rows(); ++g)
        span.insert(w.generators.row(g));
    for (std::size_t k = 0; k < w.basis.size(); ++k)
        if (span.insert({{k, Rational(1)}}))
            r.survivors.push_back(w.label(k));
    if (r.survivors.size() != r.dim)
        throw InvariantViolation("survivor count disagrees with the quotient dimension");
    return r;
}

std::size_t hc1_Cf_cutoff(int D) {
    if (D < 2)
        throw ValidationError("cutoff must be at least 2");
    const FilteredWedgeSpace w = build_wedge_space(D, true);
    return exactmat::quotient_dim(SparseRatMatrix::identity(w.basis.size()), w.generators);
}

std::size_t hc1_finite(const AlgebraTable& a) {
    try {
        a.verify();
    } catch (const InvariantViolation& e) {
        throw ValidationError(std::string("invalid algebra table: ") + e.what());
    }
    const std::size_t n = a.dim();
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            index.emplace(std::make_pair(i, j), index.size());
    SparseRatMatrix gens(0, index.size());
    auto wedge = [&](SparseRatMatrix::Row& row, const SparseVec& u, std::size_t v) {
        for (const auto& t : u) {
            if (t.index == v)
                continue;
            const auto key = t.index < v ? std::make_pair(t.index, v) : std::make_pair(v, t.index);
            const Rational coeff = t.index < v ? t.coeff : Rational(-t.coeff);
            auto [it, fresh] = row.try_emplace(index.at(key), coeff);
            if (!fresh) {
                it->second += coeff;
                if (it->second == 0)
                    row.erase(it);
            }
        }
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = j; k < n; ++k) {
                SparseRatMatrix::Row row;
                wedge(row, a.product(i, j), k);
                wedge(row, a.product(j, k), i);
                wedge(row, a.product(k, i), j);
                if (!row.empty())
                    gens.append_row(row);
            }
    return exactmat::quotient_dim(SparseRatMatrix::identity(index.size()), gens);
}

bool survivors_independent(int D) {
    if (D < 7)
        throw ValidationError("both survivors need cutoff at least 7");
    const FilteredWedgeSpace w = build_wedge_space(D);
    exactmat::RowSpaceBasis span(w.basis.size());
    for (std::size_t g = 0; g < w.generators.rows(); ++g)
        span.insert(w.generators.row(g));
    // (2,1)∧(1,1) = e3∧e2 and (3,2)∧(1,1) = e5∧e2
    return span.insert({{w.index_of(2, 3), Rational(1)}}) && span.insert({{w.index_of(2, 5), Rational(1)}});
}

namespace {

struct Label {
    int i, j;
    Label operator*(const Label& o) const { return {i + o.i, j + o.j}; }
    bool operator==(const Label&) const = default;
};

} // namespace

SparseRatMatrix relation_matrix(int D) {
    if (D < 4)
        throw ValidationError("relation matrix needs D ≥ 4 (the row pattern degenerates below)");
    const int n = D - 1;
    // column c ↔ (D−c+1, D−c) ∧ (c,c)
    auto column = [&](const Label& odd, const Label& even) -> int {
        if (odd.i != odd.j + 1 || even.i != even.j)
            throw InvariantViolation("term outside the relation pattern");
        const int c = even.i;
        if (odd.i != D - c + 1)
            throw InvariantViolation("term outside the relation pattern");
        return c;
    };
    SparseRatMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    // rows 1..D−2: a = (D−i, D−i−1), b = (i,i), c = (1,1)
    for (int i = 1; i <= D - 2; ++i) {
        const Label a{D - i, D - i - 1}, b{i, i}, c{1, 1};
        auto put = [&](const Label& x, const Label& y) {
            // x∧y, oriented as (odd)∧(even)
            const bool x_odd = x.i == x.j + 1;
            const Rational sign = x_odd ? 1 : -1;
            const int col = x_odd ? column(x, y) : column(y, x);
            m.add(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(col - 1), sign);
        };
        put(a * b, c);
        put(b * c, a);
        put(c * a, b);
    }
    // last row: a = (D−2, D−3), b = c = (2,1), reduced modulo lower degrees to
    // −2 (2,1)∧(D−1,D−1) − (D−2,D−3)∧(3,3)
    m.add(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(D - 2), -2);
    m.add(static_cast<std::size_t>(n - 1), 2, -1);
    return m;
}

Integer detM(int D) {
    const Rational d = exactmat::determinant(relation_matrix(D));
    if (d.get_den() != 1)
        throw InvariantViolation("non-integral determinant");
    return d.get_num();
}

} // namespace curcoh::cyclic
