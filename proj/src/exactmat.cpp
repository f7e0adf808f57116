#include "curcoh/exactmat.hpp"

#include "curcoh/errors.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>
#include <utility>

namespace curcoh::exactmat {

SparseRatMatrix::SparseRatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

SparseRatMatrix SparseRatMatrix::from_dense(const std::vector<std::vector<Rational>>& dense) {
    const std::size_t cols = dense.empty() ? 0 : dense.front().size();
    SparseRatMatrix m(dense.size(), cols);
    for (std::size_t r = 0; r < dense.size(); ++r) {
        if (dense[r].size() != cols)
            throw ValidationError("from_dense: ragged rows");
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, dense[r][c]);
    }
    return m;
}

SparseRatMatrix SparseRatMatrix::identity(std::size_t n) {
    SparseRatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

std::size_t SparseRatMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& r : data_)
        n += r.size();
    return n;
}

void SparseRatMatrix::check_index(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw ValidationError("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                              ") out of range for " + std::to_string(rows_) + "x" +
                              std::to_string(cols_));
}

void SparseRatMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
    check_index(r, c);
    if (sgn(v) == 0)
        data_[r].erase(c);
    else
        data_[r][c] = v;
}

void SparseRatMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
    check_index(r, c);
    if (sgn(v) == 0)
        return;
    auto [it, inserted] = data_[r].try_emplace(c, v);
    if (!inserted) {
        it->second += v;
        if (sgn(it->second) == 0)
            data_[r].erase(it);
    }
}

Rational SparseRatMatrix::get(std::size_t r, std::size_t c) const {
    check_index(r, c);
    auto it = data_[r].find(c);
    return it == data_[r].end() ? Rational(0) : it->second;
}

void SparseRatMatrix::append_row(const Row& row) {
    Row clean;
    for (const auto& [c, v] : row) {
        if (c >= cols_)
            throw ValidationError("append_row: column out of range");
        if (sgn(v) != 0)
            clean.emplace(c, v);
    }
    data_.push_back(std::move(clean));
    ++rows_;
}

void SparseRatMatrix::append_rows(const SparseRatMatrix& other) {
    if (other.cols_ != cols_)
        throw ValidationError("append_rows: column count mismatch");
    for (const auto& r : other.data_)
        data_.push_back(r);
    rows_ += other.rows_;
}

SparseRatMatrix SparseRatMatrix::transpose() const {
    SparseRatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r])
            t.data_[c].emplace(r, v);
    return t;
}

SparseRatMatrix SparseRatMatrix::operator*(const SparseRatMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw ValidationError("matrix product: inner dimensions differ");
    SparseRatMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [k, v] : data_[r])
            for (const auto& [c, w] : rhs.data_[k])
                out.add(r, c, v * w);
    return out;
}

std::vector<std::vector<Rational>> SparseRatMatrix::to_dense() const {
    std::vector<std::vector<Rational>> d(rows_, std::vector<Rational>(cols_, 0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r])
            d[r][c] = v;
    return d;
}

namespace {

using IntRow = std::vector<std::pair<std::size_t, Integer>>;

void make_primitive(IntRow& row) {
    if (row.empty())
        return;
    Integer g = 0;
    for (const auto& e : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
        if (g == 1)
            break;
    }
    if (row.front().second < 0)
        g = -g;
    if (g != 1)
        for (auto& e : row)
            mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

IntRow to_integer_row(const SparseRatMatrix::Row& row) {
    Integer l = 1;
    for (const auto& [c, v] : row)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    IntRow out;
    out.reserve(row.size());
    for (const auto& [c, v] : row)
        out.emplace_back(c, Integer(v.get_num() * (l / v.get_den())));
    make_primitive(out);
    return out;
}

// a*x − b*y, both sorted by column.
IntRow combine(const Integer& a, const IntRow& x, const Integer& b, const IntRow& y) {
    IntRow out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.emplace_back(x[i].first, a * x[i].second);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, -b * y[j].second);
            ++j;
        } else {
            Integer v = a * x[i].second - b * y[j].second;
            if (v != 0)
                out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    make_primitive(out);
    return out;
}

const Integer* entry_at(const IntRow& row, std::size_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

} // namespace

// Fraction-free elimination: rows are kept as primitive integer vectors and
// every update is a*row − b*pivot followed by content removal. The pivot is
// taken in the sparsest nonzero column, on the shortest row of that column
// (Markowitz cost restricted to that column); ties go to the lowest index.
std::size_t rank(const SparseRatMatrix& m) {
    const std::size_t ncols = m.cols();
    std::vector<IntRow> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows.push_back(to_integer_row(m.row(r)));

    std::vector<std::set<std::size_t>> col_rows(ncols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& e : rows[r])
            col_rows[e.first].insert(r);

    std::size_t rk = 0;
    for (;;) {
        std::size_t best_col = ncols;
        std::size_t best_count = std::numeric_limits<std::size_t>::max();
        for (std::size_t c = 0; c < ncols; ++c) {
            const std::size_t n = col_rows[c].size();
            if (n > 0 && n < best_count) {
                best_count = n;
                best_col = c;
                if (n == 1)
                    break;
            }
        }
        if (best_col == ncols)
            break;

        std::size_t pivot = *col_rows[best_col].begin();
        for (std::size_t r : col_rows[best_col])
            if (rows[r].size() < rows[pivot].size())
                pivot = r;
        ++rk;

        for (const auto& e : rows[pivot])
            col_rows[e.first].erase(pivot);
        const IntRow prow = std::move(rows[pivot]);
        rows[pivot].clear();
        const Integer pval = *entry_at(prow, best_col);

        const std::vector<std::size_t> targets(col_rows[best_col].begin(), col_rows[best_col].end());
        for (std::size_t r : targets) {
            Integer rval = *entry_at(rows[r], best_col);
            Integer g;
            mpz_gcd(g.get_mpz_t(), pval.get_mpz_t(), rval.get_mpz_t());
            Integer a = pval / g;
            Integer b = rval / g;
            for (const auto& e : rows[r])
                col_rows[e.first].erase(r);
            rows[r] = combine(a, rows[r], b, prow);
            for (const auto& e : rows[r])
                col_rows[e.first].insert(r);
        }
    }
    return rk;
}

std::size_t nullity(const SparseRatMatrix& m) { return m.cols() - rank(m); }

std::size_t quotient_dim(const SparseRatMatrix& span_target, const SparseRatMatrix& span_sub) {
    if (span_target.cols() != span_sub.cols())
        throw ValidationError("quotient_dim: column counts differ (" +
                              std::to_string(span_target.cols()) + " vs " +
                              std::to_string(span_sub.cols()) + ")");
    const std::size_t rt = rank(span_target);
    const std::size_t rs = rank(span_sub);
    SparseRatMatrix both = span_target;
    both.append_rows(span_sub);
    if (rank(both) != rt)
        throw InvariantViolation("quotient_dim: subspace is not contained in the target span");
    return rt - rs;
}

// Bareiss elimination on integer-scaled rows.
Rational determinant(const SparseRatMatrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n)
        throw ValidationError("determinant: matrix is not square");
    if (n == 0)
        return 1;
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n, 0));
    Rational scale = 1;
    for (std::size_t r = 0; r < n; ++r) {
        Integer l = 1;
        for (const auto& [c, v] : m.row(r))
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        for (const auto& [c, v] : m.row(r))
            a[r][c] = v.get_num() * (l / v.get_den());
        scale *= Rational(l);
    }
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(v);
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rational det(a[n - 1][n - 1] * sign);
    det /= scale;
    det.canonicalize();
    return det;
}

RowSpaceBasis::IntRow RowSpaceBasis::reduce(IntRow v) const {
    while (!v.empty()) {
        auto lead = v.begin();
        auto it = pivots_.find(lead->first);
        if (it == pivots_.end())
            break;
        const Integer pval = it->second.begin()->second;
        const Integer vval = lead->second;
        Integer g;
        mpz_gcd(g.get_mpz_t(), pval.get_mpz_t(), vval.get_mpz_t());
        const Integer a = pval / g;
        const Integer b = vval / g;
        IntRow next;
        for (const auto& [c, x] : v)
            next[c] = a * x;
        for (const auto& [c, y] : it->second) {
            Integer& slot = next[c];
            slot -= b * y;
            if (slot == 0)
                next.erase(c);
        }
        Integer content = 0;
        for (const auto& [c, x] : next)
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
        if (content > 1)
            for (auto& [c, x] : next)
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
        v = std::move(next);
    }
    return v;
}

bool RowSpaceBasis::insert(const SparseRatMatrix::Row& v) {
    IntRow iv;
    for (const auto& e : to_integer_row(v)) {
        if (e.first >= cols_)
            throw ValidationError("RowSpaceBasis: column out of range");
        iv.emplace(e.first, e.second);
    }
    iv = reduce(std::move(iv));
    if (iv.empty())
        return false;
    const std::size_t lead = iv.begin()->first;
    pivots_.emplace(lead, std::move(iv));
    return true;
}

bool RowSpaceBasis::contains(const SparseRatMatrix::Row& v) const {
    IntRow iv;
    for (const auto& e : to_integer_row(v))
        iv.emplace(e.first, e.second);
    return reduce(std::move(iv)).empty();
}

} // namespace curcoh::exactmat
