#pragma once

// Exact sparse linear algebra over the rationals.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <vector>

namespace curcoh {

using Rational = mpq_class;
using Integer = mpz_class;

namespace exactmat {

class SparseRatMatrix {
public:
    using Row = std::map<std::size_t, Rational>;

    SparseRatMatrix() = default;
    SparseRatMatrix(std::size_t rows, std::size_t cols);

    static SparseRatMatrix from_dense(const std::vector<std::vector<Rational>>& dense);
    static SparseRatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const;

    // Zero values are never stored.
    void set(std::size_t r, std::size_t c, const Rational& v);
    void add(std::size_t r, std::size_t c, const Rational& v);
    Rational get(std::size_t r, std::size_t c) const;

    const Row& row(std::size_t r) const { return data_.at(r); }
    void append_row(const Row& row);
    void append_rows(const SparseRatMatrix& other);

    SparseRatMatrix transpose() const;
    SparseRatMatrix operator*(const SparseRatMatrix& rhs) const;
    bool is_zero() const { return nnz() == 0; }

    std::vector<std::vector<Rational>> to_dense() const;

    bool operator==(const SparseRatMatrix& other) const = default;

private:
    void check_index(std::size_t r, std::size_t c) const;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Row> data_;
};

std::size_t rank(const SparseRatMatrix& m);
std::size_t nullity(const SparseRatMatrix& m);

// rank(span_target) − rank(span_sub), after checking that the row space of
// span_sub lies inside the row space of span_target.
std::size_t quotient_dim(const SparseRatMatrix& span_target, const SparseRatMatrix& span_sub);

Rational determinant(const SparseRatMatrix& m);

// Incrementally maintained echelon basis of a row space. insert() reports
// whether the vector was independent of everything inserted before.
class RowSpaceBasis {
public:
    explicit RowSpaceBasis(std::size_t cols) : cols_(cols) {}

    bool insert(const SparseRatMatrix::Row& v);
    bool contains(const SparseRatMatrix::Row& v) const;
    std::size_t dim() const { return pivots_.size(); }

private:
    using IntRow = std::map<std::size_t, Integer>;
    IntRow reduce(IntRow v) const;

    std::size_t cols_;
    // pivot column -> primitive integer row whose leading column is the pivot
    std::map<std::size_t, IntRow> pivots_;
};

} // namespace exactmat
} // namespace curcoh
