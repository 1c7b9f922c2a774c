#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "twistseq/f2/sparse_vec.hpp"

namespace twistseq::f2 {

/// Sparse matrix over the two-element field. Entries are a set of positions;
/// toggling a position twice removes it.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows)) {}

    static F2Matrix identity(int n);
    static F2Matrix from_positions(int rows, int cols, const std::vector<std::pair<int, int>>& pos);
    /// Matrix whose columns are the given vectors (each of length `rows`).
    static F2Matrix from_columns(int rows, const std::vector<SparseVec>& columns);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t nonzeros() const;

    const SparseVec& row(int r) const { return data_[static_cast<std::size_t>(r)]; }
    void set_row(int r, SparseVec v);
    void toggle(int r, int c);
    bool get(int r, int c) const { return row(r).contains(c); }
    bool is_zero() const;

    F2Matrix transpose() const;
    /// Image of a column vector.
    SparseVec apply(const SparseVec& x) const;

    friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b);
    friend F2Matrix operator+(const F2Matrix& a, const F2Matrix& b);
    bool operator==(const F2Matrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<SparseVec> data_;
};

int rank(const F2Matrix& m);

/// Basis of the null space {x : m x = 0}, one vector per non-pivot column of
/// the reduced row echelon form, ordered by that column.
std::vector<SparseVec> kernel_basis(const F2Matrix& m);

/// Dimension of the span of the given vectors.
int span_rank(int dim, const std::vector<SparseVec>& vectors);

/// Groups of (rows, cols) that form the connected blocks of m. Empty rows and
/// empty columns are not reported.
struct Block {
    std::vector<int> rows;
    std::vector<int> cols;
};
std::vector<Block> connected_blocks(const F2Matrix& m);

}  // namespace twistseq::f2
