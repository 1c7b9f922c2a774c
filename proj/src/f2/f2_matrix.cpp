#include "twistseq/f2/f2_matrix.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace twistseq::f2 {

namespace {

using Word = std::uint64_t;

struct DenseRows {
    int ncols = 0;
    int words = 0;
    std::vector<Word> bits;  // row-major

    DenseRows(int nrows, int cols) : ncols(cols), words((cols + 63) / 64), bits(static_cast<std::size_t>(nrows) * words) {}

    Word* row(int r) { return bits.data() + static_cast<std::size_t>(r) * words; }
    void set(int r, int c) { row(r)[c >> 6] |= Word{1} << (c & 63); }
    bool test(int r, int c) { return (row(r)[c >> 6] >> (c & 63)) & 1U; }
    void swap_rows(int a, int b) {
        if (a == b) return;
        std::swap_ranges(row(a), row(a) + words, row(b));
    }
    void xor_into(int dst, int src, int from_word) {
        Word* d = row(dst);
        const Word* s = row(src);
        for (int w = from_word; w < words; ++w) d[w] ^= s[w];
    }
};

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<int> parent_;
};

// Forward elimination; returns rank. If `reduce` is set the result is the
// reduced row echelon form and `pivots` receives the pivot column of each
// leading row.
int eliminate(DenseRows& d, int nrows, bool reduce, std::vector<int>* pivots) {
    int rank = 0;
    for (int c = 0; c < d.ncols && rank < nrows; ++c) {
        const int w = c >> 6;
        const Word bit = Word{1} << (c & 63);
        int p = -1;
        for (int r = rank; r < nrows; ++r)
            if (d.row(r)[w] & bit) {
                p = r;
                break;
            }
        if (p < 0) continue;
        d.swap_rows(rank, p);
        const int start = reduce ? 0 : rank + 1;
        for (int r = start; r < nrows; ++r)
            if (r != rank && (d.row(r)[w] & bit)) d.xor_into(r, rank, reduce ? 0 : w);
        if (pivots) pivots->push_back(c);
        ++rank;
    }
    return rank;
}

int block_rank(const F2Matrix& m, const Block& b) {
    const bool by_rows = b.cols.size() <= b.rows.size();
    // Eliminate with the shorter side as bit width.
    const auto& outer = by_rows ? b.rows : b.cols;
    const auto& inner = by_rows ? b.cols : b.rows;
    std::unordered_map<int, int> local;
    local.reserve(inner.size() * 2);
    for (std::size_t i = 0; i < inner.size(); ++i) local.emplace(inner[i], static_cast<int>(i));
    DenseRows d(static_cast<int>(outer.size()), static_cast<int>(inner.size()));
    if (by_rows) {
        for (std::size_t r = 0; r < outer.size(); ++r)
            for (int c : m.row(outer[r])) d.set(static_cast<int>(r), local.at(c));
    } else {
        std::unordered_map<int, int> outer_local;
        for (std::size_t i = 0; i < outer.size(); ++i) outer_local.emplace(outer[i], static_cast<int>(i));
        for (std::size_t i = 0; i < inner.size(); ++i)
            for (int c : m.row(inner[i])) d.set(outer_local.at(c), static_cast<int>(i));
    }
    return eliminate(d, static_cast<int>(outer.size()), false, nullptr);
}

}  // namespace

F2Matrix F2Matrix::identity(int n) {
    F2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.data_[i] = SparseVec{i};
    return m;
}

F2Matrix F2Matrix::from_positions(int rows, int cols, const std::vector<std::pair<int, int>>& pos) {
    F2Matrix m(rows, cols);
    std::vector<std::vector<int>> buf(static_cast<std::size_t>(rows));
    for (auto [r, c] : pos) {
        if (r < 0 || r >= rows || c < 0 || c >= cols)
            throw std::out_of_range("F2Matrix position (" + std::to_string(r) + "," + std::to_string(c) + ") out of bounds");
        buf[r].push_back(c);
    }
    for (int r = 0; r < rows; ++r) m.data_[r] = SparseVec(std::move(buf[r]));
    return m;
}

F2Matrix F2Matrix::from_columns(int rows, const std::vector<SparseVec>& columns) {
    std::vector<std::vector<int>> buf(static_cast<std::size_t>(rows));
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (int r : columns[c]) {
            if (r < 0 || r >= rows) throw std::out_of_range("F2Matrix column entry out of bounds");
            buf[r].push_back(static_cast<int>(c));
        }
    F2Matrix m(rows, static_cast<int>(columns.size()));
    for (int r = 0; r < rows; ++r) m.data_[r] = SparseVec(std::move(buf[r]));
    return m;
}

std::size_t F2Matrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

void F2Matrix::set_row(int r, SparseVec v) {
    if (!v.empty() && (v.indices().front() < 0 || v.indices().back() >= cols_))
        throw std::out_of_range("F2Matrix row entry out of bounds");
    data_.at(static_cast<std::size_t>(r)) = std::move(v);
}

void F2Matrix::toggle(int r, int c) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("F2Matrix toggle out of bounds");
    data_[r].toggle(c);
}

bool F2Matrix::is_zero() const {
    for (const auto& r : data_)
        if (!r.empty()) return false;
    return true;
}

F2Matrix F2Matrix::transpose() const {
    std::vector<std::vector<int>> buf(static_cast<std::size_t>(cols_));
    for (int r = 0; r < rows_; ++r)
        for (int c : data_[r]) buf[c].push_back(r);
    F2Matrix t(cols_, rows_);
    for (int c = 0; c < cols_; ++c) t.data_[c] = SparseVec(std::move(buf[c]));
    return t;
}

SparseVec F2Matrix::apply(const SparseVec& x) const {
    std::vector<int> out;
    for (int r = 0; r < rows_; ++r) {
        const auto& row = data_[r].indices();
        // parity of |row ∩ x|
        std::size_t i = 0, j = 0;
        bool bit = false;
        const auto& xs = x.indices();
        while (i < row.size() && j < xs.size()) {
            if (row[i] < xs[j])
                ++i;
            else if (row[i] > xs[j])
                ++j;
            else {
                bit = !bit;
                ++i;
                ++j;
            }
        }
        if (bit) out.push_back(r);
    }
    return SparseVec(std::move(out));
}

F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("F2Matrix product: dimension mismatch");
    F2Matrix p(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r) {
        Accumulator acc;
        for (int k : a.data_[r]) acc.add(b.data_[k]);
        p.data_[r] = acc.finish();
    }
    return p;
}

F2Matrix operator+(const F2Matrix& a, const F2Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("F2Matrix sum: dimension mismatch");
    F2Matrix s = a;
    for (int r = 0; r < a.rows_; ++r) s.data_[r] += b.data_[r];
    return s;
}

std::vector<Block> connected_blocks(const F2Matrix& m) {
    const int R = m.rows();
    const int C = m.cols();
    UnionFind uf(R + C);
    std::vector<char> row_used(static_cast<std::size_t>(R), 0), col_used(static_cast<std::size_t>(C), 0);
    for (int r = 0; r < R; ++r)
        for (int c : m.row(r)) {
            uf.unite(r, R + c);
            row_used[r] = 1;
            col_used[c] = 1;
        }
    std::unordered_map<int, std::size_t> which;
    std::vector<Block> blocks;
    auto block_of = [&](int node) -> Block& {
        const int root = uf.find(node);
        auto [it, inserted] = which.emplace(root, blocks.size());
        if (inserted) blocks.emplace_back();
        return blocks[it->second];
    };
    for (int r = 0; r < R; ++r)
        if (row_used[r]) block_of(r).rows.push_back(r);
    for (int c = 0; c < C; ++c)
        if (col_used[c]) block_of(R + c).cols.push_back(c);
    return blocks;
}

int rank(const F2Matrix& m) {
    int total = 0;
    for (const auto& b : connected_blocks(m)) total += block_rank(m, b);
    return total;
}

std::vector<SparseVec> kernel_basis(const F2Matrix& m) {
    // Per-block reduced echelon form; the union over blocks equals the global
    // RREF kernel because pivot selection respects column order.
    std::vector<std::pair<int, SparseVec>> keyed;
    std::vector<char> col_used(static_cast<std::size_t>(m.cols()), 0);
    for (const auto& b : connected_blocks(m)) {
        for (int c : b.cols) col_used[c] = 1;
        std::unordered_map<int, int> local;
        for (std::size_t i = 0; i < b.cols.size(); ++i) local.emplace(b.cols[i], static_cast<int>(i));
        DenseRows d(static_cast<int>(b.rows.size()), static_cast<int>(b.cols.size()));
        for (std::size_t r = 0; r < b.rows.size(); ++r)
            for (int c : m.row(b.rows[r])) d.set(static_cast<int>(r), local.at(c));
        std::vector<int> pivots;
        const int rk = eliminate(d, static_cast<int>(b.rows.size()), true, &pivots);
        std::vector<char> is_pivot(b.cols.size(), 0);
        for (int p : pivots) is_pivot[p] = 1;
        for (int f = 0; f < static_cast<int>(b.cols.size()); ++f) {
            if (is_pivot[f]) continue;
            std::vector<int> v{b.cols[f]};
            for (int r = 0; r < rk; ++r)
                if (d.test(r, f)) v.push_back(b.cols[pivots[r]]);
            keyed.emplace_back(b.cols[f], SparseVec(std::move(v)));
        }
    }
    for (int c = 0; c < m.cols(); ++c)
        if (!col_used[c]) keyed.emplace_back(c, SparseVec{c});
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<SparseVec> out;
    out.reserve(keyed.size());
    for (auto& [k, v] : keyed) out.push_back(std::move(v));
    return out;
}

int span_rank(int dim, const std::vector<SparseVec>& vectors) {
    return rank(F2Matrix::from_columns(dim, vectors));
}

}  // namespace twistseq::f2
