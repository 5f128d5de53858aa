#include "embrace/sparse.hpp"

#include <algorithm>
#include <map>

namespace embrace {

SparseMatrix SparseMatrix::from_triplets(const FieldSpec& f, int rows, int cols,
                                         std::vector<Entry> entries) {
    std::map<std::pair<int, int>, Scalar> acc;
    for (auto& e : entries) {
        if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols)
            throw std::invalid_argument("matrix entry out of bounds");
        auto key = std::make_pair(e.row, e.col);
        auto it = acc.find(key);
        if (it == acc.end())
            acc.emplace(key, e.value);
        else
            it->second += e.value;
    }
    SparseMatrix m(f, rows, cols);
    for (auto& [key, v] : acc)
        if (!v.is_zero()) m.entries_.push_back({key.first, key.second, v});
    return m;
}

SparseMatrix SparseMatrix::from_dense_rows(const FieldSpec& f, const std::vector<Vec>& rows, int cols) {
    std::vector<Entry> es;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
        if (static_cast<int>(rows[r].size()) != cols) throw std::invalid_argument("dense row width mismatch");
        for (int c = 0; c < cols; ++c)
            if (!rows[r][c].is_zero()) es.push_back({r, c, rows[r][c]});
    }
    return from_triplets(f, static_cast<int>(rows.size()), cols, std::move(es));
}

Scalar SparseMatrix::at(int r, int c) const {
    for (auto& e : entries_)
        if (e.row == r && e.col == c) return e.value;
    return Scalar::zero(field_);
}

Vec SparseMatrix::row_dense(int r) const {
    Vec out(cols_, Scalar::zero(field_));
    for (auto& e : entries_)
        if (e.row == r) out[e.col] = e.value;
    return out;
}

Vec SparseMatrix::apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("vector length mismatch");
    Vec out(rows_, Scalar::zero(field_));
    for (auto& e : entries_) out[e.row] += e.value * x[e.col];
    return out;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || entries_.size() != o.entries_.size()) return false;
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].row != o.entries_[i].row || entries_[i].col != o.entries_[i].col ||
            entries_[i].value != o.entries_[i].value)
            return false;
    }
    return true;
}

namespace {

// Rows as sorted col->value maps; empty rows dropped at the end.
using RowMap = std::map<int, Scalar>;

std::vector<RowMap> to_rows(const SparseMatrix& m) {
    std::vector<RowMap> rows(m.rows());
    for (auto& e : m.entries()) rows[e.row].emplace(e.col, e.value);
    return rows;
}

void axpy(RowMap& target, const Scalar& factor, const RowMap& source) {
    if (factor.is_zero()) return;
    for (auto& [c, v] : source) {
        auto it = target.find(c);
        if (it == target.end()) {
            Scalar nv = factor * v;
            if (!nv.is_zero()) target.emplace(c, nv);
        } else {
            it->second += factor * v;
            if (it->second.is_zero()) target.erase(it);
        }
    }
}

void scale_row(RowMap& row, const Scalar& factor) {
    for (auto& [c, v] : row) v = factor * v;
}

}  // namespace

RrefResult rref(const SparseMatrix& m) {
    auto rows = to_rows(m);
    const int n_rows = m.rows();
    std::vector<int> pivots;
    int next_row = 0;
    for (int col = 0; col < m.cols() && next_row < n_rows; ++col) {
        int pivot_row = -1;
        for (int r = next_row; r < n_rows; ++r) {
            auto it = rows[r].begin();
            if (it != rows[r].end() && it->first == col) {
                pivot_row = r;
                break;
            }
        }
        if (pivot_row < 0) continue;
        std::swap(rows[next_row], rows[pivot_row]);
        scale_row(rows[next_row], rows[next_row].begin()->second.inverse());
        for (int r = 0; r < n_rows; ++r) {
            if (r == next_row) continue;
            auto it = rows[r].find(col);
            if (it != rows[r].end()) axpy(rows[r], -it->second, rows[next_row]);
        }
        pivots.push_back(col);
        ++next_row;
    }
    std::vector<SparseMatrix::Entry> es;
    for (int r = 0; r < n_rows; ++r)
        for (auto& [c, v] : rows[r]) es.push_back({r, c, v});
    RrefResult out{SparseMatrix::from_triplets(m.field(), n_rows, m.cols(), std::move(es)), pivots,
                   static_cast<int>(pivots.size())};
    return out;
}

int rank(const SparseMatrix& m) { return rref(m).rank; }

std::optional<Vec> solve(const SparseMatrix& m, const Vec& b) {
    if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("rhs length mismatch");
    std::vector<SparseMatrix::Entry> es(m.entries().begin(), m.entries().end());
    for (int r = 0; r < m.rows(); ++r)
        if (!b[r].is_zero()) es.push_back({r, m.cols(), b[r]});
    SparseMatrix aug = SparseMatrix::from_triplets(m.field(), m.rows(), m.cols() + 1, std::move(es));
    RrefResult red = rref(aug);
    for (int i = 0; i < red.rank; ++i)
        if (red.pivots[i] == m.cols()) return std::nullopt;  // row [0 ... 0 | 1]
    Vec x(m.cols(), Scalar::zero(m.field()));
    for (int i = 0; i < red.rank; ++i) x[red.pivots[i]] = red.matrix.at(i, m.cols());
    return x;
}

std::vector<Vec> kernel_basis(const SparseMatrix& m) {
    RrefResult red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : red.pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(m.cols(), Scalar::zero(m.field()));
        v[free_col] = Scalar::one(m.field());
        for (int i = 0; i < red.rank; ++i) v[red.pivots[i]] = -red.matrix.at(i, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

int quotient_dim(const FieldSpec& f, const std::vector<Vec>& span_a, const std::vector<Vec>& span_b,
                 int ambient_dim) {
    SparseMatrix a = SparseMatrix::from_dense_rows(f, span_a, ambient_dim);
    int rank_a = rank(a);
    std::vector<Vec> stacked = span_a;
    stacked.insert(stacked.end(), span_b.begin(), span_b.end());
    int rank_ab = rank(SparseMatrix::from_dense_rows(f, stacked, ambient_dim));
    if (rank_ab != rank_a) throw std::logic_error("quotient_dim: second span is not contained in the first");
    int rank_b = rank(SparseMatrix::from_dense_rows(f, span_b, ambient_dim));
    return rank_a - rank_b;
}

}  // namespace embrace
