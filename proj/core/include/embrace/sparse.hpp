#pragma once

#include <optional>
#include <vector>

#include "embrace/field.hpp"

namespace embrace {

using Vec = std::vector<Scalar>;

// Sparse matrix over an exact field.  Entries are kept row-major, sorted by
// (row, col), with no explicit zeros and no duplicate coordinates.
class SparseMatrix {
  public:
    struct Entry {
        int row;
        int col;
        Scalar value;
    };

    SparseMatrix(const FieldSpec& f, int rows, int cols)
        : field_(f), rows_(rows), cols_(cols) {}

    // Canonicalizes: sums duplicates, drops zeros, sorts.
    static SparseMatrix from_triplets(const FieldSpec& f, int rows, int cols,
                                      std::vector<Entry> entries);
    static SparseMatrix from_dense_rows(const FieldSpec& f, const std::vector<Vec>& rows, int cols);

    const FieldSpec& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Entry>& entries() const { return entries_; }
    Scalar at(int r, int c) const;
    Vec row_dense(int r) const;
    Vec apply(const Vec& x) const;  // matrix * column vector
    bool operator==(const SparseMatrix& o) const;

  private:
    FieldSpec field_;
    int rows_;
    int cols_;
    std::vector<Entry> entries_;
};

struct RrefResult {
    SparseMatrix matrix;       // reduced row echelon form, pivots normalized to 1
    std::vector<int> pivots;   // pivot column per pivot row, increasing
    int rank = 0;
};

RrefResult rref(const SparseMatrix& m);
int rank(const SparseMatrix& m);

// Solves M x = b exactly; on an underdetermined system the free variables are
// set to zero (the deterministic convention used throughout).  Returns nullopt
// iff the system is inconsistent.
std::optional<Vec> solve(const SparseMatrix& m, const Vec& b);

// Basis of the right kernel, one vector per free column, in free-column order;
// the free coordinate of each basis vector is 1.
std::vector<Vec> kernel_basis(const SparseMatrix& m);

// dim(span_a / span_b).  Requires span_b ⊆ span_a (checked; logic_error otherwise).
int quotient_dim(const FieldSpec& f, const std::vector<Vec>& span_a, const std::vector<Vec>& span_b,
                 int ambient_dim);

}  // namespace embrace
