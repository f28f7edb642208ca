#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hhq/scalar.hpp"

namespace hhq {

/// Sparse row vector: (column, value) pairs sorted by column, no zero values.
using SparseVec = std::vector<std::pair<int, Scalar>>;

/// a + c*b, collecting terms and dropping zeros.
SparseVec sparse_axpy(const SparseVec& a, const Scalar& c, const SparseVec& b);

SparseVec sparse_scale(const SparseVec& a, const Scalar& c);

/// Incremental row-echelon accumulator over an exact field. Rows are kept
/// normalized (pivot coefficient 1); pivoting is first-nonzero in fixed
/// column order, so all derived data is deterministic.
class Echelon {
public:
    explicit Echelon(FieldSpec field) : field_(field) {}

    /// Residual of row after elimination against the current basis.
    SparseVec reduce(SparseVec row) const;

    /// Insert a row. Returns true iff it enlarged the row space.
    bool insert(SparseVec row);

    /// True iff row lies in the current row space.
    bool contains(const SparseVec& row) const { return reduce(row).empty(); }

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    FieldSpec field_;
    std::map<int, SparseVec> rows_;  // pivot column -> row
};

struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<SparseVec> row_data;  // size rows

    static SparseMatrix zero(int rows, int cols);

    void set(int r, int c, const Scalar& v);  // entries may be accumulated via add
    void add(int r, int c, const Scalar& v);

    const SparseVec& row(int r) const { return row_data[r]; }

    /// v * M for a row vector v.
    SparseVec apply_row(const SparseVec& v) const;

    /// Matrix product this * other (this: a x b, other: b x c).
    SparseMatrix multiply(const SparseMatrix& other) const;

    bool is_zero() const;
    int rank(FieldSpec field) const;
};

/// Basis of { v : v * M = 0 } (left nullspace, row convention).
std::vector<SparseVec> left_nullspace(const SparseMatrix& M, FieldSpec field);

/// One solution of M * x = b (rows of M are equations), free variables 0.
/// Returns nullopt when the system is inconsistent.
std::optional<std::vector<Scalar>> solve_linear_system(const SparseMatrix& M,
                                                       const std::vector<Scalar>& b,
                                                       FieldSpec field);

}  // namespace hhq
