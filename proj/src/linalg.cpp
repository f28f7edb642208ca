#include "hhq/linalg.hpp"

#include <algorithm>

namespace hhq {

SparseVec sparse_axpy(const SparseVec& a, const Scalar& c, const SparseVec& b) {
    if (c.is_zero()) return a;
    SparseVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Scalar v = c * b[j].second;
            if (!v.is_zero()) out.emplace_back(b[j].first, v);
            ++j;
        } else {
            Scalar v = a[i].second + c * b[j].second;
            if (!v.is_zero()) out.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec sparse_scale(const SparseVec& a, const Scalar& c) {
    SparseVec out;
    if (c.is_zero()) return out;
    out.reserve(a.size());
    for (const auto& [col, v] : a) out.emplace_back(col, c * v);
    return out;
}

SparseVec Echelon::reduce(SparseVec row) const {
    // Eliminating the leading entry repeatedly is enough: every element of the
    // row space has a pivot column as its leading column.
    while (!row.empty()) {
        auto it = rows_.find(row.front().first);
        if (it == rows_.end()) break;
        row = sparse_axpy(row, -row.front().second, it->second);
    }
    return row;
}

bool Echelon::insert(SparseVec row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    Scalar lead = row.front().second;
    rows_.emplace(row.front().first, sparse_scale(row, lead.inverse()));
    return true;
}

SparseMatrix SparseMatrix::zero(int r, int c) {
    SparseMatrix m;
    m.rows = r;
    m.cols = c;
    m.row_data.resize(r);
    return m;
}

void SparseMatrix::set(int r, int c, const Scalar& v) {
    if (v.is_zero()) return;
    auto& row = row_data[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c)
        it->second = v;
    else
        row.insert(it, {c, v});
}

void SparseMatrix::add(int r, int c, const Scalar& v) {
    if (v.is_zero()) return;
    auto& row = row_data[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        it->second += v;
        if (it->second.is_zero()) row.erase(it);
    } else {
        row.insert(it, {c, v});
    }
}

SparseVec SparseMatrix::apply_row(const SparseVec& v) const {
    SparseVec acc;
    for (const auto& [r, coeff] : v) acc = sparse_axpy(acc, coeff, row_data[r]);
    return acc;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other) const {
    SparseMatrix out = zero(rows, other.cols);
    for (int r = 0; r < rows; ++r) out.row_data[r] = other.apply_row(row_data[r]);
    return out;
}

bool SparseMatrix::is_zero() const {
    for (const auto& row : row_data)
        if (!row.empty()) return false;
    return true;
}

int SparseMatrix::rank(FieldSpec field) const {
    Echelon e(field);
    for (const auto& row : row_data) e.insert(row);
    return e.rank();
}

std::vector<SparseVec> left_nullspace(const SparseMatrix& M, FieldSpec field) {
    std::map<int, SparseVec> pivots;  // pivot column (< M.cols) -> augmented row
    std::vector<SparseVec> kernel;
    for (int r = 0; r < M.rows; ++r) {
        SparseVec aug = M.row_data[r];
        aug.emplace_back(M.cols + r, Scalar::one(field));
        while (!aug.empty() && aug.front().first < M.cols) {
            auto it = pivots.find(aug.front().first);
            if (it == pivots.end()) break;
            aug = sparse_axpy(aug, -aug.front().second, it->second);
        }
        if (aug.empty() || aug.front().first >= M.cols) {
            SparseVec combo;
            for (const auto& [col, v] : aug) combo.emplace_back(col - M.cols, v);
            kernel.push_back(std::move(combo));
        } else {
            Scalar lead = aug.front().second;
            pivots.emplace(aug.front().first, sparse_scale(aug, lead.inverse()));
        }
    }
    return kernel;
}

std::optional<std::vector<Scalar>> solve_linear_system(const SparseMatrix& M,
                                                       const std::vector<Scalar>& b,
                                                       FieldSpec field) {
    const int bcol = M.cols;
    std::map<int, SparseVec> pivots;
    for (int r = 0; r < M.rows; ++r) {
        SparseVec aug = M.row_data[r];
        if (r < static_cast<int>(b.size()) && !b[r].is_zero()) aug.emplace_back(bcol, b[r]);
        while (!aug.empty() && aug.front().first < bcol) {
            auto it = pivots.find(aug.front().first);
            if (it == pivots.end()) break;
            aug = sparse_axpy(aug, -aug.front().second, it->second);
        }
        if (aug.empty()) continue;
        if (aug.front().first == bcol) return std::nullopt;  // 0 = nonzero
        Scalar lead = aug.front().second;
        pivots.emplace(aug.front().first, sparse_scale(aug, lead.inverse()));
    }
    std::vector<Scalar> x(M.cols, Scalar::zero(field));
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        const int p = it->first;
        Scalar v = Scalar::zero(field);
        for (const auto& [col, coeff] : it->second) {
            if (col == bcol)
                v += coeff;
            else if (col > p)
                v -= coeff * x[col];
        }
        x[p] = v;
    }
    return x;
}

}  // namespace hhq
