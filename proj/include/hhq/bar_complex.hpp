#pragma once

#include <stdexcept>

#include "hhq/algebra.hpp"

namespace hhq {

/// Raised when a requested bar-complex computation falls outside the
/// supported cost window; the computation refuses rather than degrades.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Dimension of the degree-n cochain space of the vertex-reduced bar
/// complex: vertex-compatible multilinear maps rad^{(x) n} -> A_T, the
/// tensor taken over the span of the vertices.
long long bar_cochain_dim(const Algebra& A, int n);

/// dim HH^n(A_T) computed from the reduced bar complex by exact ranks.
/// Shares only the algebra arithmetic with the resolution modules.
/// Supported window: n <= 4 for T = 0 and n <= 2 for T = 1; anything else
/// throws BudgetError.
long long bar_hh_dimension(const Algebra& A, int n);

}  // namespace hhq
