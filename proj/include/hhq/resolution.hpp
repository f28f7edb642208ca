#pragma once

#include <map>
#include <vector>

#include "hhq/algebra.hpp"
#include "hhq/linalg.hpp"

namespace hhq {

/// Position of a generator inside a fixed degree: vertex i and slot j.
struct GenPos {
    int i = 0;
    int j = 0;
    auto operator<=>(const GenPos&) const = default;
};

/// Generator g^n_{i,j} of the degree-n set: a uniform element of the free
/// path algebra with source e_i and target e_{i+n}.
struct ResolutionGenerator {
    int n = 0;
    int i = 0;
    int j = 0;
    FreeElement value;
};

/// All 4(n+1) generators of degree n, ordered by (i, j).
std::vector<ResolutionGenerator> generator_set(int T, int n, FieldSpec field);

/// True iff every path of every degree-k generator has length exactly k for
/// all k <= n_max (holds for T = 0; fails already at degree 2 for T >= 1).
bool generators_linear(int T, int n_max);

/// The degree-n right-module differential: entry (row = source (i,j),
/// col = target (r,s)) is the unique factor with
/// g^n_{i,j} = sum_{(r,s)} g^{n-1}_{r,s} * factor, mapped into A_T.
struct RightDifferential {
    int n = 0;
    std::map<std::pair<GenPos, GenPos>, AlgebraElement> entries;

    const AlgebraElement* entry(GenPos source, GenPos target) const;
};

/// Factors each degree-n generator over the degree-(n-1) set by suffix
/// stripping on free paths and solving the resulting linear system.
/// Throws std::runtime_error if the factorization fails or is not unique.
RightDifferential right_differential(const Algebra& A, int n);

/// Scalar matrix of the differential P^n -> P^{n-1}, where
/// P^n = sum over generators g of t(g) A_T. Rows are target coordinates
/// (generator-major, then the monomial basis of t(g) A_T), columns source.
SparseMatrix right_differential_matrix(const Algebra& A, const RightDifferential& dn);

struct RightResolutionReport {
    bool ok = true;
    std::vector<std::string> failures;
    std::vector<int> dims;   // dim P^n for n = 0..N
    std::vector<int> ranks;  // rank d^n for n = 1..N
};

/// Builds P^0..P^N with differentials and checks: d^n d^{n+1} = 0, exactness
/// at P^n for 1 <= n <= N-1 (rank-nullity), cokernel of d^1 of dimension 4
/// with image inside the radical, and minimality of every differential.
RightResolutionReport verify_right_resolution(const Algebra& A, int N);

}  // namespace hhq
