#pragma once

#include <map>
#include <vector>

#include "hhq/algebra.hpp"
#include "hhq/resolution.hpp"

namespace hhq {

/// Generator a^n_{i,j} of the projective bimodule Q^n = sum A_T e_i (x) e_{i+n} A_T.
struct GeneratorIndex {
    int n = 0;
    int i = 0;
    int j = 0;
    auto operator<=>(const GeneratorIndex&) const = default;
};

/// Coefficient of a bimodule map at one target generator: a sparse scalar
/// combination of pure tensors (left monomial (x) right monomial). For an
/// entry sending a^n_{i,j} into the summand of a^{n-1}_{r,s}, every left
/// monomial runs e_i -> e_r and every right monomial e_{r+n-1} -> e_{i+n}.
class TensorElement {
public:
    using Terms = std::map<std::pair<Monomial, Monomial>, Scalar>;

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Monomial& left, const Monomial& right, const Scalar& c);
    bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }
    std::string str() const;

private:
    Terms terms_;
};

/// Homomorphism of bimodules Q^m -> Q^n, stored as a sparse generator-indexed
/// matrix of tensor coefficients.
class BimoduleMap {
public:
    BimoduleMap(int source_degree, int target_degree)
        : source_(source_degree), target_(target_degree) {}

    int source_degree() const { return source_; }
    int target_degree() const { return target_; }

    using Row = std::map<GeneratorIndex, TensorElement>;
    const std::map<GeneratorIndex, Row>& entries() const { return entries_; }

    void add_term(GeneratorIndex src, GeneratorIndex tgt, const Monomial& left,
                  const Monomial& right, const Scalar& c);
    const Row* row(GeneratorIndex src) const;
    bool is_zero() const;
    bool operator==(const BimoduleMap& o) const;

private:
    int source_;
    int target_;
    std::map<GeneratorIndex, Row> entries_;
};

/// The degree-n differential Q^n -> Q^{n-1} of the bimodule resolution,
/// generated from the closed case table (n >= 1).
BimoduleMap bimodule_differential(const Algebra& A, int n);

/// Composite f o g of bimodule maps (g: Q^a -> Q^b applied first, f: Q^b -> Q^c).
/// Tensor sides are multiplied in A_T, so relations collapse during composition.
BimoduleMap compose(const Algebra& A, const BimoduleMap& f, const BimoduleMap& g);

/// A bimodule map Q^n -> A_T, stored by generator images.
using GeneratorValues = std::map<GeneratorIndex, AlgebraElement>;

/// Multiplication map Q^0 -> A_T composed with f: Q^d -> Q^0.
GeneratorValues multiplication_compose(const Algebra& A, const BimoduleMap& f);

/// psi o f for psi: Q^b -> A_T (by generator values) and f: Q^a -> Q^b.
GeneratorValues compose_values(const Algebra& A, const GeneratorValues& psi, const BimoduleMap& f);

struct CheckReport {
    bool ok = true;
    std::vector<std::string> failures;
};

/// Checks that the composite of consecutive differentials vanishes for
/// 0 <= n <= N-1 (degree 0 composes with the multiplication map).
CheckReport verify_complex(const Algebra& A, int N);

/// Checks every pure tensor of every differential entry has a side of
/// positive length (image inside rad Q + Q rad), for degrees 1..N.
CheckReport verify_minimality(int T, int N);

struct InducedComparison {
    RightDifferential induced;
    bool matches = true;
    std::vector<std::string> mismatches;
};

/// Applies A_T/rad (x)_{A_T} - to the degree-n differential (dropping terms
/// with a left side of positive length) and compares the resulting
/// right-module matrix entrywise with the factorization differential.
InducedComparison induced_right_complex(const Algebra& A, int n);

}  // namespace hhq
