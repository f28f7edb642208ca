#pragma once

#include <map>
#include <vector>

#include "hhq/bimodule.hpp"
#include "hhq/linalg.hpp"

namespace hhq {

/// A basis cochain sends one generator a^n_{i,j} to a single monomial
/// e_i x^{4l+t} (kind X) or e_i y^{4l+t} (kind Y), where t = n mod 4, and
/// every other generator to zero.
enum class CochainKind { X = 0, Y = 1 };

struct CochainBasisElement {
    CochainKind kind = CochainKind::X;
    int l = 0;  // level
    int i = 0;  // vertex
    int j = 0;  // position
    auto operator<=>(const CochainBasisElement&) const = default;
    std::string str(int n) const;
};

/// Canonical ordered basis of the degree-n cochain space Hom(Q^n, A_T),
/// ordered by (kind X < Y, level, vertex, position). The y-kind duplicates
/// at (n = 0 mod 4, l = 0) and (n = 2 mod 4, l = T) are represented by
/// their x-kind partner and do not appear.
std::vector<CochainBasisElement> cochain_basis(int T, int n);

int cochain_dim(int T, int n);

/// Degree-n cochain in canonical coordinates. Adding a y-kind coordinate at
/// a degenerate (residue, level) pair folds it into the x-kind basis vector
/// (with a sign flip when x^{4T+2} = -y^{4T+2} is involved).
class Cochain {
public:
    Cochain(int T, FieldSpec field, int degree) : T_(T), field_(field), n_(degree) {}

    int degree() const { return n_; }
    int T() const { return T_; }
    FieldSpec field() const { return field_; }
    const std::map<CochainBasisElement, Scalar>& coords() const { return coords_; }
    bool is_zero() const { return coords_.empty(); }

    void add(CochainKind kind, int l, int i, int j, const Scalar& c);
    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    Cochain scaled(const Scalar& c) const;
    bool operator==(const Cochain& o) const;
    std::string str() const;

    /// The value monomial of a coordinate: x/y^{4l+t} at the vertex, t = n mod 4.
    static Monomial value_monomial(const CochainBasisElement& e, int n);

    /// Generator-image view of the cochain (a bimodule map Q^n -> A_T).
    GeneratorValues to_values(const Algebra& A) const;

    /// Coordinatization of generator images. Throws std::runtime_error when a
    /// value violates the vertex constraint of its generator.
    static Cochain from_values(const Algebra& A, int degree, const GeneratorValues& values);

    SparseVec to_coordinates(const std::vector<CochainBasisElement>& basis) const;
    static Cochain from_coordinates(int T, FieldSpec field, int degree,
                                    const std::vector<CochainBasisElement>& basis,
                                    const SparseVec& v);

private:
    int T_;
    FieldSpec field_;
    int n_;
    std::map<CochainBasisElement, Scalar> coords_;
};

/// Matrix of psi -> psi o d^n from degree-(n-1) cochains to degree-n
/// cochains; rows are indexed by the source basis, columns by the target.
struct HomMatrix {
    int n = 0;
    std::vector<CochainBasisElement> source;
    std::vector<CochainBasisElement> target;
    SparseMatrix mat;
};

/// Built generically: evaluate psi o d^n on every generator through tensor
/// evaluation and re-coordinatize; no closed image table is consulted.
HomMatrix hom_matrix(const Algebra& A, int n);

struct CohomologyDims {
    int ker = 0;  // dim Ker Hom(d^{n+1}, A)
    int im = 0;   // dim Im Hom(d^n, A)
    int hh = 0;   // ker - im
};

/// Cochain-complex cache for one algebra: matrices and ranks per degree.
class CochainComplex {
public:
    explicit CochainComplex(const Algebra& A) : A_(A) {}

    const Algebra& algebra() const { return A_; }
    const HomMatrix& matrix(int n);
    int rank(int n);
    CohomologyDims dimensions(int n);

private:
    const Algebra& A_;
    std::map<int, HomMatrix> matrices_;
    std::map<int, int> ranks_;
};

CohomologyDims cohomology_dimensions(const Algebra& A, int n);

/// Closed dimension tables; n = 4m+r with 0 <= r <= 3. The image/kernel
/// tables are undefined at (m, r) = (0, 0).
long long formula_dim_im(long long T, long long m, int r, bool divides);
long long formula_dim_ker(long long T, long long m, int r, bool divides);
long long formula_dim_hh(long long T, long long m, int r, bool divides);

struct FormulaDims {
    long long im = 0;
    long long ker = 0;
    long long hh = 0;
};
FormulaDims closed_formula_dims(long long T, long long m, int r, bool divides);

/// Closed-form image of a degree-n basis cochain under composition with
/// d^{n+1}; transcribed case table used as an oracle against hom_matrix.
Cochain reference_differential_action(const Algebra& A, const CochainBasisElement& psi, int n);

/// Closed-form basis catalogs (degree-n cochains for image/cohomology,
/// degree n-1 for the kernel of composition with d^n).
std::vector<Cochain> reference_image_basis(const Algebra& A, int n);
std::vector<Cochain> reference_kernel_basis(const Algebra& A, int n);
std::vector<Cochain> reference_cohomology_basis(const Algebra& A, int n);

/// Checks that each catalog element lies in the computed subspace, that the
/// catalog is linearly independent (modulo coboundaries for the cohomology
/// catalog), and that its cardinality equals the computed dimension.
CheckReport verify_reference_bases(CochainComplex& cx, int n);

/// Computed (im, ker, hh) triples against the closed tables for 0 <= n <= N.
CheckReport verify_dimension_formulas(CochainComplex& cx, int N);

/// dim HH^0 = dim Z(A_T) and the map phi -> phi(sum_i e_i (x) e_i) carries
/// the computed kernel basis of Hom(d^1) onto a basis of the centre.
CheckReport verify_center_correspondence(const Algebra& A);

}  // namespace hhq
