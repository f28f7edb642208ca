#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "hhq/scalar.hpp"

namespace hhq {

/// The circular quiver has four vertices 0..3; two arrows i -> i+1 at each
/// vertex (an "a" arrow and a "b" arrow). All vertex arithmetic is mod 4.
inline constexpr int kVertices = 4;

inline int vertex_mod(int v) {
    int r = v % kVertices;
    return r < 0 ? r + kVertices : r;
}

/// Normal-form basis monomial of A_T: e_i (letter E, exponent 0),
/// e_i x^j (letter X, 1 <= j <= 4T+2) or e_i y^l (letter Y, 1 <= l <= 4T+1).
/// Only the source vertex is stored; the target is derived from the length.
struct Monomial {
    enum class Letter { E = 0, X = 1, Y = 2 };

    int vertex = 0;
    Letter letter = Letter::E;
    int exponent = 0;

    static Monomial e(int v) { return {vertex_mod(v), Letter::E, 0}; }
    static Monomial x(int v, int exp) { return {vertex_mod(v), Letter::X, exp}; }
    static Monomial y(int v, int exp) { return {vertex_mod(v), Letter::Y, exp}; }

    int length() const { return exponent; }
    int end_vertex() const { return vertex_mod(vertex + exponent); }

    auto operator<=>(const Monomial&) const = default;
    std::string str() const;
};

/// Path in the free path algebra: a start vertex and a word over the two
/// arrow kinds ('A' advances along a-arrows, 'B' along b-arrows). Each step
/// moves the vertex forward by one, so the word determines the path.
struct FreePath {
    int start = 0;
    std::string letters;  // over {'A','B'}

    int length() const { return static_cast<int>(letters.size()); }
    int end_vertex() const { return vertex_mod(start + length()); }

    auto operator<=>(const FreePath&) const = default;
    std::string str() const;
};

/// Element of the free path algebra K Gamma: sparse scalar combination of
/// paths. Zero coefficients are never stored.
class FreeElement {
public:
    explicit FreeElement(FieldSpec field) : field_(field) {}

    static FreeElement path(FieldSpec field, FreePath p);

    FieldSpec field() const { return field_; }
    const std::map<FreePath, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const FreePath& p, const Scalar& c);
    FreeElement operator+(const FreeElement& o) const;
    FreeElement scaled(const Scalar& c) const;

    /// Right multiplication by x^k ('A') or y^k ('B'): appends k letters to
    /// every path.
    FreeElement times_power(char letter, int k) const;

    bool operator==(const FreeElement& o) const {
        return field_ == o.field_ && terms_ == o.terms_;
    }
    std::string str() const;

private:
    FieldSpec field_;
    std::map<FreePath, Scalar> terms_;
};

class Algebra;

/// Element of A_T in normal form: sparse scalar combination of basis
/// monomials, carrying its context (T, field).
class AlgebraElement {
public:
    AlgebraElement(int T, FieldSpec field) : T_(T), field_(field) {}

    int T() const { return T_; }
    FieldSpec field() const { return field_; }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const Scalar& c);
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement scaled(const Scalar& c) const;
    Scalar coefficient(const Monomial& m) const;

    bool operator==(const AlgebraElement& o) const;
    std::string str() const;

    /// Smallest path length among the terms; 0 for the zero element means
    /// "no terms" and is reported as -1.
    int min_length() const;

private:
    int T_;
    FieldSpec field_;
    std::map<Monomial, Scalar> terms_;

    void check_context(const AlgebraElement& o) const;
    friend class Algebra;
};

/// The algebra A_T = K Gamma / (xy, x^{4T+2} + y^{4T+2}, yx) with its
/// deterministic monomial basis, ordered by (vertex, E < X < Y, exponent).
/// dim_K A_T = 16(2T+1). Immutable after construction.
class Algebra {
public:
    Algebra(int T, FieldSpec field);

    int T() const { return T_; }
    FieldSpec field() const { return field_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    int max_x_exponent() const { return 4 * T_ + 2; }
    int max_y_exponent() const { return 4 * T_ + 1; }

    const std::vector<Monomial>& basis() const { return basis_; }
    int basis_index(const Monomial& m) const;

    Scalar scalar(long long v) const { return Scalar::of_int(v, field_); }
    AlgebraElement zero() const { return AlgebraElement(T_, field_); }
    AlgebraElement element(const Monomial& m) const;
    AlgebraElement element(const Monomial& m, const Scalar& c) const;
    AlgebraElement identity() const;  // sum of all e_i

    /// Product of two basis monomials: sign in {-1,0,+1} and a monomial.
    /// The only sign flip is y^a * y^b = -x^{4T+2} when a+b = 4T+2.
    struct MonoProduct {
        int sign = 0;
        Monomial mono{};
    };
    MonoProduct multiply_monomials(const Monomial& a, const Monomial& b) const;

    AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;

    /// Image of a free-algebra element under K Gamma ->> A_T. Mixed words
    /// vanish, pure a-words of length j map to e_i x^j (zero when j > 4T+2),
    /// pure b-words to e_i y^l with y^{4T+2} rewritten to -x^{4T+2}.
    AlgebraElement normal_form(const FreeElement& e) const;

    /// Embedding of a normal-form element back into K Gamma (monomials to
    /// pure paths). Left inverse of normal_form on normal forms.
    FreeElement embed(const AlgebraElement& a) const;

private:
    int T_;
    FieldSpec field_;
    std::vector<Monomial> basis_;
    std::map<Monomial, int> index_;
};

/// Result of the centre computation: an echelon basis of
/// Z(A_T) = { z : za = az for all basis elements a }, its structure
/// constants, and a verdict that the multiplication table agrees with
/// K[X,Y]/(X^{T+1}, XY, Y^{T+1}) under X = sum_i e_i x^4, Y = sum_i e_i y^4.
struct CenterReport {
    int dimension = 0;
    std::vector<AlgebraElement> basis;
    /// structure_constants[a][b] = coordinates of basis[a]*basis[b] in basis.
    std::vector<std::vector<std::vector<Scalar>>> structure_constants;
    bool presentation_ok = false;
    std::vector<std::string> failures;
};

CenterReport compute_center(const Algebra& A);

}  // namespace hhq
