#include "hhq/algebra.hpp"

#include <algorithm>

#include "hhq/linalg.hpp"

namespace hhq {

std::string Monomial::str() const {
    std::string s = "e" + std::to_string(vertex);
    if (letter == Letter::X) s += " x^" + std::to_string(exponent);
    if (letter == Letter::Y) s += " y^" + std::to_string(exponent);
    return s;
}

std::string FreePath::str() const {
    std::string s = "e" + std::to_string(start);
    int v = start;
    for (char c : letters) {
        s += (c == 'A' ? " a" : " b") + std::to_string(v);
        v = vertex_mod(v + 1);
    }
    return s;
}

FreeElement FreeElement::path(FieldSpec field, FreePath p) {
    FreeElement e(field);
    e.add_term(p, Scalar::one(field));
    return e;
}

void FreeElement::add_term(const FreePath& p, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FreeElement FreeElement::operator+(const FreeElement& o) const {
    FreeElement out = *this;
    for (const auto& [p, c] : o.terms_) out.add_term(p, c);
    return out;
}

FreeElement FreeElement::scaled(const Scalar& c) const {
    FreeElement out(field_);
    for (const auto& [p, coeff] : terms_) out.add_term(p, coeff * c);
    return out;
}

FreeElement FreeElement::times_power(char letter, int k) const {
    FreeElement out(field_);
    for (const auto& [p, c] : terms_) {
        FreePath q = p;
        q.letters.append(static_cast<size_t>(k), letter);
        out.add_term(q, c);
    }
    return out;
}

std::string FreeElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [p, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.str() + "*(" + p.str() + ")";
    }
    return s;
}

void AlgebraElement::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void AlgebraElement::check_context(const AlgebraElement& o) const {
    if (T_ != o.T_ || field_ != o.field_)
        throw std::invalid_argument("AlgebraElement: context mismatch");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    check_context(o);
    AlgebraElement out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    check_context(o);
    AlgebraElement out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
    AlgebraElement out(T_, field_);
    for (const auto& [m, coeff] : terms_) out.add_term(m, coeff * c);
    return out;
}

Scalar AlgebraElement::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    return T_ == o.T_ && field_ == o.field_ && terms_ == o.terms_;
}

int AlgebraElement::min_length() const {
    if (terms_.empty()) return -1;
    int m = terms_.begin()->first.length();
    for (const auto& [mono, c] : terms_) m = std::min(m, mono.length());
    return m;
}

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.str() + "*" + m.str();
    }
    return s;
}

Algebra::Algebra(int T, FieldSpec field) : T_(T), field_(field) {
    if (T < 0) throw std::invalid_argument("Algebra: T must be non-negative");
    for (int v = 0; v < kVertices; ++v) {
        basis_.push_back(Monomial::e(v));
        for (int j = 1; j <= max_x_exponent(); ++j) basis_.push_back(Monomial::x(v, j));
        for (int l = 1; l <= max_y_exponent(); ++l) basis_.push_back(Monomial::y(v, l));
    }
    for (int k = 0; k < static_cast<int>(basis_.size()); ++k) index_.emplace(basis_[k], k);
}

int Algebra::basis_index(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::invalid_argument("Algebra: not a basis monomial: " + m.str());
    return it->second;
}

AlgebraElement Algebra::element(const Monomial& m) const { return element(m, scalar(1)); }

AlgebraElement Algebra::element(const Monomial& m, const Scalar& c) const {
    AlgebraElement e = zero();
    basis_index(m);  // validates the bounds for this T
    e.add_term(m, c);
    return e;
}

AlgebraElement Algebra::identity() const {
    AlgebraElement e = zero();
    for (int v = 0; v < kVertices; ++v) e.add_term(Monomial::e(v), scalar(1));
    return e;
}

Algebra::MonoProduct Algebra::multiply_monomials(const Monomial& a, const Monomial& b) const {
    if (b.vertex != a.end_vertex()) return {};
    if (a.letter == Monomial::Letter::E) return {1, b};
    if (b.letter == Monomial::Letter::E) return {1, a};
    if (a.letter != b.letter) return {};  // xy and yx vanish
    const int exp = a.exponent + b.exponent;
    if (a.letter == Monomial::Letter::X)
        return exp <= max_x_exponent() ? MonoProduct{1, Monomial::x(a.vertex, exp)} : MonoProduct{};
    if (exp <= max_y_exponent()) return {1, Monomial::y(a.vertex, exp)};
    if (exp == max_x_exponent()) return {-1, Monomial::x(a.vertex, exp)};
    return {};
}

AlgebraElement Algebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
    if (a.T() != T_ || b.T() != T_ || a.field() != field_ || b.field() != field_)
        throw std::invalid_argument("Algebra::multiply: context mismatch");
    AlgebraElement out = zero();
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            MonoProduct p = multiply_monomials(ma, mb);
            if (p.sign == 0) continue;
            Scalar c = ca * cb;
            if (p.sign < 0) c = -c;
            out.add_term(p.mono, c);
        }
    return out;
}

AlgebraElement Algebra::normal_form(const FreeElement& e) const {
    if (e.field() != field_)
        throw std::invalid_argument("Algebra::normal_form: field mismatch");
    AlgebraElement out = zero();
    for (const auto& [p, c] : e.terms()) {
        const int len = p.length();
        if (len == 0) {
            out.add_term(Monomial::e(p.start), c);
            continue;
        }
        const bool pure_a = p.letters.find('B') == std::string::npos;
        const bool pure_b = p.letters.find('A') == std::string::npos;
        if (!pure_a && !pure_b) continue;  // contains xy or yx
        if (pure_a) {
            if (len <= max_x_exponent()) out.add_term(Monomial::x(p.start, len), c);
        } else {
            if (len <= max_y_exponent())
                out.add_term(Monomial::y(p.start, len), c);
            else if (len == max_x_exponent())
                out.add_term(Monomial::x(p.start, len), -c);
        }
    }
    return out;
}

FreeElement Algebra::embed(const AlgebraElement& a) const {
    FreeElement out(field_);
    for (const auto& [m, c] : a.terms()) {
        FreePath p{m.vertex, std::string(static_cast<size_t>(m.exponent),
                                         m.letter == Monomial::Letter::Y ? 'B' : 'A')};
        out.add_term(p, c);
    }
    return out;
}

namespace {

SparseVec element_coords(const Algebra& A, const AlgebraElement& e) {
    SparseVec v;
    for (const auto& [m, c] : e.terms()) v.emplace_back(A.basis_index(m), c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

AlgebraElement coords_element(const Algebra& A, const SparseVec& v) {
    AlgebraElement e = A.zero();
    for (const auto& [idx, c] : v) e.add_term(A.basis()[idx], c);
    return e;
}

}  // namespace

CenterReport compute_center(const Algebra& A) {
    CenterReport rep;
    const FieldSpec field = A.field();
    const int d = A.dim();

    // Commuting with the algebra generators e_i, e_i x, e_i y is equivalent
    // to commuting with everything; the result is re-verified against the
    // full monomial basis below.
    std::vector<AlgebraElement> gens;
    for (int v = 0; v < kVertices; ++v) {
        gens.push_back(A.element(Monomial::e(v)));
        gens.push_back(A.element(Monomial::x(v, 1)));
        gens.push_back(A.element(Monomial::y(v, 1)));
    }

    SparseMatrix M = SparseMatrix::zero(d, static_cast<int>(gens.size()) * d);
    for (int mu = 0; mu < d; ++mu) {
        AlgebraElement z = A.element(A.basis()[mu]);
        for (int k = 0; k < static_cast<int>(gens.size()); ++k) {
            AlgebraElement comm = A.multiply(z, gens[k]) - A.multiply(gens[k], z);
            for (const auto& [m, c] : comm.terms()) M.add(mu, k * d + A.basis_index(m), c);
        }
    }

    for (const SparseVec& v : left_nullspace(M, field)) rep.basis.push_back(coords_element(A, v));
    rep.dimension = static_cast<int>(rep.basis.size());

    for (const AlgebraElement& z : rep.basis)
        for (const Monomial& m : A.basis()) {
            AlgebraElement a = A.element(m);
            if (!(A.multiply(z, a) == A.multiply(a, z)))
                rep.failures.push_back("center element fails to commute with " + m.str());
        }

    // Structure constants of the computed basis.
    SparseMatrix Bt = SparseMatrix::zero(d, rep.dimension);
    for (int a = 0; a < rep.dimension; ++a)
        for (const auto& [m, c] : rep.basis[a].terms()) Bt.set(A.basis_index(m), a, c);
    for (int a = 0; a < rep.dimension; ++a) {
        rep.structure_constants.emplace_back();
        for (int b = 0; b < rep.dimension; ++b) {
            AlgebraElement prod = A.multiply(rep.basis[a], rep.basis[b]);
            std::vector<Scalar> rhs(d, Scalar::zero(field));
            for (const auto& [m, c] : prod.terms()) rhs[A.basis_index(m)] = c;
            auto sol = solve_linear_system(Bt, rhs, field);
            if (!sol) {
                rep.failures.push_back("product of central elements left the centre");
                sol = std::vector<Scalar>(rep.dimension, Scalar::zero(field));
            }
            rep.structure_constants.back().push_back(*sol);
        }
    }

    // Comparison with K[X,Y]/(X^{T+1}, XY, Y^{T+1}), X = sum_i e_i x^4,
    // Y = sum_i e_i y^4. Candidate monomial images: 1, X..X^T, Y..Y^T.
    const int T = A.T();
    AlgebraElement X = A.zero(), Y = A.zero();
    for (int v = 0; v < kVertices; ++v) {
        if (4 <= A.max_x_exponent()) X.add_term(Monomial::x(v, 4), A.scalar(1));
        if (4 <= A.max_y_exponent()) Y.add_term(Monomial::y(v, 4), A.scalar(1));
    }
    auto power = [&](const AlgebraElement& base, int k) {
        AlgebraElement acc = A.identity();
        for (int s = 0; s < k; ++s) acc = A.multiply(acc, base);
        return acc;
    };

    rep.presentation_ok = true;
    auto fail = [&](const std::string& msg) {
        rep.presentation_ok = false;
        rep.failures.push_back(msg);
    };

    std::vector<AlgebraElement> monos;  // 1, X^1..X^T, Y^1..Y^T
    std::vector<std::pair<int, int>> deg;
    monos.push_back(A.identity());
    deg.emplace_back(0, 0);
    for (int a = 1; a <= T; ++a) {
        monos.push_back(power(X, a));
        deg.emplace_back(a, 0);
    }
    for (int b = 1; b <= T; ++b) {
        monos.push_back(power(Y, b));
        deg.emplace_back(0, b);
    }

    if (rep.dimension != 2 * T + 1) fail("centre dimension differs from 2T+1");

    Echelon span(field);
    for (const AlgebraElement& z : rep.basis) span.insert(element_coords(A, z));
    Echelon indep(field);
    for (size_t k = 0; k < monos.size(); ++k) {
        SparseVec v = element_coords(A, monos[k]);
        if (!span.contains(v)) fail("presentation monomial not central: index " + std::to_string(k));
        if (!indep.insert(v)) fail("presentation monomials dependent: index " + std::to_string(k));
    }

    if (!power(X, T + 1).is_zero()) fail("X^{T+1} != 0");
    if (!power(Y, T + 1).is_zero()) fail("Y^{T+1} != 0");
    if (!A.multiply(X, Y).is_zero()) fail("X*Y != 0");
    if (!A.multiply(Y, X).is_zero()) fail("Y*X != 0");

    // Multiplication table of the presentation basis.
    for (size_t a = 0; a < monos.size(); ++a)
        for (size_t b = 0; b < monos.size(); ++b) {
            const int dx = deg[a].first + deg[b].first;
            const int dy = deg[a].second + deg[b].second;
            AlgebraElement expect = A.zero();
            if (dx == 0 && dy == 0)
                expect = A.identity();
            else if (dy == 0 && dx <= T)
                expect = power(X, dx);
            else if (dx == 0 && dy <= T)
                expect = power(Y, dy);
            // mixed or out-of-range powers are zero in the presentation
            if (!(A.multiply(monos[a], monos[b]) == expect))
                fail("presentation table mismatch at (" + std::to_string(a) + "," +
                     std::to_string(b) + ")");
        }

    return rep;
}

}  // namespace hhq
