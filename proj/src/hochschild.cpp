#include "hhq/hochschild.hpp"

#include <algorithm>
#include <string>

namespace hhq {

namespace {

struct LevelRange {
    int x_lo = 0, x_hi = -1;
    int y_lo = 0, y_hi = -1;
};

// Level ranges of the canonical basis per residue of n mod 4.
LevelRange level_range(int T, int n) {
    switch (((n % 4) + 4) % 4) {
        case 0: return {0, T, 1, T};
        case 1: return {0, T, 0, T};
        case 2: return {0, T, 0, T - 1};
        default: return {0, T - 1, 0, T - 1};
    }
}

}  // namespace

std::string CochainBasisElement::str(int n) const {
    const char* k = kind == CochainKind::X ? "x" : "y";
    return std::string(k) + "[" + std::to_string(n) + "," + std::to_string(l) + "](" +
           std::to_string(i) + "," + std::to_string(j) + ")";
}

std::vector<CochainBasisElement> cochain_basis(int T, int n) {
    std::vector<CochainBasisElement> out;
    const LevelRange lr = level_range(T, n);
    for (int l = lr.x_lo; l <= lr.x_hi; ++l)
        for (int i = 0; i < kVertices; ++i)
            for (int j = 0; j <= n; ++j) out.push_back({CochainKind::X, l, i, j});
    for (int l = lr.y_lo; l <= lr.y_hi; ++l)
        for (int i = 0; i < kVertices; ++i)
            for (int j = 0; j <= n; ++j) out.push_back({CochainKind::Y, l, i, j});
    return out;
}

int cochain_dim(int T, int n) {
    const LevelRange lr = level_range(T, n);
    const int levels = (lr.x_hi - lr.x_lo + 1) + (lr.y_hi - lr.y_lo + 1);
    return levels * kVertices * (n + 1);
}

void Cochain::add(CochainKind kind, int l, int i, int j, const Scalar& c) {
    if (c.is_zero()) return;
    if (j < 0 || j > n_) throw std::logic_error("Cochain::add: position out of range");
    i = vertex_mod(i);
    Scalar coeff = c;
    const int t = n_ % 4;
    if (kind == CochainKind::Y) {
        if (t == 0 && l == 0) kind = CochainKind::X;
        if (t == 2 && l == T_) {
            kind = CochainKind::X;
            coeff = -coeff;
        }
    }
    const LevelRange lr = level_range(T_, n_);
    const bool in_range = kind == CochainKind::X ? (l >= lr.x_lo && l <= lr.x_hi)
                                                 : (l >= lr.y_lo && l <= lr.y_hi);
    if (!in_range) throw std::logic_error("Cochain::add: level out of range");

    CochainBasisElement key{kind, l, i, j};
    auto [it, inserted] = coords_.emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) coords_.erase(it);
    }
}

Cochain Cochain::operator+(const Cochain& o) const {
    if (T_ != o.T_ || field_ != o.field_ || n_ != o.n_)
        throw std::invalid_argument("Cochain: context mismatch");
    Cochain out = *this;
    for (const auto& [e, c] : o.coords_) out.add(e.kind, e.l, e.i, e.j, c);
    return out;
}

Cochain Cochain::operator-(const Cochain& o) const {
    return *this + o.scaled(-Scalar::one(field_));
}

Cochain Cochain::scaled(const Scalar& c) const {
    Cochain out(T_, field_, n_);
    if (c.is_zero()) return out;
    for (const auto& [e, coeff] : coords_) out.coords_.emplace(e, coeff * c);
    return out;
}

bool Cochain::operator==(const Cochain& o) const {
    return T_ == o.T_ && field_ == o.field_ && n_ == o.n_ && coords_ == o.coords_;
}

std::string Cochain::str() const {
    if (coords_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : coords_) {
        if (!s.empty()) s += " + ";
        s += c.str() + "*" + e.str(n_);
    }
    return s;
}

Monomial Cochain::value_monomial(const CochainBasisElement& e, int n) {
    const int exp = 4 * e.l + (n % 4);
    if (exp == 0) return Monomial::e(e.i);
    return e.kind == CochainKind::X ? Monomial::x(e.i, exp) : Monomial::y(e.i, exp);
}

GeneratorValues Cochain::to_values(const Algebra& A) const {
    GeneratorValues out;
    for (const auto& [e, c] : coords_) {
        GeneratorIndex g{n_, e.i, e.j};
        auto [it, inserted] = out.emplace(g, A.zero());
        it->second.add_term(value_monomial(e, n_), c);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

Cochain Cochain::from_values(const Algebra& A, int degree, const GeneratorValues& values) {
    Cochain out(A.T(), A.field(), degree);
    const int t = degree % 4;
    for (const auto& [g, val] : values) {
        if (g.n != degree) throw std::logic_error("Cochain::from_values: degree mismatch");
        for (const auto& [mono, c] : val.terms()) {
            if (mono.vertex != g.i || mono.end_vertex() != vertex_mod(g.i + degree))
                throw std::runtime_error(
                    "Cochain::from_values: value outside the generator's vertex window at (" +
                    std::to_string(g.i) + "," + std::to_string(g.j) + "): " + mono.str());
            const int l = (mono.exponent - t) / 4;
            const CochainKind kind =
                mono.letter == Monomial::Letter::Y ? CochainKind::Y : CochainKind::X;
            out.add(kind, l, g.i, g.j, c);
        }
    }
    return out;
}

SparseVec Cochain::to_coordinates(const std::vector<CochainBasisElement>& basis) const {
    SparseVec v;
    for (const auto& [e, c] : coords_) {
        auto it = std::lower_bound(basis.begin(), basis.end(), e);
        if (it == basis.end() || !(*it == e))
            throw std::logic_error("Cochain::to_coordinates: coordinate outside basis");
        v.emplace_back(static_cast<int>(it - basis.begin()), c);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

Cochain Cochain::from_coordinates(int T, FieldSpec field, int degree,
                                  const std::vector<CochainBasisElement>& basis,
                                  const SparseVec& v) {
    Cochain out(T, field, degree);
    for (const auto& [idx, c] : v) {
        const auto& e = basis.at(idx);
        out.add(e.kind, e.l, e.i, e.j, c);
    }
    return out;
}

HomMatrix hom_matrix(const Algebra& A, int n) {
    if (n < 1) throw std::invalid_argument("hom_matrix: degree must be >= 1");
    HomMatrix H;
    H.n = n;
    H.source = cochain_basis(A.T(), n - 1);
    H.target = cochain_basis(A.T(), n);
    H.mat =
        SparseMatrix::zero(static_cast<int>(H.source.size()), static_cast<int>(H.target.size()));
    const BimoduleMap d = bimodule_differential(A, n);
    for (size_t r = 0; r < H.source.size(); ++r) {
        const auto& e = H.source[r];
        Cochain psi(A.T(), A.field(), n - 1);
        psi.add(e.kind, e.l, e.i, e.j, A.scalar(1));
        Cochain image = Cochain::from_values(A, n, compose_values(A, psi.to_values(A), d));
        H.mat.row_data[r] = image.to_coordinates(H.target);
    }
    return H;
}

const HomMatrix& CochainComplex::matrix(int n) {
    auto it = matrices_.find(n);
    if (it == matrices_.end()) it = matrices_.emplace(n, hom_matrix(A_, n)).first;
    return it->second;
}

int CochainComplex::rank(int n) {
    auto it = ranks_.find(n);
    if (it == ranks_.end()) it = ranks_.emplace(n, matrix(n).mat.rank(A_.field())).first;
    return it->second;
}

CohomologyDims CochainComplex::dimensions(int n) {
    CohomologyDims d;
    d.ker = cochain_dim(A_.T(), n) - rank(n + 1);
    d.im = n == 0 ? 0 : rank(n);
    d.hh = d.ker - d.im;
    return d;
}

CohomologyDims cohomology_dimensions(const Algebra& A, int n) {
    CochainComplex cx(A);
    return cx.dimensions(n);
}

namespace {
void check_formula_args(long long m, int r) {
    if (r < 0 || r > 3) throw std::invalid_argument("formula: residue out of range");
    if (m < 0) throw std::invalid_argument("formula: negative m");
    if (m == 0 && r == 0)
        throw std::invalid_argument("formula: the image/kernel tables are undefined at n = 0");
}
}  // namespace

long long formula_dim_im(long long T, long long m, int r, bool divides) {
    check_formula_args(m, r);
    switch (r) {
        case 0: return 16 * T * m;
        case 1: return 2 * T * (8 * m + 3) + 3 * (4 * m + 1);
        case 2:
            return divides ? 8 * T * (2 * m + 1) + 4 * (3 * m + 2)
                           : 8 * T * (2 * m + 1) + 3 * (4 * m + 3);
        default: return 2 * T * (8 * m + 7);
    }
}

long long formula_dim_ker(long long T, long long m, int r, bool divides) {
    check_formula_args(m, r);
    switch (r) {
        case 0: return 16 * T * m;
        case 1: return 2 * T * (8 * m + 1) + 4 * m + 1;
        case 2:
            return divides ? 8 * T * (2 * m + 1) + 4 * (5 * m + 2)
                           : 8 * T * (2 * m + 1) + 20 * m + 7;
        default: return 2 * T * (8 * m + 5) + 4 * (4 * m + 3);
    }
}

long long formula_dim_hh(long long T, long long m, int r, bool divides) {
    if (r < 0 || r > 3) throw std::invalid_argument("formula: residue out of range");
    switch (r) {
        case 0: return 2 * T + 4 * m + 1;
        case 1: return divides ? 2 * T + 8 * m + 5 : 2 * T + 4 * (2 * m + 1);
        case 2: return divides ? 2 * T + 4 * (m + 1) : 2 * T + 4 * m + 3;
        default: return 2 * T;
    }
}

FormulaDims closed_formula_dims(long long T, long long m, int r, bool divides) {
    return {formula_dim_im(T, m, r, divides), formula_dim_ker(T, m, r, divides),
            formula_dim_hh(T, m, r, divides)};
}

Cochain reference_differential_action(const Algebra& A, const CochainBasisElement& psi, int n) {
    const int T = A.T();
    Cochain out(T, A.field(), n + 1);
    auto add = [&](CochainKind k, int l, int i, int j, long long c) {
        out.add(k, l, i, j, A.scalar(c));
    };
    const auto K = psi.kind;
    const int l = psi.l, i = psi.i, j = psi.j;
    const bool ev = i % 2 == 0;

    switch (n % 4) {
        case 1: {  // composition with the degree 4m+2 differential
            const int m = (n - 1) / 4;
            if (l == 0 && K == CochainKind::X) {
                const bool center = (ev && j == 2 * m) || (!ev && j == 2 * m + 1);
                if (center) {
                    add(K, T, i, 2 * m + 1, T + 1);
                    add(K, T, i + 1, 2 * m + 1, T);
                    add(K, T, i + 2, 2 * m + 1, T);
                    add(K, T, i + 3, 2 * m + 1, T + 1);
                } else if (ev && j <= 2 * m - 1) {
                    add(K, T, i, j + 1, 1);
                    add(K, T, i - 1, j + 1, 1);
                } else if (!ev && j <= 2 * m) {
                    add(K, 0, i, j, 1);
                    add(K, 0, i - 1, j, 1);
                } else if (ev) {  // 2m+1 <= j
                    add(K, 0, i, j + 1, 1);
                    add(K, 0, i - 1, j + 1, 1);
                } else {  // odd vertex, 2m+2 <= j
                    add(K, T, i, j, 1);
                    add(K, T, i - 1, j, 1);
                }
            } else if (l == 0) {  // y-kind, level 0
                const bool center = (ev && j == 2 * m + 1) || (!ev && j == 2 * m);
                if (center) {
                    add(K, T, i, 2 * m + 1, T + 1);
                    add(K, T, i + 1, 2 * m + 1, T);
                    add(K, T, i + 2, 2 * m + 1, T);
                    add(K, T, i + 3, 2 * m + 1, T + 1);
                } else if (ev && j <= 2 * m) {
                    add(K, 0, i, j, 1);
                    add(K, 0, i - 1, j, 1);
                } else if (!ev && j <= 2 * m - 1) {
                    add(K, T, i, j + 1, 1);
                    add(K, T, i - 1, j + 1, 1);
                } else if (ev) {  // 2m+2 <= j
                    add(K, T, i, j, 1);
                    add(K, T, i - 1, j, 1);
                } else {  // odd vertex, 2m+1 <= j
                    add(K, 0, i, j + 1, 1);
                    add(K, 0, i - 1, j + 1, 1);
                }
            } else if (K == CochainKind::X) {  // l >= 1
                if (ev && j >= 2 * m + 1) {
                    add(K, l, i, j + 1, 1);
                    add(K, l, i - 1, j + 1, 1);
                } else if (!ev && j <= 2 * m) {
                    add(K, l, i, j, 1);
                    add(K, l, i - 1, j, 1);
                }
            } else {  // y-kind, l >= 1
                if (ev && j <= 2 * m) {
                    add(K, l, i, j, 1);
                    add(K, l, i - 1, j, 1);
                } else if (!ev && j >= 2 * m + 1) {
                    add(K, l, i, j + 1, 1);
                    add(K, l, i - 1, j + 1, 1);
                }
            }
            break;
        }
        case 2: {  // composition with the degree 4m+3 differential
            const int m = (n - 2) / 4;
            if (l == T) break;  // the top level dies
            if (K == CochainKind::X) {
                if (j <= 2 * m) {
                    if (ev)
                        add(K, l, i, j, 1);
                    else
                        add(K, l, i - 1, j, -1);
                } else if (j == 2 * m + 1) {
                    if (ev) {
                        add(K, l, i, 2 * m + 1, 1);
                        add(K, l, i - 1, 2 * m + 2, -1);
                    } else {
                        add(K, l, i, 2 * m + 2, 1);
                        add(K, l, i - 1, 2 * m + 1, -1);
                    }
                } else {
                    if (ev)
                        add(K, l, i - 1, j + 1, -1);
                    else
                        add(K, l, i, j + 1, 1);
                }
            } else {
                if (j <= 2 * m) {
                    if (ev)
                        add(K, l, i - 1, j, -1);
                    else
                        add(K, l, i, j, 1);
                } else if (j == 2 * m + 1) {
                    if (ev) {
                        add(K, l, i, 2 * m + 2, 1);
                        add(K, l, i - 1, 2 * m + 1, -1);
                    } else {
                        add(K, l, i, 2 * m + 1, 1);
                        add(K, l, i - 1, 2 * m + 2, -1);
                    }
                } else {
                    if (ev)
                        add(K, l, i, j + 1, 1);
                    else
                        add(K, l, i - 1, j + 1, -1);
                }
            }
            break;
        }
        case 3: {  // composition with the degree 4m+4 differential
            const int m = (n - 3) / 4;
            const bool upper = j >= 2 * m + 2;
            // the y-kind survives on the opposite vertex parity from the x-kind
            const bool lives = K == CochainKind::X ? (ev == upper) : (ev != upper);
            if (lives) {
                const int p = upper ? j + 1 : j;
                add(K, l + 1, i, p, 1);
                add(K, l + 1, i - 1, p, 1);
            }
            break;
        }
        default: {  // n = 4m, composition with the degree 4m+1 differential
            const int m = n / 4;
            if (l == 0) {
                // common image of the degenerate level-0 pair
                const CochainKind a = ev ? CochainKind::X : CochainKind::Y;
                const CochainKind b = ev ? CochainKind::Y : CochainKind::X;
                if (j <= 2 * m - 1) {
                    out.add(a, 0, i, j, A.scalar(1));
                    out.add(b, 0, i - 1, j, A.scalar(-1));
                    out.add(b, T, i, j + 1, A.scalar(1));
                    out.add(a, T, i - 1, j + 1, A.scalar(-1));
                } else if (j == 2 * m) {
                    out.add(a, 0, i, 2 * m, A.scalar(1));
                    out.add(b, 0, i - 1, 2 * m, A.scalar(-1));
                    out.add(b, 0, i, 2 * m + 1, A.scalar(1));
                    out.add(a, 0, i - 1, 2 * m + 1, A.scalar(-1));
                } else {
                    out.add(a, T, i, j, A.scalar(1));
                    out.add(b, T, i - 1, j, A.scalar(-1));
                    out.add(b, 0, i, j + 1, A.scalar(1));
                    out.add(a, 0, i - 1, j + 1, A.scalar(-1));
                }
            } else if (K == CochainKind::X) {
                if (j <= 2 * m - 1) {
                    if (ev)
                        add(K, l, i, j, 1);
                    else
                        add(K, l, i - 1, j, -1);
                } else if (j == 2 * m) {
                    if (ev) {
                        add(K, l, i, 2 * m, 1);
                        add(K, l, i - 1, 2 * m + 1, -1);
                    } else {
                        add(K, l, i, 2 * m + 1, 1);
                        add(K, l, i - 1, 2 * m, -1);
                    }
                } else {
                    if (ev)
                        add(K, l, i - 1, j + 1, -1);
                    else
                        add(K, l, i, j + 1, 1);
                }
            } else {
                if (j <= 2 * m - 1) {
                    if (ev)
                        add(K, l, i - 1, j, -1);
                    else
                        add(K, l, i, j, 1);
                } else if (j == 2 * m) {
                    if (ev) {
                        add(K, l, i, 2 * m + 1, 1);
                        add(K, l, i - 1, 2 * m, -1);
                    } else {
                        add(K, l, i, 2 * m, 1);
                        add(K, l, i - 1, 2 * m + 1, -1);
                    }
                } else {
                    if (ev)
                        add(K, l, i, j + 1, 1);
                    else
                        add(K, l, i - 1, j + 1, -1);
                }
            }
            break;
        }
    }
    return out;
}

namespace {

constexpr CochainKind X = CochainKind::X;
constexpr CochainKind Y = CochainKind::Y;

struct ComboTerm {
    int coeff;
    CochainKind kind;
    int l;
    int i;
    int j;
};

Cochain combo(const Algebra& A, int n, std::initializer_list<ComboTerm> terms) {
    Cochain c(A.T(), A.field(), n);
    for (const auto& t : terms) c.add(t.kind, t.l, t.i, t.j, A.scalar(t.coeff));
    return c;
}

Cochain vertex_sum(const Algebra& A, int n, CochainKind k, int l, int j) {
    Cochain c(A.T(), A.field(), n);
    for (int i = 0; i < kVertices; ++i) c.add(k, l, i, j, A.scalar(1));
    return c;
}

}  // namespace

std::vector<Cochain> reference_image_basis(const Algebra& A, int n) {
    if (n < 1) throw std::invalid_argument("reference_image_basis: degree must be >= 1");
    const int T = A.T();
    const bool div = divides_two_t_plus_one(A.field(), T);
    const int r = n % 4;
    std::vector<Cochain> out;
    auto C = [&](std::initializer_list<ComboTerm> ts) { out.push_back(combo(A, n, ts)); };

    if (r == 0) {
        const int m = n / 4 - 1;
        if (T == 0) return out;
        for (int l = 1; l <= T; ++l)
            for (int i = 0; i < kVertices; i += 2) {
                for (int j = 0; j <= 2 * m + 1; ++j) {
                    C({{1, Y, l, i, j}, {1, Y, l, i - 1, j}});
                    C({{1, X, l, i + 1, j}, {1, X, l, i, j}});
                }
                for (int k = 2 * m + 3; k <= 4 * m + 4; ++k) {
                    C({{1, X, l, i, k}, {1, X, l, i - 1, k}});
                    C({{1, Y, l, i + 1, k}, {1, Y, l, i, k}});
                }
            }
    } else if (r == 1) {
        const int m = (n - 1) / 4;
        if (T == 0) {
            for (int j = 0; j <= 4 * m; ++j) {
                C({{1, Y, 0, 1, j}, {-1, X, 0, 0, j}, {1, X, 0, 1, j + 1}, {-1, Y, 0, 0, j + 1}});
                C({{1, X, 0, 2, j}, {-1, Y, 0, 1, j}, {1, Y, 0, 2, j + 1}, {-1, X, 0, 1, j + 1}});
                C({{1, Y, 0, 3, j}, {-1, X, 0, 2, j}, {1, X, 0, 3, j + 1}, {-1, Y, 0, 2, j + 1}});
            }
            return out;
        }
        for (int i = 0; i < kVertices; i += 2)
            for (int j = 0; j <= 2 * m - 1; ++j)
                C({{1, Y, 0, i + 1, j},
                   {-1, X, 0, i, j},
                   {1, X, T, i + 1, j + 1},
                   {-1, Y, T, i, j + 1}});
        for (int j = 0; j <= 2 * m - 1; ++j)
            C({{1, X, 0, 2, j}, {-1, Y, 0, 1, j}, {1, Y, T, 2, j + 1}, {-1, X, T, 1, j + 1}});
        for (int i = 0; i < kVertices; i += 2)
            for (int k = 2 * m + 1; k <= 4 * m; ++k)
                C({{1, Y, T, i + 1, k},
                   {-1, X, T, i, k},
                   {1, X, 0, i + 1, k + 1},
                   {-1, Y, 0, i, k + 1}});
        for (int k = 2 * m + 1; k <= 4 * m; ++k)
            C({{1, X, T, 2, k}, {-1, Y, T, 1, k}, {1, Y, 0, 2, k + 1}, {-1, X, 0, 1, k + 1}});
        for (int i = 0; i < kVertices; i += 2)
            C({{1, Y, 0, i + 1, 2 * m},
               {-1, X, 0, i, 2 * m},
               {1, X, 0, i + 1, 2 * m + 1},
               {-1, Y, 0, i, 2 * m + 1}});
        C({{1, X, 0, 2, 2 * m},
           {-1, Y, 0, 1, 2 * m},
           {1, Y, 0, 2, 2 * m + 1},
           {-1, X, 0, 1, 2 * m + 1}});
        for (int l = 1; l <= T; ++l)
            for (int i = 0; i < kVertices; i += 2) {
                for (int j = 0; j <= 2 * m - 1; ++j) {
                    C({{1, X, l, i, j}});
                    C({{1, Y, l, i + 1, j}});
                }
                for (int k = 2 * m + 2; k <= 4 * m + 1; ++k) {
                    C({{1, Y, l, i, k}});
                    C({{1, X, l, i + 1, k}});
                }
            }
        for (int l = 1; l <= T; ++l) {
            for (int i = 0; i < kVertices; i += 2) {
                C({{1, X, l, i + 1, 2 * m + 1}, {-1, X, l, i, 2 * m}});
                C({{1, Y, l, i + 1, 2 * m}, {-1, Y, l, i, 2 * m + 1}});
            }
            C({{1, X, l, 2, 2 * m}, {-1, X, l, 1, 2 * m + 1}});
            C({{1, Y, l, 2, 2 * m + 1}, {-1, Y, l, 1, 2 * m}});
        }
    } else if (r == 2) {
        const int m = (n - 2) / 4;
        if (T == 0) {
            for (int i = 0; i <= 2; ++i)
                for (int j = 0; j <= 4 * m + 2; ++j) C({{1, X, 0, i + 1, j}, {1, X, 0, i, j}});
            return out;
        }
        for (int i = 0; i < kVertices; i += 2)
            for (int l = 0; l <= T - 1; ++l) {
                for (int j = 0; j <= 2 * m; ++j) {
                    C({{1, X, l, i + 1, j}, {1, X, l, i, j}});
                    C({{1, Y, l, i, j}, {1, Y, l, i - 1, j}});
                }
                for (int k = 2 * m + 2; k <= 4 * m + 2; ++k) {
                    C({{1, X, l, i, k}, {1, X, l, i - 1, k}});
                    C({{1, Y, l, i + 1, k}, {1, Y, l, i, k}});
                }
            }
        for (int j = 0; j <= 4 * m + 2; ++j) {
            if (j == 2 * m + 1) continue;
            C({{1, X, T, 1, j}, {1, X, T, 0, j}});
            C({{1, X, T, 2, j}, {1, X, T, 1, j}});
            C({{1, X, T, 3, j}, {1, X, T, 2, j}});
        }
        if (div) {
            C({{1, X, T, 0, 2 * m + 1}, {-1, X, T, 2, 2 * m + 1}});
            C({{1, X, T, 1, 2 * m + 1}, {-1, X, T, 3, 2 * m + 1}});
        } else {
            C({{1, X, T, 1, 2 * m + 1}, {1, X, T, 0, 2 * m + 1}});
            C({{1, X, T, 2, 2 * m + 1}, {1, X, T, 1, 2 * m + 1}});
            C({{1, X, T, 3, 2 * m + 1}, {1, X, T, 2, 2 * m + 1}});
        }
    } else {  // r == 3
        const int m = (n - 3) / 4;
        if (T == 0) return out;
        for (int l = 0; l <= T - 1; ++l)
            for (int i = 0; i < kVertices; i += 2) {
                for (int j = 0; j <= 2 * m; ++j) {
                    C({{1, X, l, i, j}});
                    C({{1, Y, l, i + 1, j}});
                }
                for (int k = 2 * m + 3; k <= 4 * m + 3; ++k) {
                    C({{1, X, l, i + 1, k}});
                    C({{1, Y, l, i, k}});
                }
            }
        for (int l = 0; l <= T - 1; ++l) {
            C({{1, X, l, 1, 2 * m + 2}, {-1, X, l, 0, 2 * m + 1}});
            C({{1, X, l, 2, 2 * m + 1}, {-1, X, l, 1, 2 * m + 2}});
            C({{1, X, l, 3, 2 * m + 2}, {-1, X, l, 2, 2 * m + 1}});
            C({{1, Y, l, 1, 2 * m + 1}, {-1, Y, l, 0, 2 * m + 2}});
            C({{1, Y, l, 2, 2 * m + 2}, {-1, Y, l, 1, 2 * m + 1}});
            C({{1, Y, l, 3, 2 * m + 1}, {-1, Y, l, 2, 2 * m + 2}});
        }
    }
    return out;
}

std::vector<Cochain> reference_kernel_basis(const Algebra& A, int n) {
    if (n < 1) throw std::invalid_argument("reference_kernel_basis: degree must be >= 1");
    const int T = A.T();
    const bool div = divides_two_t_plus_one(A.field(), T);
    const int r = n % 4;
    const int deg = n - 1;  // the kernel lives in degree n-1
    std::vector<Cochain> out;
    auto C = [&](std::initializer_list<ComboTerm> ts) { out.push_back(combo(A, deg, ts)); };

    if (r == 0) {
        const int m = n / 4 - 1;
        if (T == 0) return out;
        for (int i = 0; i < kVertices; i += 2)
            for (int l = 0; l <= T - 1; ++l) {
                for (int j = 0; j <= 2 * m + 1; ++j) {
                    C({{1, X, l, i, j}});
                    C({{1, Y, l, i + 1, j}});
                }
                for (int k = 2 * m + 2; k <= 4 * m + 3; ++k) {
                    C({{1, Y, l, i, k}});
                    C({{1, X, l, i + 1, k}});
                }
            }
    } else if (r == 1) {
        const int m = (n - 1) / 4;
        for (int j = 0; j <= 4 * m; ++j) out.push_back(vertex_sum(A, deg, X, 0, j));
        if (T == 0) return out;
        for (int i = 0; i < kVertices; i += 2)
            for (int l = 1; l <= T; ++l) {
                for (int j = 0; j <= 2 * m - 1; ++j) {
                    C({{1, X, l, i + 1, j}, {1, X, l, i, j}});
                    C({{1, Y, l, i, j}, {1, Y, l, i - 1, j}});
                }
                for (int k = 2 * m + 1; k <= 4 * m; ++k) {
                    C({{1, Y, l, i + 1, k}, {1, Y, l, i, k}});
                    C({{1, X, l, i, k}, {1, X, l, i - 1, k}});
                }
            }
        for (int l = 1; l <= T; ++l) {
            out.push_back(vertex_sum(A, deg, X, l, 2 * m));
            out.push_back(vertex_sum(A, deg, Y, l, 2 * m));
        }
    } else if (r == 2) {
        const int m = (n - 2) / 4;
        if (T == 0) {
            for (int j = 0; j <= 4 * m; ++j) {
                C({{1, X, 0, 0, j}, {1, Y, 0, 0, j + 1}});
                for (int i = 0; i < kVertices; i += 2)
                    C({{1, X, 0, i + 1, j + 1},
                       {-1, Y, 0, i, j + 1},
                       {1, Y, 0, i + 1, j},
                       {-1, X, 0, i, j}});
                C({{1, Y, 0, 2, j + 1}, {-1, X, 0, 1, j + 1}, {1, X, 0, 2, j}, {-1, Y, 0, 1, j}});
            }
            for (int j = 0; j <= 2 * m + 1; ++j)
                C({{1, Y, 0, 0, j}, {1, X, 0, 1, j}, {1, Y, 0, 2, j}, {1, X, 0, 3, j}});
            for (int j = 2 * m + 1; j <= 4 * m + 1; ++j)
                C({{1, X, 0, 0, j}, {1, Y, 0, 1, j}, {1, X, 0, 2, j}, {1, Y, 0, 3, j}});
            return out;
        }
        for (int j = 0; j <= 2 * m - 1; ++j) {
            C({{1, X, 0, 0, j}, {1, Y, T, 0, j + 1}});
            for (int i = 0; i < kVertices; i += 2)
                C({{1, Y, 0, i + 1, j},
                   {-1, X, 0, i, j},
                   {1, X, T, i + 1, j + 1},
                   {-1, Y, T, i, j + 1}});
            C({{1, X, 0, 2, j}, {-1, Y, 0, 1, j}, {1, Y, T, 2, j + 1}, {-1, X, T, 1, j + 1}});
        }
        for (int j = 2 * m + 1; j <= 4 * m; ++j) {
            C({{1, X, T, 0, j}, {1, Y, 0, 0, j + 1}});
            for (int i = 0; i < kVertices; i += 2)
                C({{1, Y, T, i + 1, j},
                   {-1, X, T, i, j},
                   {1, X, 0, i + 1, j + 1},
                   {-1, Y, 0, i, j + 1}});
            C({{1, X, T, 2, j}, {-1, Y, T, 1, j}, {1, Y, 0, 2, j + 1}, {-1, X, 0, 1, j + 1}});
        }
        C({{1, X, 0, 0, 2 * m}, {1, Y, 0, 0, 2 * m + 1}});
        for (int i = 0; i < kVertices; i += 2)
            C({{1, Y, 0, i + 1, 2 * m},
               {-1, X, 0, i, 2 * m},
               {1, X, 0, i + 1, 2 * m + 1},
               {-1, Y, 0, i, 2 * m + 1}});
        C({{1, X, 0, 2, 2 * m},
           {-1, Y, 0, 1, 2 * m},
           {1, Y, 0, 2, 2 * m + 1},
           {-1, X, 0, 1, 2 * m + 1}});
        for (int j = 0; j <= 2 * m; ++j)
            C({{1, Y, T, 0, j}, {1, X, T, 1, j}, {1, Y, T, 2, j}, {1, X, T, 3, j}});
        for (int k = 2 * m + 1; k <= 4 * m + 1; ++k)
            C({{1, X, T, 0, k}, {1, Y, T, 1, k}, {1, X, T, 2, k}, {1, Y, T, 3, k}});
        for (int l = 1; l <= T; ++l)
            for (int i = 0; i < kVertices; i += 2) {
                for (int j = 0; j <= 2 * m; ++j) {
                    C({{1, X, l, i, j}});
                    C({{1, Y, l, i + 1, j}});
                }
                for (int k = 2 * m + 1; k <= 4 * m + 1; ++k) {
                    C({{1, Y, l, i, k}});
                    C({{1, X, l, i + 1, k}});
                }
            }
        if (div) {
            C({{1, Y, 0, 0, 2 * m + 1}, {1, Y, 0, 2, 2 * m + 1}});
            C({{1, X, 0, 1, 2 * m + 1}, {1, X, 0, 3, 2 * m + 1}});
        } else {
            C({{1, Y, 0, 0, 2 * m + 1},
               {1, X, 0, 1, 2 * m + 1},
               {1, Y, 0, 2, 2 * m + 1},
               {1, X, 0, 3, 2 * m + 1}});
        }
    } else {  // r == 3
        const int m = (n - 3) / 4;
        if (T == 0) {
            for (int i = 0; i < kVertices; ++i)
                for (int j = 0; j <= 4 * m + 2; ++j) C({{1, X, 0, i, j}});
            return out;
        }
        for (int i = 0; i < kVertices; i += 2)
            for (int l = 0; l <= T - 1; ++l) {
                for (int j = 0; j <= 2 * m; ++j) {
                    C({{1, X, l, i + 1, j}, {1, X, l, i, j}});
                    C({{1, Y, l, i, j}, {1, Y, l, i - 1, j}});
                }
                for (int k = 2 * m + 2; k <= 4 * m + 2; ++k) {
                    C({{1, Y, l, i + 1, k}, {1, Y, l, i, k}});
                    C({{1, X, l, i, k}, {1, X, l, i - 1, k}});
                }
            }
        for (int l = 0; l <= T - 1; ++l) {
            out.push_back(vertex_sum(A, deg, X, l, 2 * m + 1));
            out.push_back(vertex_sum(A, deg, Y, l, 2 * m + 1));
        }
        for (int i = 0; i < kVertices; ++i)
            for (int j = 0; j <= 4 * m + 2; ++j) C({{1, X, T, i, j}});
    }
    return out;
}

std::vector<Cochain> reference_cohomology_basis(const Algebra& A, int n) {
    const int T = A.T();
    const bool div = divides_two_t_plus_one(A.field(), T);
    const int r = n % 4;
    std::vector<Cochain> out;
    auto C = [&](std::initializer_list<ComboTerm> ts) { out.push_back(combo(A, n, ts)); };

    if (r == 0) {
        const int m = n / 4;
        for (int j = 0; j <= 4 * m; ++j) out.push_back(vertex_sum(A, n, X, 0, j));
        for (int l = 1; l <= T; ++l) {
            out.push_back(vertex_sum(A, n, X, l, 2 * m));
            out.push_back(vertex_sum(A, n, Y, l, 2 * m));
        }
    } else if (r == 1) {
        const int m = (n - 1) / 4;
        if (T == 0) {
            for (int j = 0; j <= 4 * m; ++j) C({{1, X, 0, 0, j}, {1, Y, 0, 0, j + 1}});
            for (int j = 0; j <= 2 * m + 1; ++j)
                C({{1, Y, 0, 0, j}, {1, X, 0, 1, j}, {1, Y, 0, 2, j}, {1, X, 0, 3, j}});
            for (int j = 2 * m + 1; j <= 4 * m + 1; ++j)
                C({{1, X, 0, 0, j}, {1, Y, 0, 1, j}, {1, X, 0, 2, j}, {1, Y, 0, 3, j}});
            return out;
        }
        for (int j = 0; j <= 2 * m - 1; ++j) C({{1, X, 0, 0, j}, {1, Y, T, 0, j + 1}});
        for (int j = 2 * m + 1; j <= 4 * m; ++j) C({{1, X, T, 0, j}, {1, Y, 0, 0, j + 1}});
        C({{1, X, 0, 0, 2 * m}, {1, Y, 0, 0, 2 * m + 1}});
        for (int j = 0; j <= 2 * m; ++j)
            C({{1, Y, T, 0, j}, {1, X, T, 1, j}, {1, Y, T, 2, j}, {1, X, T, 3, j}});
        for (int j = 2 * m + 1; j <= 4 * m + 1; ++j)
            C({{1, X, T, 0, j}, {1, Y, T, 1, j}, {1, X, T, 2, j}, {1, Y, T, 3, j}});
        for (int l = 1; l <= T; ++l) {
            C({{1, X, l, 0, 2 * m}});
            C({{1, Y, l, 0, 2 * m + 1}});
        }
        if (div) {
            C({{1, Y, 0, 0, 2 * m + 1}, {1, Y, 0, 2, 2 * m + 1}});
            C({{1, X, 0, 1, 2 * m + 1}, {1, X, 0, 3, 2 * m + 1}});
        } else {
            C({{1, Y, 0, 0, 2 * m + 1},
               {1, X, 0, 1, 2 * m + 1},
               {1, Y, 0, 2, 2 * m + 1},
               {1, X, 0, 3, 2 * m + 1}});
        }
    } else if (r == 2) {
        const int m = (n - 2) / 4;
        if (T == 0) {
            for (int j = 0; j <= 4 * m + 2; ++j) C({{1, X, 0, 0, j}});
            return out;
        }
        for (int l = 0; l <= T - 1; ++l) {
            out.push_back(vertex_sum(A, n, X, l, 2 * m + 1));
            out.push_back(vertex_sum(A, n, Y, l, 2 * m + 1));
        }
        for (int j = 0; j <= 4 * m + 2; ++j) {
            if (j == 2 * m + 1) continue;
            C({{1, X, T, 0, j}});
        }
        C({{1, X, T, 0, 2 * m + 1}});
        if (div) C({{1, X, T, 1, 2 * m + 1}});
    } else {  // r == 3
        const int m = (n - 3) / 4;
        for (int l = 0; l <= T - 1; ++l) {
            C({{1, X, l, 0, 2 * m + 1}});
            C({{1, Y, l, 0, 2 * m + 2}});
        }
    }
    return out;
}

CheckReport verify_reference_bases(CochainComplex& cx, int n) {
    CheckReport rep;
    const Algebra& A = cx.algebra();
    const FieldSpec field = A.field();
    const std::string ctx =
        "(T=" + std::to_string(A.T()) + ", " + field.str() + ", n=" + std::to_string(n) + ") ";
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.failures.push_back(ctx + msg);
    };

    if (n >= 1) {
        const HomMatrix& M = cx.matrix(n);

        auto image_list = reference_image_basis(A, n);
        Echelon rowspace(field);
        for (const auto& row : M.mat.row_data) rowspace.insert(row);
        Echelon image_indep(field);
        for (size_t k = 0; k < image_list.size(); ++k) {
            SparseVec v = image_list[k].to_coordinates(M.target);
            if (!rowspace.contains(v))
                fail("image catalog element " + std::to_string(k) +
                     " not in the image: " + image_list[k].str());
            if (!image_indep.insert(v))
                fail("image catalog dependent at element " + std::to_string(k));
        }
        if (static_cast<int>(image_list.size()) != cx.rank(n))
            fail("image catalog size " + std::to_string(image_list.size()) +
                 " != computed image dimension " + std::to_string(cx.rank(n)));

        auto kernel_list = reference_kernel_basis(A, n);
        Echelon kernel_indep(field);
        for (size_t k = 0; k < kernel_list.size(); ++k) {
            SparseVec v = kernel_list[k].to_coordinates(M.source);
            if (!M.mat.apply_row(v).empty())
                fail("kernel catalog element " + std::to_string(k) +
                     " not in the kernel: " + kernel_list[k].str());
            if (!kernel_indep.insert(v))
                fail("kernel catalog dependent at element " + std::to_string(k));
        }
        const int ker_dim = cochain_dim(A.T(), n - 1) - cx.rank(n);
        if (static_cast<int>(kernel_list.size()) != ker_dim)
            fail("kernel catalog size " + std::to_string(kernel_list.size()) +
                 " != computed kernel dimension " + std::to_string(ker_dim));
    }

    auto hh_list = reference_cohomology_basis(A, n);
    const HomMatrix& M1 = cx.matrix(n + 1);
    Echelon mod_image(field);
    if (n >= 1)
        for (const auto& row : cx.matrix(n).mat.row_data) mod_image.insert(row);
    const int image_rank = mod_image.rank();
    for (size_t k = 0; k < hh_list.size(); ++k) {
        SparseVec v = hh_list[k].to_coordinates(M1.source);
        if (!M1.mat.apply_row(v).empty())
            fail("cohomology catalog element " + std::to_string(k) +
                 " is not a cocycle: " + hh_list[k].str());
        if (!mod_image.insert(v))
            fail("cohomology catalog dependent modulo coboundaries at element " +
                 std::to_string(k));
    }
    const CohomologyDims dims = cx.dimensions(n);
    if (static_cast<int>(hh_list.size()) != dims.hh)
        fail("cohomology catalog size " + std::to_string(hh_list.size()) +
             " != computed dimension " + std::to_string(dims.hh));
    if (mod_image.rank() != image_rank + static_cast<int>(hh_list.size()))
        fail("cohomology catalog failed to extend the coboundary space");
    return rep;
}

CheckReport verify_dimension_formulas(CochainComplex& cx, int N) {
    CheckReport rep;
    const Algebra& A = cx.algebra();
    const bool div = divides_two_t_plus_one(A.field(), A.T());
    for (int n = 0; n <= N; ++n) {
        const CohomologyDims got = cx.dimensions(n);
        const long long want_ker = formula_dim_ker(A.T(), (n + 1) / 4, (n + 1) % 4, div);
        const long long want_im = n == 0 ? 0 : formula_dim_im(A.T(), n / 4, n % 4, div);
        const long long want_hh = formula_dim_hh(A.T(), n / 4, n % 4, div);
        if (got.ker != want_ker || got.im != want_im || got.hh != want_hh) {
            rep.ok = false;
            rep.failures.push_back(
                "(T=" + std::to_string(A.T()) + ", " + A.field().str() +
                ", n=" + std::to_string(n) + ") computed (im,ker,hh)=(" + std::to_string(got.im) +
                "," + std::to_string(got.ker) + "," + std::to_string(got.hh) + ") vs table (" +
                std::to_string(want_im) + "," + std::to_string(want_ker) + "," +
                std::to_string(want_hh) + ")");
        }
    }
    return rep;
}

CheckReport verify_center_correspondence(const Algebra& A) {
    CheckReport rep;
    const FieldSpec field = A.field();
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.failures.push_back("(T=" + std::to_string(A.T()) + ", " + field.str() + ") " + msg);
    };

    CochainComplex cx(A);
    const HomMatrix& M1 = cx.matrix(1);
    auto kernel = left_nullspace(M1.mat, field);
    const CenterReport center = compute_center(A);

    if (static_cast<int>(kernel.size()) != center.dimension) fail("dim HH^0 != dim Z(A_T)");
    if (center.dimension != 2 * A.T() + 1) fail("centre dimension != 2T+1");
    if (!center.presentation_ok) fail("centre presentation mismatch");

    Echelon center_span(field);
    for (const auto& z : center.basis) {
        SparseVec v;
        for (const auto& [mono, c] : z.terms()) v.emplace_back(A.basis_index(mono), c);
        center_span.insert(v);
    }
    Echelon images(field);
    for (const auto& vec : kernel) {
        Cochain phi = Cochain::from_coordinates(A.T(), field, 0, M1.source, vec);
        AlgebraElement val = A.zero();
        for (const auto& [g, elem] : phi.to_values(A)) val = val + elem;
        SparseVec v;
        for (const auto& [mono, c] : val.terms()) v.emplace_back(A.basis_index(mono), c);
        if (!center_span.contains(v)) fail("image of an HH^0 class is not central");
        if (!images.insert(v)) fail("HH^0 classes map to dependent central elements");
    }
    if (images.rank() != center.dimension) fail("HH^0 does not map onto a basis of the centre");
    return rep;
}

}  // namespace hhq
