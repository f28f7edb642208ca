#include "hhq/yoneda.hpp"

#include <numeric>
#include <string>

namespace hhq {

namespace {

void require_koszul_case(const Algebra& A, const char* who) {
    if (A.T() != 0) throw std::invalid_argument(std::string(who) + ": requires T = 0");
}

// Basis monomials of e_from A e_to.
std::vector<Monomial> monomials_between(const Algebra& A, int from, int to) {
    std::vector<Monomial> out;
    const int block = A.dim() / kVertices;
    for (int k = 0; k < block; ++k) {
        const Monomial& m = A.basis()[vertex_mod(from) * block + k];
        if (m.end_vertex() == vertex_mod(to)) out.push_back(m);
    }
    return out;
}

// Coordinates of the space of values e_i Q^k e_{i+N} of a bimodule map
// Q^N -> Q^k at a source generator with vertex i.
struct TensorCoord {
    GeneratorIndex gen;
    Monomial left;
    Monomial right;
    auto operator<=>(const TensorCoord&) const = default;
};

std::vector<TensorCoord> tensor_coords(const Algebra& A, int i, int N, int k) {
    std::vector<TensorCoord> out;
    for (int r = 0; r < kVertices; ++r)
        for (int s = 0; s <= k; ++s)
            for (const Monomial& p : monomials_between(A, i, r))
                for (const Monomial& q : monomials_between(A, vertex_mod(r + k), i + N))
                    out.push_back({GeneratorIndex{k, r, s}, p, q});
    return out;
}

int coord_index(const std::vector<TensorCoord>& coords, const TensorCoord& c) {
    auto it = std::lower_bound(coords.begin(), coords.end(), c);
    if (it == coords.end() || !(*it == c))
        throw std::logic_error("lift_cocycle: coordinate outside the enumerated space");
    return static_cast<int>(it - coords.begin());
}

}  // namespace

BimoduleMap shift_lifting(const Algebra& A, int j, int k) {
    require_koszul_case(A, "shift_lifting");
    if (j < 0 || j > 4) throw std::invalid_argument("shift_lifting: j out of range");
    BimoduleMap f(k + 4, k);
    for (int r = 0; r < kVertices; ++r)
        for (int s = 0; s <= k + 4; ++s) {
            const int t = s - j;
            if (t < 0 || t > k) continue;
            f.add_term({k + 4, r, s}, {k, r, t}, Monomial::e(r), Monomial::e(vertex_mod(r + k)),
                       A.scalar(1));
        }
    return f;
}

Cochain degree4_generator(const Algebra& A, int j) {
    require_koszul_case(A, "degree4_generator");
    Cochain z(A.T(), A.field(), 4);
    for (int i = 0; i < kVertices; ++i) z.add(CochainKind::X, 0, i, j, A.scalar(1));
    return z;
}

Cochain product_formula(const Algebra& A, int w, int target) {
    require_koszul_case(A, "product_formula");
    Cochain c(A.T(), A.field(), 4 * w);
    for (int r = 0; r < kVertices; ++r) c.add(CochainKind::X, 0, r, target, A.scalar(1));
    return c;
}

LiftingChain lift_cocycle(const Algebra& A, const Cochain& c, int steps) {
    const int d = c.degree();
    const GeneratorValues cval = c.to_values(A);
    {
        BimoduleMap next = bimodule_differential(A, d + 1);
        if (!compose_values(A, cval, next).empty())
            throw std::invalid_argument("lift_cocycle: not a cocycle");
    }

    LiftingChain chain;
    chain.base_degree = d;

    for (int k = 0; k <= steps; ++k) {
        const int N = d + k;
        BimoduleMap f(N, k);
        // Known right-hand side: the cocycle itself for k = 0, otherwise the
        // previous lifting composed with the resolution differential.
        BimoduleMap rhs_map = k == 0 ? BimoduleMap(0, 0)
                                     : compose(A, chain.maps.back(), bimodule_differential(A, N));
        const BimoduleMap dk = k == 0 ? BimoduleMap(0, 0) : bimodule_differential(A, k);

        for (int i = 0; i < kVertices; ++i) {
            for (int j = 0; j <= N; ++j) {
                const GeneratorIndex src{N, i, j};
                const auto unknowns = tensor_coords(A, i, N, k);

                if (k == 0) {
                    // d^0 o f_0 = c: equations over the monomials of e_i A e_{i+N}
                    const auto eqs = monomials_between(A, i, i + N);
                    SparseMatrix M = SparseMatrix::zero(static_cast<int>(eqs.size()),
                                                        static_cast<int>(unknowns.size()));
                    for (size_t u = 0; u < unknowns.size(); ++u) {
                        auto prod = A.multiply_monomials(unknowns[u].left, unknowns[u].right);
                        if (prod.sign == 0) continue;
                        auto it = std::lower_bound(eqs.begin(), eqs.end(), prod.mono);
                        M.add(static_cast<int>(it - eqs.begin()), static_cast<int>(u),
                              A.scalar(prod.sign));
                    }
                    std::vector<Scalar> b(eqs.size(), Scalar::zero(A.field()));
                    if (auto vit = cval.find(src); vit != cval.end())
                        for (const auto& [mono, coeff] : vit->second.terms()) {
                            auto it = std::lower_bound(eqs.begin(), eqs.end(), mono);
                            b[it - eqs.begin()] = coeff;
                        }
                    auto sol = solve_linear_system(M, b, A.field());
                    if (!sol) throw std::runtime_error("lift_cocycle: no solution at step 0");
                    for (size_t u = 0; u < unknowns.size(); ++u)
                        f.add_term(src, unknowns[u].gen, unknowns[u].left, unknowns[u].right,
                                   (*sol)[u]);
                    continue;
                }

                const auto eqs = tensor_coords(A, i, N, k - 1);
                SparseMatrix M = SparseMatrix::zero(static_cast<int>(eqs.size()),
                                                    static_cast<int>(unknowns.size()));
                for (size_t u = 0; u < unknowns.size(); ++u) {
                    const auto* drow = dk.row(unknowns[u].gen);
                    if (!drow) continue;
                    for (const auto& [tgt, te] : *drow)
                        for (const auto& [lr, coeff] : te.terms()) {
                            auto left = A.multiply_monomials(unknowns[u].left, lr.first);
                            if (left.sign == 0) continue;
                            auto right = A.multiply_monomials(lr.second, unknowns[u].right);
                            if (right.sign == 0) continue;
                            Scalar val = coeff;
                            if (left.sign * right.sign < 0) val = -val;
                            M.add(coord_index(eqs, {tgt, left.mono, right.mono}),
                                  static_cast<int>(u), val);
                        }
                }
                std::vector<Scalar> b(eqs.size(), Scalar::zero(A.field()));
                if (const auto* rrow = rhs_map.row(src))
                    for (const auto& [tgt, te] : *rrow)
                        for (const auto& [lr, coeff] : te.terms())
                            b[coord_index(eqs, {tgt, lr.first, lr.second})] += coeff;
                auto sol = solve_linear_system(M, b, A.field());
                if (!sol)
                    throw std::runtime_error("lift_cocycle: no solution at step " +
                                             std::to_string(k));
                for (size_t u = 0; u < unknowns.size(); ++u)
                    f.add_term(src, unknowns[u].gen, unknowns[u].left, unknowns[u].right,
                               (*sol)[u]);
            }
        }
        chain.maps.push_back(std::move(f));
    }
    return chain;
}

Cochain yoneda_product(const Algebra& A, const Cochain& c1, const LiftingChain& chain2) {
    const int m = c1.degree();
    if (m >= static_cast<int>(chain2.maps.size()))
        throw std::invalid_argument("yoneda_product: chain not lifted far enough");
    const BimoduleMap& f = chain2.maps[m];
    return Cochain::from_values(A, m + chain2.base_degree,
                                compose_values(A, c1.to_values(A), f));
}

CheckReport verify_shift_liftings(const Algebra& A, int cap) {
    require_koszul_case(A, "verify_shift_liftings");
    CheckReport rep;
    for (int j = 0; j <= 4; ++j) {
        Cochain base = Cochain::from_values(
            A, 4, multiplication_compose(A, shift_lifting(A, j, 0)));
        if (!(base == degree4_generator(A, j))) {
            rep.ok = false;
            rep.failures.push_back("mult o sigma^0_" + std::to_string(j) +
                                   " differs from the generator class");
        }
        for (int l = 0; l <= cap; ++l) {
            BimoduleMap lhs = compose(A, shift_lifting(A, j, l), bimodule_differential(A, l + 5));
            BimoduleMap rhs = compose(A, bimodule_differential(A, l + 1), shift_lifting(A, j, l + 1));
            if (!(lhs == rhs)) {
                rep.ok = false;
                rep.failures.push_back("lifting square fails at (j=" + std::to_string(j) +
                                       ", l=" + std::to_string(l) + ")");
            }
        }
    }
    return rep;
}

RingPresentation ring_presentation() {
    RingPresentation p;
    p.relations = {{0, 2, 1, 1}, {0, 3, 1, 2}, {0, 4, 2, 2},
                   {0, 4, 1, 3}, {1, 4, 2, 3}, {2, 4, 3, 3}};
    return p;
}

namespace {

// Multi-indices of total degree w in five variables, lexicographic.
std::vector<std::array<int, 5>> degree_monomials(int w) {
    std::vector<std::array<int, 5>> out;
    for (int a = 0; a <= w; ++a)
        for (int b = 0; b <= w - a; ++b)
            for (int c = 0; c <= w - a - b; ++c)
                for (int d = 0; d <= w - a - b - c; ++d)
                    out.push_back({a, b, c, d, w - a - b - c - d});
    return out;
}

int find_root(std::vector<int>& parent, int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
}

}  // namespace

std::vector<long long> presentation_hilbert(int w_max) {
    std::vector<long long> dims;
    const auto rels = ring_presentation().relations;
    for (int w = 0; w <= w_max; ++w) {
        auto monos = degree_monomials(w);
        std::map<std::array<int, 5>, int> index;
        for (int k = 0; k < static_cast<int>(monos.size()); ++k) index.emplace(monos[k], k);
        std::vector<int> parent(monos.size());
        std::iota(parent.begin(), parent.end(), 0);
        if (w >= 2)
            for (const auto& mu : degree_monomials(w - 2))
                for (const auto& rel : rels) {
                    std::array<int, 5> lhs = mu, rhs = mu;
                    ++lhs[rel[0]];
                    ++lhs[rel[1]];
                    ++rhs[rel[2]];
                    ++rhs[rel[3]];
                    int a = find_root(parent, index.at(lhs));
                    int b = find_root(parent, index.at(rhs));
                    parent[a] = b;
                }
        long long components = 0;
        for (int k = 0; k < static_cast<int>(monos.size()); ++k)
            if (find_root(parent, k) == k) ++components;
        dims.push_back(components);
    }
    return dims;
}

CheckReport verify_ring_presentation(const Algebra& A, CochainComplex& cx, int w_max) {
    require_koszul_case(A, "verify_ring_presentation");
    CheckReport rep;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.failures.push_back(msg);
    };

    // Every word of generators multiplies out to the closed formula at its
    // digit sum. Words are folded left to right through the shift liftings.
    struct Frame {
        Cochain product;
        int sum;
        int length;
    };
    std::vector<Frame> stack;
    for (int j = 0; j <= 4; ++j) stack.push_back({degree4_generator(A, j), j, 1});
    while (!stack.empty()) {
        Frame fr = std::move(stack.back());
        stack.pop_back();
        if (!(fr.product == product_formula(A, fr.length, fr.sum)))
            fail("product of a length-" + std::to_string(fr.length) +
                 " word differs from the closed formula (digit sum " + std::to_string(fr.sum) +
                 ")");
        if (fr.length >= w_max) continue;
        for (int j = 0; j <= 4; ++j) {
            Cochain next = Cochain::from_values(
                A, 4 * (fr.length + 1),
                compose_values(A, fr.product.to_values(A), shift_lifting(A, j, 4 * fr.length)));
            stack.push_back({std::move(next), fr.sum + j, fr.length + 1});
        }
    }

    // The six defining relations vanish identically as maps Q^8 -> A.
    for (const auto& rel : ring_presentation().relations) {
        auto word_product = [&](int u, int v) {
            return Cochain::from_values(
                A, 8,
                compose_values(A, degree4_generator(A, u).to_values(A), shift_lifting(A, v, 4)));
        };
        Cochain diff = word_product(rel[0], rel[1]) - word_product(rel[2], rel[3]);
        if (!diff.is_zero())
            fail("relation z" + std::to_string(rel[0]) + " z" + std::to_string(rel[1]) + " - z" +
                 std::to_string(rel[2]) + " z" + std::to_string(rel[3]) + " does not vanish");
    }

    auto hilbert = presentation_hilbert(w_max);
    for (int w = 1; w <= w_max; ++w) {
        // Distinct products in degree 4w are the distinct digit sums 0..4w.
        for (int s = 0; s <= 4 * w; ++s) {
            if (product_formula(A, w, s).is_zero()) fail("a degree-4w product vanished");
            for (int s2 = s + 1; s2 <= 4 * w; ++s2)
                if (product_formula(A, w, s) == product_formula(A, w, s2))
                    fail("distinct digit sums gave equal products");
        }
        const long long distinct = 4LL * w + 1;
        if (hilbert[w] != distinct)
            fail("presentation Hilbert value at degree " + std::to_string(w) + " is " +
                 std::to_string(hilbert[w]) + ", expected " + std::to_string(distinct));
        if (cx.dimensions(4 * w).hh != distinct)
            fail("dim HH^" + std::to_string(4 * w) + " != " + std::to_string(distinct));
    }
    return rep;
}

CheckReport verify_nilpotent_part(const Algebra& A, CochainComplex& cx) {
    require_koszul_case(A, "verify_nilpotent_part");
    if (A.field().characteristic == 2)
        throw std::invalid_argument("verify_nilpotent_part: requires characteristic != 2");
    CheckReport rep;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.failures.push_back(msg);
    };

    // Degree-1 classes: squares must be coboundaries.
    {
        const HomMatrix& M2 = cx.matrix(2);
        Echelon coboundaries(A.field());
        for (const auto& row : M2.mat.row_data) coboundaries.insert(row);
        for (const Cochain& c : reference_cohomology_basis(A, 1)) {
            LiftingChain chain = lift_cocycle(A, c, 1);
            Cochain square = yoneda_product(A, c, chain);
            if (!coboundaries.contains(square.to_coordinates(M2.target)))
                fail("square of a degree-1 class is not a coboundary: " + c.str());
        }
    }

    // Degree-2 classes: the degree-4 coboundary space vanishes, so squares
    // must be identically zero.
    {
        if (cx.rank(4) != 0) fail("expected a vanishing degree-4 coboundary space");
        for (const Cochain& c : reference_cohomology_basis(A, 2)) {
            LiftingChain chain = lift_cocycle(A, c, 2);
            Cochain square = yoneda_product(A, c, chain);
            if (!square.is_zero()) fail("square of a degree-2 class is nonzero: " + c.str());
        }
    }

    // Control: the unit is not nilpotent.
    {
        Cochain unit = reference_cohomology_basis(A, 0).front();
        LiftingChain chain = lift_cocycle(A, unit, 0);
        Cochain square = yoneda_product(A, unit, chain);
        if (!(square == unit)) fail("unit times unit is not the unit");
    }
    return rep;
}

}  // namespace hhq
