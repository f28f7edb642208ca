#include "hhq/bar_complex.hpp"

#include <map>
#include <vector>

#include "hhq/linalg.hpp"

namespace hhq {

namespace {

// Basis cochain of the reduced complex: a radical-monomial chain with
// matching vertices and a value monomial in e_{start} A e_{end}.
struct BarCoord {
    int start = 0;
    std::vector<Monomial> chain;
    Monomial value{};
    auto operator<=>(const BarCoord&) const = default;
};

struct BarSpace {
    std::vector<BarCoord> basis;
    std::map<BarCoord, int> index;

    void push(BarCoord c) {
        index.emplace(c, static_cast<int>(basis.size()));
        basis.push_back(std::move(c));
    }
};

std::vector<Monomial> radical_basis(const Algebra& A) {
    std::vector<Monomial> out;
    for (const Monomial& m : A.basis())
        if (m.length() > 0) out.push_back(m);
    return out;
}

BarSpace bar_space(const Algebra& A, int n) {
    BarSpace space;
    const auto rad = radical_basis(A);
    std::vector<Monomial> chain;
    auto emit = [&](int start, int end) {
        const int block = A.dim() / kVertices;
        for (int k = 0; k < block; ++k) {
            const Monomial& v = A.basis()[start * block + k];
            if (v.end_vertex() == end) space.push({start, chain, v});
        }
    };
    auto rec = [&](auto&& self, int start, int at, int depth) -> void {
        if (depth == n) {
            emit(start, at);
            return;
        }
        for (const Monomial& m : rad) {
            if (m.vertex != at) continue;
            chain.push_back(m);
            self(self, start, m.end_vertex(), depth + 1);
            chain.pop_back();
        }
    };
    for (int v = 0; v < kVertices; ++v) rec(rec, v, v, 0);
    return space;
}

// Matrix of the Hochschild differential C^n -> C^{n+1} (rows = C^n basis).
SparseMatrix bar_differential(const Algebra& A, const BarSpace& from, const BarSpace& to, int n) {
    const auto rad = radical_basis(A);

    // factor_pairs[m] lists (u, w, sign) with u*w = sign*m over the radical
    std::map<Monomial, std::vector<std::tuple<Monomial, Monomial, int>>> factor_pairs;
    for (const Monomial& u : rad)
        for (const Monomial& w : rad) {
            auto p = A.multiply_monomials(u, w);
            if (p.sign != 0) factor_pairs[p.mono].emplace_back(u, w, p.sign);
        }

    SparseMatrix M = SparseMatrix::zero(static_cast<int>(from.basis.size()),
                                        static_cast<int>(to.basis.size()));
    for (int r = 0; r < static_cast<int>(from.basis.size()); ++r) {
        const BarCoord& f = from.basis[r];
        auto emit = [&](const BarCoord& target, int sign) {
            M.add(r, to.index.at(target), A.scalar(sign));
        };

        for (const Monomial& rho : rad) {  // prepend
            if (rho.end_vertex() != f.start) continue;
            auto p = A.multiply_monomials(rho, f.value);
            if (p.sign == 0) continue;
            BarCoord t{rho.vertex, {}, p.mono};
            t.chain.reserve(f.chain.size() + 1);
            t.chain.push_back(rho);
            t.chain.insert(t.chain.end(), f.chain.begin(), f.chain.end());
            emit(t, p.sign);
        }
        for (int k = 0; k < n; ++k) {  // contract at slot k
            const int sign_k = (k + 1) % 2 == 0 ? 1 : -1;
            auto it = factor_pairs.find(f.chain[k]);
            if (it == factor_pairs.end()) continue;
            for (const auto& [u, w, s] : it->second) {
                BarCoord t{f.start, {}, f.value};
                t.chain.reserve(f.chain.size() + 1);
                t.chain.insert(t.chain.end(), f.chain.begin(), f.chain.begin() + k);
                t.chain.push_back(u);
                t.chain.push_back(w);
                t.chain.insert(t.chain.end(), f.chain.begin() + k + 1, f.chain.end());
                emit(t, sign_k * s);
            }
        }
        const int sign_last = n % 2 == 0 ? -1 : 1;  // (-1)^{n+1}
        const int tail = f.value.end_vertex();
        for (const Monomial& rho : rad) {  // append
            if (rho.vertex != tail) continue;
            auto p = A.multiply_monomials(f.value, rho);
            if (p.sign == 0) continue;
            BarCoord t{f.start, f.chain, p.mono};
            t.chain.push_back(rho);
            emit(t, sign_last * p.sign);
        }
    }
    return M;
}

void check_budget(const Algebra& A, int n) {
    const bool ok = (A.T() == 0 && n >= 0 && n <= 4) || (A.T() == 1 && n >= 0 && n <= 2);
    if (!ok)
        throw BudgetError("bar_hh_dimension: (T=" + std::to_string(A.T()) +
                          ", n=" + std::to_string(n) + ") is outside the supported window");
}

}  // namespace

long long bar_cochain_dim(const Algebra& A, int n) {
    return static_cast<long long>(bar_space(A, n).basis.size());
}

long long bar_hh_dimension(const Algebra& A, int n) {
    check_budget(A, n);
    const BarSpace cur = bar_space(A, n);
    const BarSpace next = bar_space(A, n + 1);
    const SparseMatrix out = bar_differential(A, cur, next, n);
    const long long ker = static_cast<long long>(cur.basis.size()) - out.rank(A.field());
    if (n == 0) return ker;
    const BarSpace prev = bar_space(A, n - 1);
    const SparseMatrix in = bar_differential(A, prev, cur, n - 1);
    return ker - in.rank(A.field());
}

}  // namespace hhq
