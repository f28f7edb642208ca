#include "hhq/bimodule.hpp"

#include <string>

namespace hhq {

void TensorElement::add_term(const Monomial& left, const Monomial& right, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(std::make_pair(left, right), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::string TensorElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [lr, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.str() + "*(" + lr.first.str() + " (x) " + lr.second.str() + ")";
    }
    return s;
}

void BimoduleMap::add_term(GeneratorIndex src, GeneratorIndex tgt, const Monomial& left,
                           const Monomial& right, const Scalar& c) {
    if (c.is_zero()) return;
    auto& row = entries_[src];
    auto it = row.try_emplace(tgt).first;
    it->second.add_term(left, right, c);
    if (it->second.is_zero()) row.erase(it);
    if (row.empty()) entries_.erase(src);
}

const BimoduleMap::Row* BimoduleMap::row(GeneratorIndex src) const {
    auto it = entries_.find(src);
    return it == entries_.end() ? nullptr : &it->second;
}

bool BimoduleMap::is_zero() const {
    for (const auto& [src, row] : entries_)
        for (const auto& [tgt, te] : row)
            if (!te.is_zero()) return false;
    return true;
}

bool BimoduleMap::operator==(const BimoduleMap& o) const {
    if (source_ != o.source_ || target_ != o.target_) return false;
    // rows never hold zero tensor elements, so this is structural equality
    return entries_ == o.entries_;
}

namespace {

using Letter = Monomial::Letter;

Monomial make_mono(int vertex, Letter letter, int exp) {
    if (exp == 0) return Monomial::e(vertex);
    return letter == Letter::X ? Monomial::x(vertex, exp) : Monomial::y(vertex, exp);
}

// One term  coeff * left a^{n-1}_{r,s} right  of the differential at source
// a^n_{i,j}; r is reduced mod 4 and the vertex chain is validated.
void push_term(const Algebra& A, BimoduleMap& map, int n, int i, int j, int coeff, int r, int s,
               Letter left_letter, int left_exp, Letter right_letter, int right_exp) {
    const int rr = vertex_mod(r);
    Monomial left = make_mono(i, left_letter, left_exp);
    Monomial right = make_mono(vertex_mod(rr + n - 1), right_letter, right_exp);
    if (left.end_vertex() != rr || right.end_vertex() != vertex_mod(i + n))
        throw std::logic_error("bimodule_differential: inconsistent vertex chain");
    if (left_exp > (left_letter == Letter::X ? A.max_x_exponent() : A.max_y_exponent()) ||
        right_exp > (right_letter == Letter::X ? A.max_x_exponent() : A.max_y_exponent()))
        throw std::logic_error("bimodule_differential: exponent out of range");
    map.add_term({n, i, j}, {n - 1, rr, s}, left, right, A.scalar(coeff));
}

}  // namespace

BimoduleMap bimodule_differential(const Algebra& A, int n) {
    if (n < 1) throw std::invalid_argument("bimodule_differential: degree must be >= 1");
    const int T = A.T();
    const int q = 4 * T + 1;
    BimoduleMap d(n, n - 1);

    for (int i = 0; i < kVertices; ++i) {
        // At odd vertices the roles of the two arrow kinds swap.
        const Letter a = (i % 2 == 0) ? Letter::X : Letter::Y;
        const Letter b = (i % 2 == 0) ? Letter::Y : Letter::X;
        auto term = [&](int j, int coeff, int r, int s, Letter ll, int le, Letter rl, int re) {
            push_term(A, d, n, i, j, coeff, r, s, ll, le, rl, re);
        };

        if (n % 2 == 1) {
            const int m = (n - 1) / 2;
            for (int j = 0; j <= n; ++j) {
                if (j == 0) {
                    term(j, +1, i, 0, a, 0, a, 1);
                    term(j, -1, i + 1, 0, a, 1, a, 0);
                } else if (j <= m) {
                    term(j, +1, i, j - 1, a, 0, b, q);
                    term(j, +1, i, j, a, 0, a, 1);
                    term(j, -1, i + 1, j, a, 1, a, 0);
                    term(j, -1, i + 1, j - 1, b, q, b, 0);
                } else if (j <= 2 * m) {
                    term(j, +1, i, j - 1, a, 0, b, 1);
                    term(j, +1, i, j, a, 0, a, q);
                    term(j, -1, i + 1, j, a, q, a, 0);
                    term(j, -1, i + 1, j - 1, b, 1, b, 0);
                } else {  // j = 2m+1
                    term(j, +1, i, 2 * m, a, 0, b, 1);
                    term(j, -1, i + 1, 2 * m, b, 1, b, 0);
                }
            }
        } else {
            const int m = n / 2;
            for (int j = 0; j <= n; ++j) {
                if (j == 0) {
                    term(j, +1, i, 0, a, 0, b, 1);
                    term(j, +1, i + 1, 0, a, 1, a, 0);
                } else if (j <= m - 1) {
                    term(j, +1, i, j - 1, a, 0, a, q);
                    term(j, +1, i, j, a, 0, b, 1);
                    term(j, +1, i + 1, j, a, 1, a, 0);
                    term(j, +1, i + 1, j - 1, b, q, b, 0);
                } else if (j == m) {
                    for (int s = 0; s <= T; ++s) {
                        term(j, +1, i, m - 1, a, 4 * s, a, 4 * (T - s) + 1);
                        term(j, +1, i + 1, m, a, 4 * s + 1, a, 4 * (T - s));
                    }
                    for (int s = 0; s <= T - 1; ++s) {
                        term(j, +1, i + 2, m - 1, a, 4 * s + 2, a, 4 * (T - s) - 1);
                        term(j, +1, i + 3, m, a, 4 * s + 3, a, 4 * (T - s) - 2);
                    }
                    for (int s = 0; s <= T; ++s) {
                        term(j, +1, i, m, b, 4 * s, b, 4 * (T - s) + 1);
                        term(j, +1, i + 1, m - 1, b, 4 * s + 1, b, 4 * (T - s));
                    }
                    for (int s = 0; s <= T - 1; ++s) {
                        term(j, +1, i + 2, m, b, 4 * s + 2, b, 4 * (T - s) - 1);
                        term(j, +1, i + 3, m - 1, b, 4 * s + 3, b, 4 * (T - s) - 2);
                    }
                } else if (j <= 2 * m - 1) {
                    term(j, +1, i, j - 1, a, 0, a, 1);
                    term(j, +1, i, j, a, 0, b, q);
                    term(j, +1, i + 1, j, a, q, a, 0);
                    term(j, +1, i + 1, j - 1, b, 1, b, 0);
                } else {  // j = 2m
                    term(j, +1, i, 2 * m - 1, a, 0, a, 1);
                    term(j, +1, i + 1, 2 * m - 1, b, 1, b, 0);
                }
            }
        }
    }
    return d;
}

BimoduleMap compose(const Algebra& A, const BimoduleMap& f, const BimoduleMap& g) {
    if (g.target_degree() != f.source_degree())
        throw std::invalid_argument("compose: degree mismatch");
    BimoduleMap out(g.source_degree(), f.target_degree());
    for (const auto& [src, grow] : g.entries()) {
        for (const auto& [mid, te_g] : grow) {
            const auto* frow = f.row(mid);
            if (!frow) continue;
            for (const auto& [tgt, te_f] : *frow) {
                for (const auto& [lr1, c1] : te_g.terms()) {
                    for (const auto& [lr2, c2] : te_f.terms()) {
                        auto left = A.multiply_monomials(lr1.first, lr2.first);
                        if (left.sign == 0) continue;
                        auto right = A.multiply_monomials(lr2.second, lr1.second);
                        if (right.sign == 0) continue;
                        Scalar c = c1 * c2;
                        if (left.sign * right.sign < 0) c = -c;
                        out.add_term(src, tgt, left.mono, right.mono, c);
                    }
                }
            }
        }
    }
    return out;
}

GeneratorValues multiplication_compose(const Algebra& A, const BimoduleMap& f) {
    if (f.target_degree() != 0)
        throw std::invalid_argument("multiplication_compose: target degree must be 0");
    GeneratorValues out;
    for (const auto& [src, row] : f.entries()) {
        AlgebraElement val = A.zero();
        for (const auto& [tgt, te] : row)
            for (const auto& [lr, c] : te.terms()) {
                auto p = A.multiply_monomials(lr.first, lr.second);
                if (p.sign == 0) continue;
                val.add_term(p.mono, p.sign < 0 ? -c : c);
            }
        if (!val.is_zero()) out.emplace(src, val);
    }
    return out;
}

GeneratorValues compose_values(const Algebra& A, const GeneratorValues& psi, const BimoduleMap& f) {
    GeneratorValues out;
    for (const auto& [src, row] : f.entries()) {
        AlgebraElement val = A.zero();
        for (const auto& [tgt, te] : row) {
            auto it = psi.find(tgt);
            if (it == psi.end()) continue;
            for (const auto& [lr, c] : te.terms())
                val = val + A.multiply(A.element(lr.first, c),
                                       A.multiply(it->second, A.element(lr.second)));
        }
        if (!val.is_zero()) out.emplace(src, val);
    }
    return out;
}

CheckReport verify_complex(const Algebra& A, int N) {
    CheckReport rep;
    const std::string ctx = "(T=" + std::to_string(A.T()) + ", " + A.field().str() + ") ";
    BimoduleMap next = bimodule_differential(A, 1);

    for (const auto& [src, val] : multiplication_compose(A, next))
        if (!val.is_zero()) {
            rep.ok = false;
            rep.failures.push_back(ctx + "multiplication o d^1 != 0 at generator (" +
                                   std::to_string(src.i) + "," + std::to_string(src.j) +
                                   "): " + val.str());
        }

    for (int n = 1; n <= N - 1; ++n) {
        BimoduleMap dn = std::move(next);
        next = bimodule_differential(A, n + 1);
        BimoduleMap comp = compose(A, dn, next);
        if (comp.is_zero()) continue;
        rep.ok = false;
        for (const auto& [src, row] : comp.entries())
            for (const auto& [tgt, te] : row)
                if (!te.is_zero())
                    rep.failures.push_back(ctx + "d^" + std::to_string(n) + " d^" +
                                           std::to_string(n + 1) + " != 0 at generator (" +
                                           std::to_string(src.i) + "," + std::to_string(src.j) +
                                           "): residual " + te.str());
    }
    return rep;
}

CheckReport verify_minimality(int T, int N) {
    CheckReport rep;
    Algebra A(T, FieldSpec::rationals());
    for (int n = 1; n <= N; ++n) {
        BimoduleMap d = bimodule_differential(A, n);
        for (const auto& [src, row] : d.entries())
            for (const auto& [tgt, te] : row)
                for (const auto& [lr, c] : te.terms())
                    if (lr.first.length() == 0 && lr.second.length() == 0) {
                        rep.ok = false;
                        rep.failures.push_back(
                            "(T=" + std::to_string(T) + ") d^" + std::to_string(n) +
                            " has a scalar tensor term at generator (" + std::to_string(src.i) +
                            "," + std::to_string(src.j) + ")");
                    }
    }
    return rep;
}

InducedComparison induced_right_complex(const Algebra& A, int n) {
    InducedComparison cmp;
    cmp.induced.n = n;
    BimoduleMap d = bimodule_differential(A, n);
    for (const auto& [src, row] : d.entries()) {
        for (const auto& [tgt, te] : row) {
            AlgebraElement factor = A.zero();
            for (const auto& [lr, c] : te.terms())
                if (lr.first.length() == 0) factor.add_term(lr.second, c);
            if (!factor.is_zero())
                cmp.induced.entries.emplace(
                    std::make_pair(GenPos{src.i, src.j}, GenPos{tgt.i, tgt.j}), factor);
        }
    }

    RightDifferential ref = right_differential(A, n);
    auto describe = [](const std::pair<GenPos, GenPos>& key) {
        return "(" + std::to_string(key.first.i) + "," + std::to_string(key.first.j) + ") -> (" +
               std::to_string(key.second.i) + "," + std::to_string(key.second.j) + ")";
    };
    for (const auto& [key, val] : cmp.induced.entries) {
        auto it = ref.entries.find(key);
        if (it == ref.entries.end()) {
            cmp.matches = false;
            cmp.mismatches.push_back("induced entry absent from factorization at " + describe(key));
        } else if (!(it->second == val)) {
            cmp.matches = false;
            cmp.mismatches.push_back("entry mismatch at " + describe(key) + ": induced " +
                                     val.str() + " vs factored " + it->second.str());
        }
    }
    for (const auto& [key, val] : ref.entries)
        if (!cmp.induced.entries.count(key)) {
            cmp.matches = false;
            cmp.mismatches.push_back("factorization entry absent from induced map at " +
                                     describe(key));
        }
    return cmp;
}

}  // namespace hhq
