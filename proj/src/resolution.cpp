#include "hhq/resolution.hpp"

#include <algorithm>
#include <string>

namespace hhq {

namespace {

bool even_vertex(int i) { return i % 2 == 0; }

// Levels 0..n of the generator recursion; level k holds value[i][j].
std::vector<std::vector<std::vector<FreeElement>>> build_levels(int T, int n, FieldSpec field) {
    std::vector<std::vector<std::vector<FreeElement>>> levels;
    levels.reserve(n + 1);

    std::vector<std::vector<FreeElement>> level0;
    for (int i = 0; i < kVertices; ++i)
        level0.push_back({FreeElement::path(field, FreePath{i, ""})});
    levels.push_back(std::move(level0));

    const int q = 4 * T + 1;
    for (int k = 1; k <= n; ++k) {
        const auto& prev = levels.back();
        std::vector<std::vector<FreeElement>> level;
        for (int i = 0; i < kVertices; ++i) {
            std::vector<FreeElement> row;
            // For odd vertices the roles of the two arrow kinds swap.
            const char a = even_vertex(i) ? 'A' : 'B';
            const char b = even_vertex(i) ? 'B' : 'A';
            if (k % 2 == 1) {
                const int m = (k - 1) / 2;
                for (int j = 0; j <= k; ++j) {
                    if (j == 0)
                        row.push_back(prev[i][0].times_power(a, 1));
                    else if (j <= m)
                        row.push_back(prev[i][j - 1].times_power(b, q) +
                                      prev[i][j].times_power(a, 1));
                    else if (j <= 2 * m)
                        row.push_back(prev[i][j - 1].times_power(b, 1) +
                                      prev[i][j].times_power(a, q));
                    else
                        row.push_back(prev[i][2 * m].times_power(b, 1));
                }
            } else {
                const int m = k / 2;
                for (int j = 0; j <= k; ++j) {
                    if (j == 0)
                        row.push_back(prev[i][0].times_power(b, 1));
                    else if (j <= m - 1)
                        row.push_back(prev[i][j - 1].times_power(a, q) +
                                      prev[i][j].times_power(b, 1));
                    else if (j == m)
                        row.push_back(prev[i][m - 1].times_power(a, q) +
                                      prev[i][m].times_power(b, q));
                    else if (j <= 2 * m - 1)
                        row.push_back(prev[i][j - 1].times_power(a, 1) +
                                      prev[i][j].times_power(b, q));
                    else
                        row.push_back(prev[i][2 * m - 1].times_power(a, 1));
                }
            }
            level.push_back(std::move(row));
        }
        levels.push_back(std::move(level));
    }
    return levels;
}

}  // namespace

std::vector<ResolutionGenerator> generator_set(int T, int n, FieldSpec field) {
    if (n < 0) throw std::invalid_argument("generator_set: negative degree");
    auto levels = build_levels(T, n, field);
    std::vector<ResolutionGenerator> out;
    for (int i = 0; i < kVertices; ++i)
        for (int j = 0; j <= n; ++j) out.push_back({n, i, j, levels[n][i][j]});
    return out;
}

bool generators_linear(int T, int n_max) {
    auto levels = build_levels(T, n_max, FieldSpec::rationals());
    for (int k = 0; k <= n_max; ++k)
        for (int i = 0; i < kVertices; ++i)
            for (const auto& g : levels[k][i])
                for (const auto& [p, c] : g.terms())
                    if (p.length() != k) return false;
    return true;
}

const AlgebraElement* RightDifferential::entry(GenPos source, GenPos target) const {
    auto it = entries.find({source, target});
    return it == entries.end() ? nullptr : &it->second;
}

RightDifferential right_differential(const Algebra& A, int n) {
    if (n < 1) throw std::invalid_argument("right_differential: degree must be >= 1");
    const FieldSpec field = A.field();
    auto levels = build_levels(A.T(), n, field);

    RightDifferential out;
    out.n = n;
    for (int i = 0; i < kVertices; ++i) {
        for (int j = 0; j <= n; ++j) {
            const FreeElement& g = levels[n][i][j];
            // Candidate right factors come from stripping a path of a
            // degree-(n-1) generator (with the same source) off a path of g.
            std::vector<std::pair<int, FreePath>> unknowns;  // (s, suffix)
            std::map<std::pair<int, FreePath>, int> unknown_index;
            for (int s = 0; s <= n - 1; ++s) {
                for (const auto& [p, cp] : levels[n - 1][i][s].terms()) {
                    for (const auto& [w, cw] : g.terms()) {
                        if (w.length() <= p.length()) continue;
                        if (w.letters.compare(0, p.letters.size(), p.letters) != 0) continue;
                        FreePath suffix{p.end_vertex(), w.letters.substr(p.letters.size())};
                        auto key = std::make_pair(s, suffix);
                        if (unknown_index.emplace(key, static_cast<int>(unknowns.size())).second)
                            unknowns.push_back(key);
                    }
                }
            }

            // Equations: one per free path occurring on either side.
            std::map<FreePath, int> row_of;
            auto row_id = [&](const FreePath& p) {
                auto [it, inserted] = row_of.emplace(p, static_cast<int>(row_of.size()));
                return it->second;
            };
            std::vector<std::map<int, Scalar>> cols(unknowns.size());
            for (size_t u = 0; u < unknowns.size(); ++u) {
                const auto& [s, suffix] = unknowns[u];
                for (const auto& [p, cp] : levels[n - 1][i][s].terms()) {
                    FreePath prod{p.start, p.letters + suffix.letters};
                    auto [it, inserted] = cols[u].emplace(row_id(prod), cp);
                    if (!inserted) it->second += cp;
                }
            }
            std::vector<std::pair<int, Scalar>> rhs_terms;
            for (const auto& [w, cw] : g.terms()) rhs_terms.emplace_back(row_id(w), cw);

            SparseMatrix M = SparseMatrix::zero(static_cast<int>(row_of.size()),
                                                static_cast<int>(unknowns.size()));
            for (size_t u = 0; u < unknowns.size(); ++u)
                for (const auto& [r, c] : cols[u]) M.add(r, static_cast<int>(u), c);
            std::vector<Scalar> rhs(row_of.size(), Scalar::zero(field));
            for (const auto& [r, c] : rhs_terms) rhs[r] = c;

            const std::string where = "(T=" + std::to_string(A.T()) + ", n=" + std::to_string(n) +
                                      ", i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
            if (M.rank(field) < static_cast<int>(unknowns.size()))
                throw std::runtime_error("right_differential: factorization not unique at " + where);
            auto sol = solve_linear_system(M, rhs, field);
            if (!sol) throw std::runtime_error("right_differential: factorization failed at " + where);

            std::map<int, FreeElement> factors;
            for (size_t u = 0; u < unknowns.size(); ++u) {
                if ((*sol)[u].is_zero()) continue;
                const auto& [s, suffix] = unknowns[u];
                auto [it, inserted] = factors.emplace(s, FreeElement(field));
                it->second.add_term(suffix, (*sol)[u]);
            }
            for (const auto& [s, fe] : factors) {
                AlgebraElement r = A.normal_form(fe);
                if (!r.is_zero()) out.entries.emplace(std::make_pair(GenPos{i, j}, GenPos{i, s}), r);
            }
        }
    }
    return out;
}

SparseMatrix right_differential_matrix(const Algebra& A, const RightDifferential& dn) {
    const int n = dn.n;
    const int block = A.dim() / kVertices;  // monomials per vertex
    auto gen_index = [](int degree, GenPos g) { return g.i * (degree + 1) + g.j; };
    auto coord = [&](int degree, GenPos g, const Monomial& mono) {
        const int t = vertex_mod(g.i + degree);
        return gen_index(degree, g) * block + (A.basis_index(mono) - t * block);
    };

    SparseMatrix M = SparseMatrix::zero(4 * n * block, 4 * (n + 1) * block);
    for (const auto& [key, factor] : dn.entries) {
        const auto& [src, tgt] = key;
        const int t_src = vertex_mod(src.i + n);
        for (int k = 0; k < block; ++k) {
            const Monomial& mu = A.basis()[t_src * block + k];
            AlgebraElement img = A.multiply(factor, A.element(mu));
            for (const auto& [mono, c] : img.terms())
                M.add(coord(n - 1, tgt, mono), coord(n, src, mu), c);
        }
    }
    return M;
}

RightResolutionReport verify_right_resolution(const Algebra& A, int N) {
    RightResolutionReport rep;
    const int block = A.dim() / kVertices;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.failures.push_back("(T=" + std::to_string(A.T()) + ", " + A.field().str() + ") " + msg);
    };

    std::vector<RightDifferential> diffs;   // d^1..d^N
    std::vector<SparseMatrix> mats;
    for (int n = 1; n <= N; ++n) {
        diffs.push_back(right_differential(A, n));
        mats.push_back(right_differential_matrix(A, diffs.back()));
    }
    for (int n = 0; n <= N; ++n) rep.dims.push_back(4 * (n + 1) * block);
    for (const auto& m : mats) rep.ranks.push_back(m.rank(A.field()));

    for (int n = 1; n <= N - 1; ++n)
        if (!mats[n - 1].multiply(mats[n]).is_zero())
            fail("d^" + std::to_string(n) + " d^" + std::to_string(n + 1) + " != 0");

    for (int n = 1; n <= N - 1; ++n)
        if (rep.dims[n] - rep.ranks[n - 1] != rep.ranks[n])
            fail("not exact at degree " + std::to_string(n));

    if (rep.dims[0] - rep.ranks[0] != kVertices) fail("cokernel of d^1 has wrong dimension");

    for (int n = 1; n <= N; ++n)
        for (const auto& [key, factor] : diffs[n - 1].entries)
            if (factor.min_length() < 1)
                fail("entry of d^" + std::to_string(n) + " outside the radical at generator (" +
                     std::to_string(key.first.i) + "," + std::to_string(key.first.j) + ")");

    return rep;
}

}  // namespace hhq
