#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hhq/bimodule.hpp"

using namespace hhq;

namespace {
const FieldSpec Q = FieldSpec::rationals();

TensorElement te(const Algebra& A, std::initializer_list<std::tuple<int, Monomial, Monomial>> ts) {
    TensorElement out;
    for (const auto& [c, l, r] : ts) out.add_term(l, r, A.scalar(c));
    return out;
}
}  // namespace

TEST_CASE("first differential") {
    Algebra A(0, Q);
    auto d1 = bimodule_differential(A, 1);
    const auto* row = d1.row({1, 0, 0});
    REQUIRE(row != nullptr);
    // a^0_{0,0} x - x a^0_{1,0}
    CHECK(row->at({0, 0, 0}) == te(A, {{1, Monomial::e(0), Monomial::x(0, 1)}}));
    CHECK(row->at({0, 1, 0}) == te(A, {{-1, Monomial::x(0, 1), Monomial::e(1)}}));
    CHECK(row->size() == 2);
}

TEST_CASE("second differential, boundary and middle rows") {
    Algebra A(0, Q);
    auto d2 = bimodule_differential(A, 2);

    // a^2_{0,0} -> a^1_{0,0} y + x a^1_{1,0}
    const auto* row0 = d2.row({2, 0, 0});
    REQUIRE(row0 != nullptr);
    CHECK(row0->at({1, 0, 0}) == te(A, {{1, Monomial::e(0), Monomial::y(1, 1)}}));
    CHECK(row0->at({1, 1, 0}) == te(A, {{1, Monomial::x(0, 1), Monomial::e(2)}}));

    // T=0 middle case collapses to the s=0 terms of all four blocks:
    // a^1_{0,0} x + x a^1_{1,1} + a^1_{0,1} y + y a^1_{1,0}
    const auto* row1 = d2.row({2, 0, 1});
    REQUIRE(row1 != nullptr);
    CHECK(row1->at({1, 0, 0}) == te(A, {{1, Monomial::e(0), Monomial::x(1, 1)}}));
    CHECK(row1->at({1, 1, 1}) == te(A, {{1, Monomial::x(0, 1), Monomial::e(2)}}));
    CHECK(row1->at({1, 0, 1}) == te(A, {{1, Monomial::e(0), Monomial::y(1, 1)}}));
    CHECK(row1->at({1, 1, 0}) == te(A, {{1, Monomial::y(0, 1), Monomial::e(2)}}));
    CHECK(row1->size() == 4);
}

TEST_CASE("middle case keeps all summation blocks for T = 1") {
    Algebra A(1, Q);
    auto d2 = bimodule_differential(A, 2);
    const auto* row = d2.row({2, 0, 1});
    REQUIRE(row != nullptr);
    // x-blocks: s = 0, 1 into column (0,0), plus the shifted block into (2,0)
    CHECK(row->at({1, 0, 0}) == te(A, {{1, Monomial::e(0), Monomial::x(1, 5)},
                                       {1, Monomial::x(0, 4), Monomial::x(1, 1)}}));
    CHECK(row->at({1, 2, 0}) == te(A, {{1, Monomial::x(0, 2), Monomial::x(3, 3)}}));
    CHECK(row->at({1, 3, 1}) == te(A, {{1, Monomial::x(0, 3), Monomial::x(0, 2)}}));
    // y-blocks land in columns (0,1), (1,0), (2,1), (3,0)
    CHECK(row->at({1, 0, 1}) == te(A, {{1, Monomial::e(0), Monomial::y(1, 5)},
                                       {1, Monomial::y(0, 4), Monomial::y(1, 1)}}));
}

TEST_CASE("generator count per degree") {
    Algebra A(2, Q);
    for (int n = 1; n <= 8; ++n) {
        auto d = bimodule_differential(A, n);
        CHECK(static_cast<int>(d.entries().size()) == 4 * (n + 1));  // every generator has a row
    }
}

TEST_CASE("complex property") {
    SUBCASE("multiplication composed with d^1") {
        Algebra A(0, Q);
        auto vals = multiplication_compose(A, bimodule_differential(A, 1));
        CHECK(vals.empty());  // e_0 x - x e_1 = 0 in A_T, and likewise everywhere
    }
    SUBCASE("T=0 over Q, twelve degrees") {
        auto rep = verify_complex(Algebra(0, Q), 12);
        CHECK(rep.ok);
        CHECK(rep.failures.empty());
    }
    SUBCASE("T=2 over F5, eight degrees") {
        auto rep = verify_complex(Algebra(2, FieldSpec::prime(5)), 8);
        CHECK(rep.ok);
    }
    SUBCASE("T=1 over F2, signs collapse but the complex survives") {
        auto rep = verify_complex(Algebra(1, FieldSpec::prime(2)), 8);
        CHECK(rep.ok);
    }
}

TEST_CASE("minimality of the differentials") {
    for (int T = 0; T <= 3; ++T) {
        auto rep = verify_minimality(T, 12);
        CHECK(rep.ok);
        CHECK(rep.failures.empty());
    }
}

TEST_CASE("induced right complex equals the factorization differential") {
    SUBCASE("degree 1") {
        Algebra A(0, Q);
        auto cmp = induced_right_complex(A, 1);
        CHECK(cmp.matches);
        const auto* e = cmp.induced.entry(GenPos{0, 0}, GenPos{0, 0});
        REQUIRE(e != nullptr);
        CHECK(*e == A.element(Monomial::x(0, 1)));
    }
    SUBCASE("T=0 degree 2") {
        Algebra A(0, Q);
        CHECK(induced_right_complex(A, 2).matches);
    }
    SUBCASE("T=1 degree 5") {
        Algebra A(1, Q);
        auto cmp = induced_right_complex(A, 5);
        if (!cmp.matches)
            for (const auto& m : cmp.mismatches) MESSAGE(m);
        CHECK(cmp.matches);
    }
    SUBCASE("T <= 3, degrees <= 11") {
        for (int T = 0; T <= 3; ++T) {
            Algebra A(T, Q);
            for (int n = 1; n <= 11; ++n) {
                auto cmp = induced_right_complex(A, n);
                if (!cmp.matches) {
                    MESSAGE("T=" << T << " n=" << n);
                    for (const auto& m : cmp.mismatches) MESSAGE(m);
                }
                CHECK(cmp.matches);
            }
        }
    }
}
