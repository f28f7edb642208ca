#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hhq/resolution.hpp"

using namespace hhq;

namespace {
const FieldSpec Q = FieldSpec::rationals();

FreeElement paths(FieldSpec f, std::initializer_list<FreePath> ps) {
    FreeElement e(f);
    for (const auto& p : ps) e.add_term(p, Scalar::one(f));
    return e;
}
}  // namespace

TEST_CASE("degree 0 and 1 generator sets") {
    for (int T : {0, 2}) {
        auto g0 = generator_set(T, 0, Q);
        REQUIRE(g0.size() == 4);
        for (int i = 0; i < 4; ++i) CHECK(g0[i].value == paths(Q, {FreePath{i, ""}}));

        auto g1 = generator_set(T, 1, Q);
        REQUIRE(g1.size() == 8);
        // at even vertices j=0 is the a-arrow and j=1 the b-arrow; odd vertices swap
        CHECK(g1[0].value == paths(Q, {FreePath{0, "A"}}));
        CHECK(g1[1].value == paths(Q, {FreePath{0, "B"}}));
        CHECK(g1[2].value == paths(Q, {FreePath{1, "B"}}));
        CHECK(g1[3].value == paths(Q, {FreePath{1, "A"}}));
    }
}

TEST_CASE("degree 2 generators recover the relations") {
    SUBCASE("T = 0") {
        auto g2 = generator_set(0, 2, Q);
        REQUIRE(g2.size() == 12);
        CHECK(g2[0].value == paths(Q, {FreePath{0, "AB"}}));                  // e_0 xy
        CHECK(g2[1].value == paths(Q, {FreePath{0, "AA"}, FreePath{0, "BB"}}));  // x^2+y^2
        CHECK(g2[2].value == paths(Q, {FreePath{0, "BA"}}));                  // e_0 yx
    }
    SUBCASE("T = 1") {
        auto g2 = generator_set(1, 2, Q);
        CHECK(g2[1].value == paths(Q, {FreePath{0, "AAAAAA"}, FreePath{0, "BBBBBB"}}));
    }
}

TEST_CASE("generator counts, uniformity, coefficient one") {
    for (int T : {0, 1, 3})
        for (int n = 0; n <= 8; ++n) {
            auto gs = generator_set(T, n, Q);
            CHECK(static_cast<int>(gs.size()) == 4 * (n + 1));
            for (const auto& g : gs) {
                CHECK(!g.value.is_zero());
                for (const auto& [p, c] : g.value.terms()) {
                    CHECK(p.start == g.i);
                    CHECK(p.end_vertex() == vertex_mod(g.i + g.n));
                    CHECK(c == Scalar::one(Q));
                }
            }
        }
}

TEST_CASE("linearity of the degree-n generators") {
    CHECK(generators_linear(0, 10));
    CHECK(!generators_linear(1, 2));  // degree 2 mixes lengths 2 and 6
    CHECK(generators_linear(1, 1));
}

TEST_CASE("right differential entries") {
    SUBCASE("degree 1 rows are single arrows") {
        Algebra A(0, Q);
        auto d1 = right_differential(A, 1);
        const auto* r = d1.entry(GenPos{0, 0}, GenPos{0, 0});
        REQUIRE(r != nullptr);
        CHECK(*r == A.element(Monomial::x(0, 1)));
    }
    SUBCASE("degree 2 row of the mixed generator") {
        Algebra A(0, Q);
        auto d2 = right_differential(A, 2);
        const auto* rx = d2.entry(GenPos{0, 1}, GenPos{0, 0});
        const auto* ry = d2.entry(GenPos{0, 1}, GenPos{0, 1});
        REQUIRE(rx != nullptr);
        REQUIRE(ry != nullptr);
        CHECK(*rx == A.element(Monomial::x(1, 1)));
        CHECK(*ry == A.element(Monomial::y(1, 1)));
        // e_0 xy = (e_0 x) * y: single entry at column (0,0)
        const auto* r0 = d2.entry(GenPos{0, 0}, GenPos{0, 0});
        REQUIRE(r0 != nullptr);
        CHECK(*r0 == A.element(Monomial::y(1, 1)));
        CHECK(d2.entry(GenPos{0, 0}, GenPos{0, 1}) == nullptr);
    }
    SUBCASE("degree 2, T = 1: the long factors appear") {
        Algebra A(1, Q);
        auto d2 = right_differential(A, 2);
        const auto* rx = d2.entry(GenPos{0, 1}, GenPos{0, 0});
        REQUIRE(rx != nullptr);
        CHECK(*rx == A.element(Monomial::x(1, 5)));
    }
}

TEST_CASE("rank of d^1") {
    Algebra A(0, Q);
    auto rep = verify_right_resolution(A, 4);
    CHECK(rep.ok);
    CHECK(rep.dims[0] == 16);
    CHECK(rep.ranks[0] == 12);  // cokernel = A/rad of dimension 4
}

TEST_CASE("right resolution checks pass") {
    SUBCASE("T=0 over Q up to degree 8") {
        auto rep = verify_right_resolution(Algebra(0, Q), 8);
        CHECK(rep.ok);
        CHECK(rep.failures.empty());
    }
    SUBCASE("T=1 over F3 up to degree 6") {
        auto rep = verify_right_resolution(Algebra(1, FieldSpec::prime(3)), 6);
        CHECK(rep.ok);
        CHECK(rep.failures.empty());
    }
}
