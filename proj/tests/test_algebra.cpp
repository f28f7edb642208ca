#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hhq/algebra.hpp"

using namespace hhq;

namespace {
FreePath word(int start, const std::string& letters) { return FreePath{start, letters}; }
}

TEST_CASE("basis size is 16(2T+1)") {
    CHECK(Algebra(0, FieldSpec::rationals()).dim() == 16);
    CHECK(Algebra(1, FieldSpec::prime(3)).dim() == 48);
    CHECK(Algebra(2, FieldSpec::rationals()).dim() == 80);
    for (int T = 0; T <= 4; ++T)
        for (long long p : {0LL, 2LL, 3LL, 5LL}) {
            FieldSpec f = p == 0 ? FieldSpec::rationals() : FieldSpec::prime(p);
            CHECK(Algebra(T, f).dim() == 16 * (2 * T + 1));
        }
}

TEST_CASE("basis ordering is (vertex, E<X<Y, exponent)") {
    Algebra A(1, FieldSpec::rationals());
    const auto& b = A.basis();
    CHECK(b[0] == Monomial::e(0));
    CHECK(b[1] == Monomial::x(0, 1));
    CHECK(b[6] == Monomial::x(0, 6));  // 4T+2 = 6
    CHECK(b[7] == Monomial::y(0, 1));
    CHECK(b[11] == Monomial::y(0, 5));  // 4T+1 = 5
    CHECK(b[12] == Monomial::e(1));
}

TEST_CASE("normal form of free paths") {
    Algebra A(0, FieldSpec::rationals());

    // a_0 b_1 contains a mixed step, so it dies.
    CHECK(A.normal_form(FreeElement::path(A.field(), word(0, "AB"))).is_zero());

    // a pure arrow is already normal
    CHECK(A.normal_form(FreeElement::path(A.field(), word(0, "A"))) ==
          A.element(Monomial::x(0, 1)));

    // b-run of length 4T+2 rewrites to -x^{4T+2}
    CHECK(A.normal_form(FreeElement::path(A.field(), word(0, "BB"))) ==
          A.element(Monomial::x(0, 2), A.scalar(-1)));

    // too-long runs vanish
    CHECK(A.normal_form(FreeElement::path(A.field(), word(0, "AAA"))).is_zero());
    CHECK(A.normal_form(FreeElement::path(A.field(), word(0, "BBB"))).is_zero());

    Algebra A1(1, FieldSpec::prime(3));
    CHECK(A1.normal_form(FreeElement::path(A1.field(), word(2, "BBBBBB"))) ==
          A1.element(Monomial::x(2, 6), A1.scalar(-1)));
    CHECK(A1.normal_form(FreeElement::path(A1.field(), word(2, "BBBBB"))) ==
          A1.element(Monomial::y(2, 5)));
}

TEST_CASE("normal form is idempotent through the embedding") {
    std::mt19937 rng(77);
    for (int T : {0, 1, 2}) {
        Algebra A(T, FieldSpec::prime(5));
        std::uniform_int_distribution<int> pick(0, A.dim() - 1), coeff(1, 4);
        for (int trial = 0; trial < 30; ++trial) {
            AlgebraElement e = A.zero();
            for (int k = 0; k < 4; ++k)
                e.add_term(A.basis()[pick(rng)], A.scalar(coeff(rng)));
            CHECK(A.normal_form(A.embed(e)) == e);
        }
    }
}

TEST_CASE("multiplication examples") {
    Algebra A(0, FieldSpec::rationals());
    auto x0 = A.element(Monomial::x(0, 1));
    auto x1 = A.element(Monomial::x(1, 1));
    auto y1 = A.element(Monomial::y(1, 1));
    auto y0 = A.element(Monomial::y(0, 1));
    CHECK(A.multiply(x0, x1) == A.element(Monomial::x(0, 2)));
    CHECK(A.multiply(x0, y1).is_zero());
    CHECK(A.multiply(y0, y1) == A.element(Monomial::x(0, 2), A.scalar(-1)));
    // composability: vertices must match
    CHECK(A.multiply(x0, A.element(Monomial::x(2, 1))).is_zero());
}

TEST_CASE("context mismatch is rejected") {
    Algebra A(0, FieldSpec::rationals());
    Algebra B(1, FieldSpec::rationals());
    CHECK_THROWS_AS(A.multiply(A.identity(), B.identity()), std::invalid_argument);
    FreeElement over_f3(FieldSpec::prime(3));
    CHECK_THROWS_AS(A.normal_form(over_f3), std::invalid_argument);
}

TEST_CASE("associativity on random basis triples") {
    std::mt19937 rng(20240811);
    for (int T = 0; T <= 3; ++T) {
        Algebra A(T, FieldSpec::rationals());
        std::uniform_int_distribution<int> pick(0, A.dim() - 1);
        for (int trial = 0; trial < 120; ++trial) {
            auto a = A.element(A.basis()[pick(rng)]);
            auto b = A.element(A.basis()[pick(rng)]);
            auto c = A.element(A.basis()[pick(rng)]);
            CHECK(A.multiply(A.multiply(a, b), c) == A.multiply(a, A.multiply(b, c)));
        }
    }
}

TEST_CASE("socle behaviour") {
    for (int T : {0, 1, 2}) {
        Algebra A(T, FieldSpec::rationals());
        const int top = A.max_x_exponent();
        for (int i = 0; i < kVertices; ++i)
            for (int j = 1; j < top; ++j) {
                auto left = A.element(Monomial::x(i, j));
                auto right = A.element(Monomial::x(vertex_mod(i + j), top - j));
                CHECK(A.multiply(left, right) == A.element(Monomial::x(i, top)));
            }
        auto socle = A.element(Monomial::x(0, top));
        auto arrow_a = A.element(Monomial::x(vertex_mod(0 + top), 1));
        auto arrow_b = A.element(Monomial::y(vertex_mod(0 + top), 1));
        CHECK(A.multiply(socle, arrow_a).is_zero());
        CHECK(A.multiply(socle, arrow_b).is_zero());
    }
}

TEST_CASE("centre of A_T") {
    SUBCASE("T = 0: scalars only") {
        auto rep = compute_center(Algebra(0, FieldSpec::rationals()));
        CHECK(rep.dimension == 1);
        CHECK(rep.presentation_ok);
        CHECK(rep.failures.empty());
    }
    SUBCASE("T = 1: dimension 3, X^2 = XY = Y^2 = 0") {
        Algebra A(1, FieldSpec::rationals());
        auto rep = compute_center(A);
        CHECK(rep.dimension == 3);
        CHECK(rep.presentation_ok);
        CHECK(rep.failures.empty());
        AlgebraElement X = A.zero(), Y = A.zero();
        for (int v = 0; v < kVertices; ++v) {
            X.add_term(Monomial::x(v, 4), A.scalar(1));
            Y.add_term(Monomial::y(v, 4), A.scalar(1));
        }
        CHECK(A.multiply(X, X).is_zero());
        CHECK(A.multiply(X, Y).is_zero());
        CHECK(A.multiply(Y, Y).is_zero());
    }
    SUBCASE("identity is central, dimension is 2T+1") {
        for (int T = 0; T <= 3; ++T)
            for (long long p : {0LL, 3LL}) {
                FieldSpec f = p == 0 ? FieldSpec::rationals() : FieldSpec::prime(p);
                Algebra A(T, f);
                auto rep = compute_center(A);
                CHECK(rep.dimension == 2 * T + 1);
                CHECK(rep.presentation_ok);
                for (const Monomial& m : A.basis()) {
                    auto a = A.element(m);
                    CHECK(A.multiply(A.identity(), a) == A.multiply(a, A.identity()));
                }
            }
    }
}
