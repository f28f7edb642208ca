#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hhq/linalg.hpp"

using namespace hhq;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime(5);

SparseVec vec(FieldSpec f, std::initializer_list<std::pair<int, long long>> entries) {
    SparseVec v;
    for (const auto& [c, val] : entries) v.emplace_back(c, Scalar::of_int(val, f));
    return v;
}
}  // namespace

TEST_CASE("sparse axpy collects and drops zeros") {
    auto a = vec(Q, {{0, 1}, {2, 3}});
    auto b = vec(Q, {{0, 1}, {1, 2}, {2, -3}});
    auto r = sparse_axpy(a, Scalar::one(Q), b);
    CHECK(r == vec(Q, {{0, 2}, {1, 2}}));
    CHECK(sparse_axpy(a, Scalar::zero(Q), b) == a);
}

TEST_CASE("echelon rank and membership") {
    Echelon e(Q);
    CHECK(e.insert(vec(Q, {{0, 1}, {1, 1}})));
    CHECK(e.insert(vec(Q, {{1, 2}})));
    CHECK(!e.insert(vec(Q, {{0, 3}, {1, 5}})));  // dependent on the first two
    CHECK(e.rank() == 2);
    CHECK(e.contains(vec(Q, {{0, 7}, {1, -7}})));
    CHECK(!e.contains(vec(Q, {{2, 1}})));
}

TEST_CASE("solve: unique, underdetermined, inconsistent") {
    SUBCASE("unique") {
        SparseMatrix M = SparseMatrix::zero(2, 2);
        M.set(0, 0, Scalar::of_int(2, Q));
        M.set(0, 1, Scalar::of_int(1, Q));
        M.set(1, 1, Scalar::of_int(3, Q));
        auto x = solve_linear_system(M, {Scalar::of_int(5, Q), Scalar::of_int(9, Q)}, Q);
        REQUIRE(x.has_value());
        CHECK((*x)[0] == Scalar::of_int(1, Q));
        CHECK((*x)[1] == Scalar::of_int(3, Q));
    }
    SUBCASE("free variables default to zero") {
        SparseMatrix M = SparseMatrix::zero(1, 3);
        M.set(0, 1, Scalar::one(Q));
        auto x = solve_linear_system(M, {Scalar::of_int(4, Q)}, Q);
        REQUIRE(x.has_value());
        CHECK((*x)[0].is_zero());
        CHECK((*x)[1] == Scalar::of_int(4, Q));
        CHECK((*x)[2].is_zero());
    }
    SUBCASE("inconsistent") {
        SparseMatrix M = SparseMatrix::zero(2, 1);
        M.set(0, 0, Scalar::one(Q));
        M.set(1, 0, Scalar::one(Q));
        CHECK(!solve_linear_system(M, {Scalar::one(Q), Scalar::of_int(2, Q)}, Q).has_value());
    }
}

TEST_CASE("randomized rank-nullity and solve round trips") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> dim(1, 8), entry(-3, 3);
    for (FieldSpec f : {Q, F5}) {
        for (int trial = 0; trial < 60; ++trial) {
            const int rows = dim(rng), cols = dim(rng);
            SparseMatrix M = SparseMatrix::zero(rows, cols);
            for (int r = 0; r < rows; ++r)
                for (int c = 0; c < cols; ++c) M.add(r, c, Scalar::of_int(entry(rng), f));

            auto kernel = left_nullspace(M, f);
            CHECK(M.rank(f) + static_cast<int>(kernel.size()) == rows);
            for (const auto& v : kernel) CHECK(M.apply_row(v).empty());

            // a right-hand side built from a known solution is always solvable
            std::vector<Scalar> x0;
            for (int c = 0; c < cols; ++c) x0.push_back(Scalar::of_int(entry(rng), f));
            std::vector<Scalar> b(rows, Scalar::zero(f));
            for (int r = 0; r < rows; ++r)
                for (const auto& [c, v] : M.row(r)) b[r] += v * x0[c];
            auto x = solve_linear_system(M, b, f);
            REQUIRE(x.has_value());
            for (int r = 0; r < rows; ++r) {
                Scalar acc = Scalar::zero(f);
                for (const auto& [c, v] : M.row(r)) acc += v * (*x)[c];
                CHECK(acc == b[r]);
            }
        }
    }
}

TEST_CASE("matrix product, transposed-composition shapes") {
    SparseMatrix A = SparseMatrix::zero(2, 3);
    A.set(0, 0, Scalar::one(Q));
    A.set(1, 2, Scalar::of_int(2, Q));
    SparseMatrix B = SparseMatrix::zero(3, 2);
    B.set(0, 1, Scalar::of_int(3, Q));
    B.set(2, 0, Scalar::of_int(-1, Q));
    SparseMatrix C = A.multiply(B);
    CHECK(C.rows == 2);
    CHECK(C.cols == 2);
    CHECK(C.row(0) == vec(Q, {{1, 3}}));
    CHECK(C.row(1) == vec(Q, {{0, -2}}));
}
