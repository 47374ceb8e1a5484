#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "funcid/errors.hpp"
#include "funcid/matrix.hpp"
#include "funcid/sampling.hpp"

using funcid::BigRational;
using funcid::HuaResult;
using funcid::Quaternion;
using funcid::Ring;
using funcid::RingElem;
using funcid::SquareMatrix;

TEST_CASE("matrix unit product rule") {
    const Ring gf5 = Ring::prime_field(5);
    const auto e00 = SquareMatrix::basis_unit(gf5, 2, 0, 0);
    const auto e01 = SquareMatrix::basis_unit(gf5, 2, 0, 1);
    CHECK(e00 * e01 == e01);
    CHECK((e01 * e00).is_zero());
    CHECK(e00 * e00 == e00);

    const auto id = SquareMatrix::identity(gf5, 2);
    const auto e11 = SquareMatrix::basis_unit(gf5, 2, 1, 1);
    CHECK(e00 + e11 == id);

    funcid::Sampler rng(7);
    const auto x = rng.matrix(gf5, 2, 9);
    CHECK(id * x == x);
    CHECK(x * id == x);

    const Ring gf2 = Ring::prime_field(2);
    const auto u = SquareMatrix::basis_unit(gf2, 2, 0, 1);
    CHECK((u + u).is_zero());

    CHECK_THROWS_AS(SquareMatrix::basis_unit(gf5, 2, 2, 0), funcid::UsageError);
}

TEST_CASE("left and right scaling differ over quaternions") {
    const Ring ring = Ring::quaternions();
    auto x = SquareMatrix(ring, 2);
    x.set(0, 1, Quaternion::j());
    const RingElem i = Quaternion::i();
    auto left = SquareMatrix(ring, 2);
    left.set(0, 1, Quaternion::k());  // i j = k
    auto right = SquareMatrix(ring, 2);
    right.set(0, 1, funcid::neg(RingElem(Quaternion::k())));  // j i = -k
    CHECK(x.scaled_left(i) == left);
    CHECK(x.scaled_right(i) == right);
}

TEST_CASE("every matrix is the sum of its scaled units") {
    const Ring ring = Ring::quaternions();
    funcid::Sampler rng(11);
    const auto x = rng.matrix(ring, 3, 5);
    SquareMatrix sum(ring, 3);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            sum = sum + SquareMatrix::basis_unit(ring, 3, i, j).scaled_left(x.at(i, j));
        }
    }
    CHECK(sum == x);
}

TEST_CASE("inverse fixed cases") {
    SUBCASE("diagonal quaternion matrix inverts entrywise") {
        const Ring ring = Ring::quaternions();
        SquareMatrix x(ring, 2);
        x.set(0, 0, Quaternion::i());
        x.set(1, 1, Quaternion::j());
        const auto xi = x.inverse();
        REQUIRE(xi.has_value());
        SquareMatrix expect(ring, 2);
        expect.set(0, 0, funcid::neg(RingElem(Quaternion::i())));
        expect.set(1, 1, funcid::neg(RingElem(Quaternion::j())));
        CHECK(*xi == expect);
    }
    SUBCASE("1 + a e01 inverts to 1 - a e01") {
        const Ring gf7 = Ring::prime_field(7);
        funcid::Sampler rng(13);
        const RingElem a = rng.nonzero_elem(gf7, 9);
        const auto id = SquareMatrix::identity(gf7, 2);
        const auto x = id + SquareMatrix::basis_unit(gf7, 2, 0, 1).scaled_left(a);
        const auto expect = id - SquareMatrix::basis_unit(gf7, 2, 0, 1).scaled_left(a);
        REQUIRE(x.inverse().has_value());
        CHECK(*x.inverse() == expect);
    }
    SUBCASE("rank one is singular") {
        const Ring gf5 = Ring::prime_field(5);
        CHECK(!SquareMatrix::basis_unit(gf5, 2, 0, 1).inverse().has_value());
        CHECK(!SquareMatrix(gf5, 3).inverse().has_value());
    }
}

TEST_CASE("inverse on random invertible matrices") {
    funcid::Sampler rng(17);
    const std::vector<Ring> rings = {Ring::prime_field(5), Ring::prime_field(7),
                                     Ring::rationals(), Ring::quaternions()};
    for (const Ring& ring : rings) {
        CAPTURE(ring.to_string());
        for (int m = 1; m <= 3; ++m) {
            const int trials = 70;  // 210 per ring across m = 1..3
            for (int trial = 0; trial < trials; ++trial) {
                const auto x = rng.invertible_matrix(ring, m, 5);
                const auto xi = x.inverse();
                REQUIRE(xi.has_value());
                CHECK((x * *xi).is_identity());
                CHECK((*xi * x).is_identity());
            }
        }
    }
}

TEST_CASE("Hua identity fixed cases") {
    SUBCASE("rational scalars a=2, b=3") {
        const Ring ring = Ring::rationals();
        SquareMatrix a(ring, 1), b(ring, 1);
        a.set(0, 0, BigRational(2));
        b.set(0, 0, BigRational(3));
        const auto result = funcid::hua_check(a, b);
        REQUIRE(result.ok());
        CHECK(result.residual->is_zero());
    }
    SUBCASE("quaternions a=i, b=j") {
        const Ring ring = Ring::quaternions();
        SquareMatrix a(ring, 1), b(ring, 1);
        a.set(0, 0, Quaternion::i());
        b.set(0, 0, Quaternion::j());
        const auto result = funcid::hua_check(a, b);
        REQUIRE(result.ok());
        CHECK(result.residual->is_zero());
    }
    SUBCASE("precondition reporting") {
        const Ring ring = Ring::rationals();
        SquareMatrix zero(ring, 1), b(ring, 1), one(ring, 1);
        b.set(0, 0, BigRational(3));
        one.set(0, 0, BigRational(1));
        CHECK(funcid::hua_check(zero, b).status == HuaResult::Status::a_not_invertible);
        CHECK(funcid::hua_check(b, zero).status == HuaResult::Status::b_not_invertible);
        // ab = 1 makes b^-1 - a vanish.
        SquareMatrix third(ring, 1);
        third.set(0, 0, BigRational(1, 3));
        CHECK(funcid::hua_check(third, b).status == HuaResult::Status::difference_not_invertible);
    }
}

TEST_CASE("Hua identity holds on sampled pairs") {
    funcid::Sampler rng(19);
    const std::vector<Ring> rings = {Ring::rationals(), Ring::quaternions(),
                                     Ring::prime_field(5)};
    for (const Ring& ring : rings) {
        CAPTURE(ring.to_string());
        for (int m = 1; m <= 2; ++m) {
            int checked = 0;
            while (checked < 40) {
                const auto a = rng.matrix(ring, m, 5);
                const auto b = rng.matrix(ring, m, 5);
                const auto result = funcid::hua_check(a, b);
                if (!result.ok()) continue;
                CHECK(result.residual->is_zero());
                ++checked;
            }
        }
    }
}

TEST_CASE("idempotent reflection fixed cases") {
    const Ring gf5 = Ring::prime_field(5);
    SUBCASE("e00 over GF(5), m=2") {
        const auto r = funcid::idempotent_reflection(SquareMatrix::basis_unit(gf5, 2, 0, 0));
        SquareMatrix expect(gf5, 2);
        expect.set(0, 0, gf5.from_int(-1));
        expect.set(1, 1, gf5.one());
        CHECK(r == expect);
        CHECK((r * r).is_identity());
    }
    SUBCASE("zero and identity") {
        CHECK(funcid::idempotent_reflection(SquareMatrix(gf5, 2)).is_identity());
        const auto id = SquareMatrix::identity(gf5, 2);
        CHECK(funcid::idempotent_reflection(id) == id.negated());
    }
    SUBCASE("non-idempotent input is rejected") {
        CHECK_THROWS_AS(funcid::idempotent_reflection(SquareMatrix::basis_unit(gf5, 2, 0, 1)),
                        funcid::PreconditionError);
    }
}

TEST_CASE("reflection squares to identity on conjugated idempotents") {
    funcid::Sampler rng(23);
    for (const Ring& ring : {Ring::prime_field(5), Ring::prime_field(7)}) {
        for (int m = 2; m <= 3; ++m) {
            for (int trial = 0; trial < 25; ++trial) {
                const auto x = rng.idempotent(ring, m, 9);
                REQUIRE(x * x == x);
                const auto r = funcid::idempotent_reflection(x);
                CHECK((r * r).is_identity());
            }
        }
    }
}

TEST_CASE("shape and ring mismatches") {
    const Ring gf5 = Ring::prime_field(5);
    const Ring gf7 = Ring::prime_field(7);
    const SquareMatrix a(gf5, 2);
    const SquareMatrix b(gf5, 3);
    const SquareMatrix c(gf7, 2);
    CHECK_THROWS_AS(a + b, funcid::UsageError);
    CHECK_THROWS_AS(a * c, funcid::UsageError);
    SquareMatrix d(gf5, 2);
    CHECK_THROWS_AS(d.set(0, 0, gf7.one()), funcid::UsageError);
}
