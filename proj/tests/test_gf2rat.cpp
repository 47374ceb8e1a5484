#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "funcid/errors.hpp"
#include "funcid/gf2rat.hpp"
#include "funcid/sampling.hpp"

using funcid::Gf2Poly;
using funcid::Gf2Rat;

namespace {
Gf2Poly P(std::initializer_list<int> exps) { return Gf2Poly::from_exponents(exps); }
}  // namespace

TEST_CASE("construction reduces") {
    // (t^2+t)/(t^3+t^2) = 1/t
    const Gf2Rat x(P({2, 1}), P({3, 2}));
    CHECK(x.num() == Gf2Poly::one());
    CHECK(x.den() == Gf2Poly::t());

    CHECK(Gf2Rat(Gf2Poly::zero(), P({5, 1})) == Gf2Rat::zero());
    CHECK_THROWS_AS(Gf2Rat(Gf2Poly::one(), Gf2Poly::zero()), funcid::DivisionByZero);
}

TEST_CASE("characteristic two") {
    funcid::Sampler rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const Gf2Rat x = rng.rat(8);
        CHECK((x + x).is_zero());
    }
}

TEST_CASE("inverse swaps") {
    const Gf2Rat x(Gf2Poly::t(), P({1, 0}));
    CHECK(x.inv() == Gf2Rat(P({1, 0}), Gf2Poly::t()));
    CHECK_THROWS_AS(Gf2Rat::zero().inv(), funcid::DivisionByZero);
}

TEST_CASE("equality agrees with cross multiplication") {
    funcid::Sampler rng(17);
    for (int trial = 0; trial < 1000; ++trial) {
        const Gf2Rat a = rng.rat(8);
        const Gf2Rat b = rng.rat(8);
        const bool cross = a.num() * b.den() == b.num() * a.den();
        CHECK((a == b) == cross);
    }
}

TEST_CASE("field axioms on sampled triples") {
    funcid::Sampler rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const Gf2Rat x = rng.rat(8);
        const Gf2Rat y = rng.rat(8);
        const Gf2Rat z = rng.rat(8);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK(x * Gf2Rat::one() == x);
        CHECK(x + Gf2Rat::zero() == x);
        if (!x.is_zero()) {
            CHECK(x * x.inv() == Gf2Rat::one());
        }
    }
}

TEST_CASE("powers") {
    const Gf2Rat x(P({1, 0}), Gf2Poly::t());
    CHECK(x.pow(0) == Gf2Rat::one());
    CHECK(x.pow(3) == x * x * x);
    CHECK(x.pow(-2) == (x * x).inv());
    CHECK(funcid::t_power(-3) == Gf2Rat(Gf2Poly::one(), P({3})));
}

TEST_CASE("rendering") {
    CHECK(Gf2Rat(Gf2Poly::one(), Gf2Poly::t()).to_string() == "1/t");
    CHECK(Gf2Rat::zero().to_string() == "0");
    CHECK(Gf2Rat(P({2, 0}), Gf2Poly::t()).to_string() == "(t^2+1)/t");
    CHECK(Gf2Rat(P({3, 1, 0}), P({2, 1})).to_string() == "(t^3+t+1)/(t^2+t)");
}
