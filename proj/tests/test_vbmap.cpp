#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "funcid/errors.hpp"
#include "funcid/sampling.hpp"
#include "funcid/vbmap.hpp"

using funcid::decompose;
using funcid::eval_f;
using funcid::eval_f_on;
using funcid::eval_f_oracle;
using funcid::Gf2Poly;
using funcid::Gf2Rat;
using funcid::identity_residual;
using funcid::t_power;
using funcid::VbParams;

namespace {

Gf2Poly P(std::initializer_list<int> exps) { return Gf2Poly::from_exponents(exps); }

VbParams random_params(funcid::Sampler& rng) { return {rng.rat(4), rng.rat(4)}; }

}  // namespace

TEST_CASE("decompose fixed points") {
    SUBCASE("1") {
        const auto d = decompose(Gf2Rat::one());
        CHECK(d.P == Gf2Poly::one());
        CHECK(d.Q.is_zero());
        CHECK(d.R == Gf2Poly::one());
        CHECK(d.S.is_zero());
    }
    SUBCASE("t") {
        const auto d = decompose(Gf2Rat::t());
        CHECK(d.P.is_zero());
        CHECK(d.Q == Gf2Poly::one());
        CHECK(d.R == Gf2Poly::one());
        CHECK(d.S.is_zero());
    }
    SUBCASE("1/t") {
        const auto d = decompose(t_power(-1));
        CHECK(d.P == Gf2Poly::one());
        CHECK(d.Q.is_zero());
        CHECK(d.R.is_zero());
        CHECK(d.S == Gf2Poly::one());
    }
    SUBCASE("0") {
        const auto d = decompose(Gf2Rat::zero());
        CHECK(d.P.is_zero());
        CHECK(d.Q.is_zero());
        CHECK(d.R == Gf2Poly::one());
        CHECK(d.S.is_zero());
    }
}

TEST_CASE("decomposition reconstructs its source") {
    funcid::Sampler rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const Gf2Rat x = rng.rat(8);
        const auto d = decompose(x);
        const Gf2Rat back(funcid::recompose(d.P, d.Q), funcid::recompose(d.R, d.S));
        CHECK(back == x);
    }
}

TEST_CASE("value anchors") {
    funcid::Sampler rng(43);
    const VbParams params = random_params(rng);
    const auto& [A, B] = params;

    CHECK(eval_f(params, Gf2Rat::one()) == A);
    CHECK(eval_f(params, Gf2Rat::t()) == B);
    CHECK(eval_f(params, t_power(2)) == Gf2Rat::t() * A);
    CHECK(eval_f(params, t_power(-1)) == t_power(-1) * B);
    // (t^2+1) t^2 -> (t^2+t) A
    CHECK(eval_f(params, Gf2Rat(P({2, 0}) * P({2}))) == Gf2Rat(P({2, 1})) * A);
    CHECK(eval_f(params, Gf2Rat(P({1, 0}))) == A + B);
    CHECK(eval_f(params, Gf2Rat::zero()).is_zero());
}

TEST_CASE("anchor lattice over negative and positive powers") {
    funcid::Sampler rng(47);
    const VbParams params = random_params(rng);
    for (int n = -8; n <= 8; ++n) {
        CHECK(eval_f(params, t_power(2 * n)) == t_power(n) * params.A);
        CHECK(eval_f(params, t_power(2 * n + 1)) == t_power(n) * params.B);
        CHECK(eval_f(params, t_power(n + 2)) == Gf2Rat::t() * eval_f(params, t_power(n)));
    }
}

TEST_CASE("additivity") {
    funcid::Sampler rng(53);
    const VbParams params = random_params(rng);
    for (int trial = 0; trial < 300; ++trial) {
        const Gf2Rat x = rng.rat(8);
        const Gf2Rat y = rng.rat(8);
        CHECK(eval_f(params, x + y) == eval_f(params, x) + eval_f(params, y));
    }
}

TEST_CASE("defining identity residual vanishes") {
    funcid::Sampler rng(59);
    const VbParams params = random_params(rng);

    CHECK(identity_residual(params, Gf2Rat::t()).is_zero());
    CHECK(identity_residual(params, Gf2Rat::one()).is_zero());
    CHECK(identity_residual(params, Gf2Rat(P({2, 1, 0}), P({3, 0}))).is_zero());
    for (int trial = 0; trial < 300; ++trial) {
        CHECK(identity_residual(params, rng.nonzero_rat(8)).is_zero());
    }
    CHECK_THROWS_AS(identity_residual(params, Gf2Rat::zero()), std::domain_error);
}

TEST_CASE("semi-multiplicativity f(axa) = a f(x)") {
    funcid::Sampler rng(61);
    const VbParams params = random_params(rng);
    for (int trial = 0; trial < 200; ++trial) {
        const Gf2Rat a = rng.rat(6);
        const Gf2Rat x = rng.rat(6);
        CHECK(eval_f(params, a * x * a) == a * eval_f(params, x));
    }
}

TEST_CASE("oracle equivalence") {
    funcid::Sampler rng(67);
    const VbParams params = random_params(rng);

    CHECK(eval_f_oracle(params, Gf2Rat::one()) == params.A);
    CHECK(eval_f_oracle(params, Gf2Rat::zero()).is_zero());
    for (int trial = 0; trial < 300; ++trial) {
        const Gf2Rat x = rng.rat(8);
        CHECK(eval_f_oracle(params, x) == eval_f(params, x));
    }
}

TEST_CASE("well-definedness on unreduced representations") {
    funcid::Sampler rng(71);
    const VbParams params = random_params(rng);
    for (int trial = 0; trial < 300; ++trial) {
        const Gf2Rat x = rng.rat(8);
        const Gf2Poly common = rng.nonzero_poly(4);
        CHECK(eval_f_on(params, x.num() * common, x.den() * common) == eval_f(params, x));
    }
}

TEST_CASE("linearity in the parameters") {
    funcid::Sampler rng(73);
    const VbParams p1 = random_params(rng);
    const VbParams p2 = random_params(rng);
    const VbParams sum{p1.A + p2.A, p1.B + p2.B};
    for (int trial = 0; trial < 100; ++trial) {
        const Gf2Rat x = rng.rat(8);
        CHECK(eval_f(sum, x) == eval_f(p1, x) + eval_f(p2, x));
    }
}
