// Acceptance suite: end-to-end checks of the library's headline guarantees,
// one line per criterion. Everything here is exact (tolerance zero).

#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "funcid/matrix.hpp"
#include "funcid/sampling.hpp"
#include "funcid/solver.hpp"
#include "funcid/vbmap.hpp"
#include "support/brute_force.hpp"

namespace {

using namespace funcid;

int g_failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << label << note
              << "\n";
    if (!ok) ++g_failures;
}

VbParams random_params(Sampler& rng) { return {rng.rat(4), rng.rat(4)}; }

bool identity_residuals_vanish() {
    Sampler rng(1001);
    const VbParams params = random_params(rng);
    for (int i = 0; i < 1000; ++i) {
        if (!identity_residual(params, rng.nonzero_rat(8)).is_zero()) return false;
    }
    return true;
}

bool additivity_holds() {
    Sampler rng(1002);
    const VbParams params = random_params(rng);
    for (int i = 0; i < 1000; ++i) {
        const Gf2Rat x = rng.rat(8);
        const Gf2Rat y = rng.rat(8);
        if (!(eval_f(params, x + y) == eval_f(params, x) + eval_f(params, y))) return false;
    }
    return true;
}

bool oracle_and_unreduced_agree() {
    Sampler rng(1003);
    const VbParams params = random_params(rng);
    for (int i = 0; i < 500; ++i) {
        const Gf2Rat x = rng.rat(8);
        if (!(eval_f_oracle(params, x) == eval_f(params, x))) return false;
        const Gf2Poly common = rng.nonzero_poly(4);
        if (!(eval_f_on(params, x.num() * common, x.den() * common) == eval_f(params, x))) {
            return false;
        }
    }
    return true;
}

bool anchor_lattice_holds() {
    Sampler rng(1004);
    const VbParams params = random_params(rng);
    for (int n = -8; n <= 8; ++n) {
        if (!(eval_f(params, t_power(2 * n)) == t_power(n) * params.A)) return false;
        if (!(eval_f(params, t_power(2 * n + 1)) == t_power(n) * params.B)) return false;
        if (!(eval_f(params, t_power(n + 2)) == Gf2Rat::t() * eval_f(params, t_power(n)))) {
            return false;
        }
    }
    return true;
}

SolverInstance field_instance(std::uint64_t p, int k, int n) {
    SolverInstance out;
    out.algebra = AlgebraSpec{1, p, k, {}};
    out.exponent = n;
    return out;
}

bool solver_zero_dimensional_cases() {
    if (solve(field_instance(5, 1, 3)).dimension != 0) return false;
    if (solve(field_instance(5, 1, 4)).dimension != 0) return false;
    if (solve(field_instance(7, 1, 4)).dimension != 0) return false;
    SolverInstance m2gf3;
    m2gf3.algebra = AlgebraSpec{2, 3, 1, {}};
    m2gf3.exponent = 1;
    return solve(m2gf3).dimension == 0;
}

bool solver_matches_example() {
    {
        const auto space = solve(field_instance(3, 1, 4));
        if (space.dimension < 1) return false;
        if (!contains_pair(space, AdditiveMap::identity(1, 3),
                           AdditiveMap::scaled_identity(1, 3, 2))) {
            return false;
        }
    }
    for (int n = 1; n <= 6; ++n) {
        const auto space = solve(field_instance(2, 1, n));
        if (space.dimension < 1) return false;
        // Over GF(2), -x = x.
        if (!contains_pair(space, AdditiveMap::identity(1, 2), AdditiveMap::identity(1, 2))) {
            return false;
        }
    }
    return true;
}

bool gf4_frobenius_space() {
    const auto instance = field_instance(2, 2, 1);

    // Brute-force oracle first: every additive pair on GF(4), checked at the
    // three units directly, must leave exactly 2^2 solutions.
    const std::uint64_t count = testsupport::count_all_pairs(instance);
    if (count != 4) return false;

    // Then the elimination result must agree: dimension 2, basis of the form
    // (a x^2, a x^2).
    const auto space = solve(instance);
    if (space.dimension != 2) return false;
    const Algebra alg(instance.algebra);
    const auto units = alg.units(instance.unit_cap);
    std::vector<AdditiveMap> scalings;
    for (const auto& a : units) {
        scalings.push_back(testsupport::map_from_function(
            alg, [&](const Algebra::Coords& x) { return alg.mul(a, alg.mul(x, x)); }));
    }
    for (const auto& [f, g] : space.basis) {
        if (!(f == g)) return false;
        bool found = false;
        for (const auto& s : scalings) {
            if (f == s) found = true;
        }
        if (!found) return false;
    }
    return true;
}

bool hua_identity_sampled() {
    Sampler rng(1008);
    const auto run = [&](const Ring& ring, int m, int wanted) {
        int checked = 0;
        while (checked < wanted) {
            const auto a = rng.matrix(ring, m, 9);
            const auto b = rng.matrix(ring, m, 9);
            const auto result = hua_check(a, b);
            if (!result.ok()) continue;
            if (!result.residual->is_zero()) return false;
            ++checked;
        }
        return true;
    };
    if (!run(Ring::rationals(), 1, 500)) return false;
    if (!run(Ring::quaternions(), 1, 200)) return false;
    return run(Ring::rationals(), 2, 100);
}

bool idempotent_reflections_square_to_identity() {
    Sampler rng(1009);
    for (const Ring& ring : {Ring::prime_field(5), Ring::prime_field(7)}) {
        for (int m = 2; m <= 3; ++m) {
            for (int trial = 0; trial < 50; ++trial) {
                const auto x = rng.idempotent(ring, m, 9);
                const auto r = idempotent_reflection(x);
                if (!(r * r).is_identity()) return false;
            }
        }
    }
    return true;
}

bool micro_oracle_counts_match() {
    for (const std::uint64_t p : {2ull, 3ull}) {
        for (int n = 1; n <= 3; ++n) {
            const auto instance = field_instance(p, 1, n);
            const auto space = solve(instance);
            std::uint64_t expected = 1;
            for (int i = 0; i < space.dimension; ++i) expected *= p;
            if (testsupport::count_all_pairs(instance) != expected) return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    criterion(1, "identity residual vanishes on 1000 random nonzero points",
              identity_residuals_vanish);
    criterion(2, "additivity on 1000 random pairs", additivity_holds);
    criterion(3, "oracle equivalence and unreduced-representation agreement on 500 points",
              oracle_and_unreduced_agree);
    criterion(4, "anchor lattice f(t^{2n}) = t^n A, f(t^{2n+1}) = t^n B, recursion, n in [-8, 8]",
              anchor_lattice_holds);
    criterion(5, "solver: zero solution space for GF(5) n=3, GF(5)/GF(7) n=4, M2(GF(3)) n=1",
              solver_zero_dimensional_cases);
    criterion(6, "solver: (x, -x) in the space for GF(3) n=4 and GF(2) n<=6",
              solver_matches_example);
    criterion(7, "GF(4) n=1: brute force and elimination both give the (a x^2, a x^2) plane",
              gf4_frobenius_space);
    criterion(8, "Hua residual zero: 500 rational, 200 quaternion, 100 M2(Q) samples",
              hua_identity_sampled);
    criterion(9, "idempotent reflections square to I over GF(5), GF(7), m in {2, 3}",
              idempotent_reflections_square_to_identity);
    criterion(10, "exhaustive pair counts match p^dimension for GF(2), GF(3), n <= 3",
              micro_oracle_counts_match);

    if (g_failures == 0) {
        std::cout << "acceptance: all 10 criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criteria FAILED\n";
    return 1;
}
