#pragma once

#include <cstdint>
#include <random>

#include "funcid/gf2rat.hpp"
#include "funcid/matrix.hpp"
#include "funcid/ring.hpp"

namespace funcid {

/// Seeded source of random algebra values. All draws go through next()
/// (mt19937_64, whose output sequence is pinned by the standard) plus
/// rejection sampling, so runs are bit-reproducible across platforms.
///
/// Infinite rings are sampled from a bounded integer box: rational
/// numerators uniform in [-box, box], denominators uniform in [1, box];
/// quaternions draw four such rationals.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi], inclusive.
    long long in_range(long long lo, long long hi);

    /// Uniform coefficient bits for degrees 0..max_deg (so degree <= max_deg;
    /// zero is possible).
    Gf2Poly poly(int max_deg);
    Gf2Poly nonzero_poly(int max_deg);
    Gf2Rat rat(int max_deg);
    Gf2Rat nonzero_rat(int max_deg);

    BigRational rational(int box);
    BigRational nonzero_rational(int box);
    Quaternion quaternion(int box);

    RingElem elem(const Ring& ring, int box);
    RingElem nonzero_elem(const Ring& ring, int box);

    SquareMatrix matrix(const Ring& ring, int m, int box);
    SquareMatrix invertible_matrix(const Ring& ring, int m, int box);
    /// Random idempotent s e_ii s^{-1} (idempotent by construction).
    SquareMatrix idempotent(const Ring& ring, int m, int box);

private:
    std::mt19937_64 eng_;
};

}  // namespace funcid
