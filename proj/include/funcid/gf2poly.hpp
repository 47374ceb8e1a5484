#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace funcid {

/// Polynomial over GF(2), bit-packed little-endian: bit i (of limb i/64) is
/// the coefficient of t^i. Addition is word-wise XOR, multiplication is a
/// carryless shift-and-XOR convolution. Values are immutable in spirit: every
/// operation returns a fresh, trimmed polynomial (no trailing zero limbs).
class Gf2Poly {
public:
    /// Degree reported for the zero polynomial. A distinguished sentinel,
    /// never fed into index arithmetic.
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    Gf2Poly() = default;  // zero

    static Gf2Poly zero() { return {}; }
    static Gf2Poly one() { return from_bits(1); }
    static Gf2Poly t() { return from_bits(2); }
    /// t^exponent, exponent >= 0.
    static Gf2Poly monomial(int exponent);
    /// Coefficients of t^0..t^63 from the bits of `bits`.
    static Gf2Poly from_bits(std::uint64_t bits);
    static Gf2Poly from_exponents(std::initializer_list<int> exponents);

    bool is_zero() const { return limbs_.empty(); }
    bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }
    int degree() const;
    bool coeff(int i) const;
    /// Number of nonzero coefficients.
    int term_count() const;

    Gf2Poly& operator+=(const Gf2Poly& rhs);
    friend Gf2Poly operator+(Gf2Poly lhs, const Gf2Poly& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend Gf2Poly operator*(const Gf2Poly& lhs, const Gf2Poly& rhs);

    /// Multiply by t^k, k >= 0.
    Gf2Poly shifted(int k) const;

    /// Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
    static std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& a, const Gf2Poly& b);

    /// Split F(t) = P(t^2) + Q(t^2)*t; returns (P, Q). P takes the even-index
    /// coefficients of F, Q the odd-index ones, both reindexed by halving.
    std::pair<Gf2Poly, Gf2Poly> even_odd_split() const;

    /// P(t) -> P(t^2), by spreading bit i to bit 2i. Over GF(2) this equals
    /// P(t)^2 (Frobenius), which the tests assert against operator*.
    Gf2Poly substitute_square() const;

    friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

    /// Canonical text form, terms in strictly descending degree: "t^3+t+1".
    std::string to_string() const;

private:
    std::vector<std::uint64_t> limbs_;

    void trim();
};

/// Euclidean gcd. Over GF(2) every nonzero polynomial is monic, so the result
/// is canonical without a normalization step. Both arguments zero is a usage
/// error.
Gf2Poly gcd(Gf2Poly a, Gf2Poly b);

}  // namespace funcid
