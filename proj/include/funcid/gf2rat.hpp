#pragma once

#include <string>
#include <utility>

#include "funcid/gf2poly.hpp"

namespace funcid {

/// Reduced rational function in GF(2)(t). The constructor always reduces
/// (gcd of numerator and denominator is 1), so equality and hashing are
/// structural. Zero is 0/1. Over GF(2) every nonzero polynomial is monic,
/// hence no scaling normalization exists or is needed.
class Gf2Rat {
public:
    Gf2Rat() : den_(Gf2Poly::one()) {}
    Gf2Rat(const Gf2Poly& num) : Gf2Rat(num, Gf2Poly::one()) {}  // NOLINT: implicit by design
    Gf2Rat(const Gf2Poly& num, const Gf2Poly& den);

    static Gf2Rat zero() { return {}; }
    static Gf2Rat one() { return Gf2Rat(Gf2Poly::one()); }
    static Gf2Rat t() { return Gf2Rat(Gf2Poly::t()); }

    const Gf2Poly& num() const { return num_; }
    const Gf2Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    Gf2Rat& operator+=(const Gf2Rat& rhs);
    Gf2Rat& operator*=(const Gf2Rat& rhs);
    friend Gf2Rat operator+(Gf2Rat lhs, const Gf2Rat& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend Gf2Rat operator*(Gf2Rat lhs, const Gf2Rat& rhs) {
        lhs *= rhs;
        return lhs;
    }
    friend Gf2Rat operator/(const Gf2Rat& lhs, const Gf2Rat& rhs) { return lhs * rhs.inv(); }

    /// Multiplicative inverse; *this must be nonzero.
    Gf2Rat inv() const;

    /// Integer power; negative exponents invert (nonzero value required).
    Gf2Rat pow(long long e) const;

    friend bool operator==(const Gf2Rat&, const Gf2Rat&) = default;

    /// Canonical text form: "t^3+t+1", "1/t", "(t^2+1)/(t^2+t)". Components
    /// with more than one term are parenthesized, single terms are not.
    std::string to_string() const;

private:
    Gf2Poly num_;
    Gf2Poly den_;
};

/// t^e as a rational function; e may be negative.
Gf2Rat t_power(long long e);

}  // namespace funcid
