#include "funcid/gf2rat.hpp"

#include "funcid/errors.hpp"

namespace funcid {

Gf2Rat::Gf2Rat(const Gf2Poly& num, const Gf2Poly& den) {
    if (den.is_zero()) throw DivisionByZero("Gf2Rat: zero denominator");
    if (num.is_zero()) {
        num_ = Gf2Poly::zero();
        den_ = Gf2Poly::one();
        return;
    }
    const Gf2Poly g = gcd(num, den);
    num_ = Gf2Poly::divmod(num, g).first;
    den_ = Gf2Poly::divmod(den, g).first;
}

Gf2Rat& Gf2Rat::operator+=(const Gf2Rat& rhs) {
    *this = Gf2Rat(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
    return *this;
}

Gf2Rat& Gf2Rat::operator*=(const Gf2Rat& rhs) {
    *this = Gf2Rat(num_ * rhs.num_, den_ * rhs.den_);
    return *this;
}

Gf2Rat Gf2Rat::inv() const {
    if (is_zero()) throw DivisionByZero("Gf2Rat::inv of zero");
    return Gf2Rat(den_, num_);
}

Gf2Rat Gf2Rat::pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    Gf2Rat acc = one();
    Gf2Rat base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string Gf2Rat::to_string() const {
    if (den_.is_one()) return num_.to_string();
    const auto wrap = [](const Gf2Poly& p) {
        std::string s = p.to_string();
        return p.term_count() > 1 ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
}

Gf2Rat t_power(long long e) {
    if (e >= 0) return Gf2Rat(Gf2Poly::monomial(static_cast<int>(e)));
    return Gf2Rat(Gf2Poly::one(), Gf2Poly::monomial(static_cast<int>(-e)));
}

}  // namespace funcid
