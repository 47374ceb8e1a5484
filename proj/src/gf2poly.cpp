#include "funcid/gf2poly.hpp"

#include <bit>

#include "funcid/errors.hpp"

namespace funcid {

namespace {
constexpr int kWordBits = 64;
}

void Gf2Poly::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

Gf2Poly Gf2Poly::monomial(int exponent) {
    if (exponent < 0) throw UsageError("Gf2Poly::monomial: negative exponent");
    Gf2Poly r;
    r.limbs_.assign(static_cast<std::size_t>(exponent / kWordBits) + 1, 0);
    r.limbs_.back() = std::uint64_t{1} << (exponent % kWordBits);
    return r;
}

Gf2Poly Gf2Poly::from_bits(std::uint64_t bits) {
    Gf2Poly r;
    if (bits != 0) r.limbs_.push_back(bits);
    return r;
}

Gf2Poly Gf2Poly::from_exponents(std::initializer_list<int> exponents) {
    Gf2Poly r;
    for (int e : exponents) r += monomial(e);
    return r;
}

int Gf2Poly::degree() const {
    if (limbs_.empty()) return kZeroDegree;
    return static_cast<int>(limbs_.size() - 1) * kWordBits + std::bit_width(limbs_.back()) - 1;
}

bool Gf2Poly::coeff(int i) const {
    if (i < 0) return false;
    const std::size_t w = static_cast<std::size_t>(i) / kWordBits;
    if (w >= limbs_.size()) return false;
    return (limbs_[w] >> (i % kWordBits)) & 1u;
}

int Gf2Poly::term_count() const {
    int n = 0;
    for (std::uint64_t w : limbs_) n += std::popcount(w);
    return n;
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& rhs) {
    if (rhs.limbs_.size() > limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < rhs.limbs_.size(); ++i) limbs_[i] ^= rhs.limbs_[i];
    trim();
    return *this;
}

Gf2Poly Gf2Poly::shifted(int k) const {
    if (k < 0) throw UsageError("Gf2Poly::shifted: negative shift");
    if (is_zero() || k == 0) return *this;
    const int words = k / kWordBits;
    const int bits = k % kWordBits;
    Gf2Poly r;
    r.limbs_.assign(limbs_.size() + static_cast<std::size_t>(words) + 1, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        r.limbs_[i + words] ^= limbs_[i] << bits;
        if (bits != 0) r.limbs_[i + words + 1] ^= limbs_[i] >> (kWordBits - bits);
    }
    r.trim();
    return r;
}

Gf2Poly operator*(const Gf2Poly& lhs, const Gf2Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    // Carryless convolution: XOR-accumulate rhs shifted by each set bit of lhs.
    Gf2Poly acc;
    acc.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t w = 0; w < lhs.limbs_.size(); ++w) {
        std::uint64_t word = lhs.limbs_[w];
        while (word != 0) {
            const int b = std::countr_zero(word);
            word &= word - 1;
            const int shift = static_cast<int>(w) * kWordBits + b;
            const int words = shift / kWordBits;
            const int bits = shift % kWordBits;
            for (std::size_t i = 0; i < rhs.limbs_.size(); ++i) {
                acc.limbs_[i + words] ^= rhs.limbs_[i] << bits;
                if (bits != 0) acc.limbs_[i + words + 1] ^= rhs.limbs_[i] >> (kWordBits - bits);
            }
        }
    }
    acc.trim();
    return acc;
}

std::pair<Gf2Poly, Gf2Poly> Gf2Poly::divmod(const Gf2Poly& a, const Gf2Poly& b) {
    if (b.is_zero()) throw DivisionByZero("Gf2Poly::divmod: division by zero polynomial");
    Gf2Poly q;
    Gf2Poly r = a;
    const int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        const int shift = r.degree() - db;
        q += monomial(shift);
        r += b.shifted(shift);
    }
    return {q, r};
}

std::pair<Gf2Poly, Gf2Poly> Gf2Poly::even_odd_split() const {
    Gf2Poly even, odd;
    const int d = degree();
    if (d == kZeroDegree) return {even, odd};
    even.limbs_.assign(limbs_.size() / 2 + 1, 0);
    odd.limbs_.assign(limbs_.size() / 2 + 1, 0);
    for (int i = 0; i <= d; ++i) {
        if (!coeff(i)) continue;
        const int half = i / 2;
        auto& dst = (i % 2 == 0) ? even : odd;
        dst.limbs_[static_cast<std::size_t>(half) / kWordBits] ^= std::uint64_t{1}
                                                                 << (half % kWordBits);
    }
    even.trim();
    odd.trim();
    return {even, odd};
}

Gf2Poly Gf2Poly::substitute_square() const {
    Gf2Poly r;
    const int d = degree();
    if (d == kZeroDegree) return r;
    r.limbs_.assign(limbs_.size() * 2, 0);
    for (int i = 0; i <= d; ++i) {
        if (!coeff(i)) continue;
        const int j = 2 * i;
        r.limbs_[static_cast<std::size_t>(j) / kWordBits] ^= std::uint64_t{1} << (j % kWordBits);
    }
    r.trim();
    return r;
}

std::string Gf2Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int e = degree(); e >= 0; --e) {
        if (!coeff(e)) continue;
        if (!out.empty()) out += '+';
        if (e == 0) {
            out += '1';
        } else if (e == 1) {
            out += 't';
        } else {
            out += "t^" + std::to_string(e);
        }
    }
    return out;
}

Gf2Poly gcd(Gf2Poly a, Gf2Poly b) {
    if (a.is_zero() && b.is_zero()) throw UsageError("gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        auto [q, r] = Gf2Poly::divmod(a, b);
        a = b;
        b = r;
    }
    return a;
}

}  // namespace funcid
