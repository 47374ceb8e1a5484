#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "funcid/quaternion.hpp"
#include "funcid/rational.hpp"

namespace funcid {

enum class RingKind { prime_field, ext_field, rational, quaternion };

/// Immutable context for GF(p^k): the prime, the degree, and a monic
/// irreducible modulus (little-endian coefficient vector of length k+1).
/// Irreducibility is checked at construction by trial division over all monic
/// divisors of degree <= k/2. Elements are coefficient vectors of length k in
/// the monomial basis 1, s, ..., s^{k-1}.
class ExtField {
public:
    using Coeffs = std::vector<std::uint64_t>;

    ExtField(std::uint64_t p, Coeffs modulus);

    std::uint64_t p() const { return p_; }
    int degree() const { return static_cast<int>(modulus_.size()) - 1; }
    const Coeffs& modulus() const { return modulus_; }

    Coeffs zero() const { return Coeffs(degree(), 0); }
    Coeffs one() const;

    Coeffs add(const Coeffs& x, const Coeffs& y) const;
    Coeffs neg(const Coeffs& x) const;
    Coeffs mul(const Coeffs& x, const Coeffs& y) const;
    Coeffs inv(const Coeffs& x) const;
    bool is_zero(const Coeffs& x) const;

    /// Lexicographically smallest monic irreducible of degree k over GF(p)
    /// (coefficients compared from the highest degree downwards).
    static Coeffs default_modulus(std::uint64_t p, int k);

    friend bool operator==(const ExtField& a, const ExtField& b) {
        return a.p_ == b.p_ && a.modulus_ == b.modulus_;
    }

private:
    std::uint64_t p_;
    Coeffs modulus_;
};

struct PrimeFieldElem {
    std::uint64_t value = 0;  // residue in [0, p)
    std::uint64_t p = 2;

    friend bool operator==(const PrimeFieldElem&, const PrimeFieldElem&) = default;
};

struct ExtFieldElem {
    std::vector<std::uint64_t> coeffs;  // length k, entries in [0, p)
    std::shared_ptr<const ExtField> field;

    friend bool operator==(const ExtFieldElem& a, const ExtFieldElem& b) {
        return a.coeffs == b.coeffs &&
               (a.field == b.field || (a.field && b.field && *a.field == *b.field));
    }
};

/// One element of one of the supported exact division rings. Values are
/// immutable and self-describing; operations on elements of different rings
/// raise UsageError.
using RingElem = std::variant<PrimeFieldElem, ExtFieldElem, BigRational, Quaternion>;

/// Descriptor and element factory for a division ring.
class Ring {
public:
    static Ring prime_field(std::uint64_t p);
    /// GF(p^k) with the shipped default modulus.
    static Ring ext_field(std::uint64_t p, int k);
    /// GF(p^k) with a caller-supplied monic irreducible modulus.
    static Ring ext_field(std::uint64_t p, ExtField::Coeffs modulus);
    static Ring rationals();
    static Ring quaternions();

    RingKind kind() const { return kind_; }
    /// 0 for the characteristic-0 rings.
    std::uint64_t characteristic() const;
    bool is_finite() const {
        return kind_ == RingKind::prime_field || kind_ == RingKind::ext_field;
    }
    bool is_commutative() const { return kind_ != RingKind::quaternion; }
    std::uint64_t p() const;
    int extension_degree() const;
    /// p^k for finite rings; nullopt for infinite rings or on overflow.
    std::optional<std::uint64_t> order() const;
    const std::shared_ptr<const ExtField>& ext() const { return ext_; }

    RingElem zero() const;
    RingElem one() const;
    RingElem from_int(long long v) const;
    /// Element from a coefficient vector (finite rings: length 1 for prime
    /// fields, k for extension fields; residues taken mod p).
    RingElem element(const std::vector<std::uint64_t>& coeffs) const;

    /// All p^k elements exactly once, in counting order (constant coefficient
    /// varying fastest). Infinite rings raise UnsupportedOperation.
    std::vector<RingElem> enumerate_elements() const;

    friend bool operator==(const Ring& a, const Ring& b);
    friend Ring ring_of(const RingElem& x);

    std::string to_string() const;

private:
    Ring(RingKind kind, std::uint64_t p, std::shared_ptr<const ExtField> ext)
        : kind_(kind), p_(p), ext_(std::move(ext)) {}

    RingKind kind_;
    std::uint64_t p_ = 0;
    std::shared_ptr<const ExtField> ext_;
};

RingElem add(const RingElem& x, const RingElem& y);
RingElem sub(const RingElem& x, const RingElem& y);
RingElem neg(const RingElem& x);
RingElem mul(const RingElem& x, const RingElem& y);
/// Two-sided exact inverse; zero raises DivisionByZero.
RingElem inv(const RingElem& x);
/// pow(x, 0) = 1; negative exponents invert first (x nonzero required).
RingElem pow(const RingElem& x, long long n);
bool is_zero(const RingElem& x);
bool is_one(const RingElem& x);
bool same_ring(const RingElem& x, const RingElem& y);
Ring ring_of(const RingElem& x);
std::string to_string(const RingElem& x);

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

}  // namespace funcid
