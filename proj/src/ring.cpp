#include "funcid/ring.hpp"

#include <algorithm>

#include "funcid/errors.hpp"

namespace funcid {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) {
    if (a % p == 0) throw DivisionByZero("inverse of zero in GF(p)");
    // Extended Euclid; p prime, so gcd is 1.
    __int128 t = 0, new_t = 1;
    __int128 r = static_cast<__int128>(p), new_r = static_cast<__int128>(a % p);
    while (new_r != 0) {
        const __int128 q = r / new_r;
        const __int128 next_t = t - q * new_t;
        const __int128 next_r = r - q * new_r;
        t = new_t;
        new_t = next_t;
        r = new_r;
        new_r = next_r;
    }
    if (t < 0) t += p;
    return static_cast<u64>(t);
}

// --- dense polynomials over GF(p), little-endian coefficient vectors ---

using Poly = std::vector<u64>;

void ptrim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const Poly& a) { return static_cast<int>(a.size()) - 1; }  // -1 for zero

Poly pmul(const Poly& a, const Poly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + static_cast<u128>(a[i]) * b[j]) % p;
        }
    }
    ptrim(r);
    return r;
}

Poly psub(const Poly& a, const Poly& b, u64 p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        u64 av = i < a.size() ? a[i] : 0;
        u64 bv = i < b.size() ? b[i] : 0;
        r[i] = (av + p - bv) % p;
    }
    ptrim(r);
    return r;
}

// a mod b, b nonzero.
Poly pmod(Poly a, const Poly& b, u64 p) {
    const int db = pdeg(b);
    const u64 lead_inv = invmod(b.back(), p);
    while (pdeg(a) >= db) {
        const u64 c = mulmod(a.back(), lead_inv, p);
        const int shift = pdeg(a) - db;
        for (int i = 0; i <= db; ++i) {
            a[static_cast<std::size_t>(i + shift)] =
                (a[static_cast<std::size_t>(i + shift)] + p - mulmod(c, b[static_cast<std::size_t>(i)], p)) % p;
        }
        ptrim(a);
    }
    return a;
}

Poly pdiv(Poly a, const Poly& b, u64 p) {
    const int db = pdeg(b);
    const u64 lead_inv = invmod(b.back(), p);
    Poly q(a.size(), 0);
    while (pdeg(a) >= db) {
        const u64 c = mulmod(a.back(), lead_inv, p);
        const int shift = pdeg(a) - db;
        q[static_cast<std::size_t>(shift)] = c;
        for (int i = 0; i <= db; ++i) {
            a[static_cast<std::size_t>(i + shift)] =
                (a[static_cast<std::size_t>(i + shift)] + p - mulmod(c, b[static_cast<std::size_t>(i)], p)) % p;
        }
        ptrim(a);
    }
    ptrim(q);
    return q;
}

// Inverse of a modulo m in GF(p)[s] via extended Euclid; a nonzero, gcd(a, m) = 1.
Poly pinv_mod(const Poly& a, const Poly& m, u64 p) {
    Poly r0 = m, r1 = a;
    Poly t0, t1 = {1};
    while (!r1.empty()) {
        Poly q = pdiv(r0, r1, p);
        Poly r2 = psub(r0, pmul(q, r1, p), p);
        Poly t2 = psub(t0, pmul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 = gcd, a nonzero constant for an irreducible modulus.
    const u64 c = invmod(r0.at(0), p);
    for (auto& v : t0) v = mulmod(v, c, p);
    ptrim(t0);
    return pmod(std::move(t0), m, p);
}

constexpr u64 kIrreducibilityWorkCap = 8'000'000;

bool is_irreducible(const Poly& f, u64 p) {
    const int k = pdeg(f);
    if (k < 1) return false;
    if (k == 1) return true;
    // Trial division by every monic polynomial of degree 1..k/2.
    u128 work = 0;
    for (int d = 1; d <= k / 2; ++d) {
        u128 c = 1;
        for (int i = 0; i < d; ++i) c *= p;
        work += c;
    }
    if (work > kIrreducibilityWorkCap) {
        throw UnsupportedOperation(
            "irreducibility trial division over GF(" + std::to_string(p) +
            ") is too large for degree " + std::to_string(k));
    }
    for (int d = 1; d <= k / 2; ++d) {
        u64 count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        Poly divisor(static_cast<std::size_t>(d) + 1, 0);
        divisor.back() = 1;
        for (u64 n = 0; n < count; ++n) {
            u64 digits = n;
            for (int i = 0; i < d; ++i) {
                divisor[static_cast<std::size_t>(i)] = digits % p;
                digits /= p;
            }
            if (pmod(f, divisor, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// --- ExtField ---

ExtField::ExtField(u64 p, Coeffs modulus) : p_(p), modulus_(std::move(modulus)) {
    if (!is_prime_u64(p_)) throw UsageError("ExtField: p must be prime");
    ptrim(modulus_);
    const int k = pdeg(modulus_);
    if (k < 1 || k > 8) throw UsageError("ExtField: extension degree must be in [1, 8]");
    for (auto& c : modulus_) c %= p_;
    if (modulus_.back() != 1) throw UsageError("ExtField: modulus must be monic");
    if (!is_irreducible(modulus_, p_)) {
        throw UsageError("ExtField: modulus is reducible over GF(" + std::to_string(p_) + ")");
    }
}

ExtField::Coeffs ExtField::one() const {
    Coeffs r(degree(), 0);
    r[0] = 1;
    return r;
}

ExtField::Coeffs ExtField::add(const Coeffs& x, const Coeffs& y) const {
    Coeffs r(degree(), 0);
    for (int i = 0; i < degree(); ++i) r[i] = (x[i] + y[i]) % p_;
    return r;
}

ExtField::Coeffs ExtField::neg(const Coeffs& x) const {
    Coeffs r(degree(), 0);
    for (int i = 0; i < degree(); ++i) r[i] = (p_ - x[i]) % p_;
    return r;
}

bool ExtField::is_zero(const Coeffs& x) const {
    return std::all_of(x.begin(), x.end(), [](u64 v) { return v == 0; });
}

ExtField::Coeffs ExtField::mul(const Coeffs& x, const Coeffs& y) const {
    Poly prod = pmul(x, y, p_);
    Poly red = pmod(std::move(prod), modulus_, p_);
    red.resize(degree(), 0);
    return red;
}

ExtField::Coeffs ExtField::inv(const Coeffs& x) const {
    if (is_zero(x)) throw DivisionByZero("inverse of zero in GF(p^k)");
    Poly a = x;
    ptrim(a);
    Poly r = pinv_mod(a, modulus_, p_);
    r.resize(degree(), 0);
    return r;
}

ExtField::Coeffs ExtField::default_modulus(u64 p, int k) {
    if (!is_prime_u64(p)) throw UsageError("default_modulus: p must be prime");
    if (k < 1 || k > 8) throw UsageError("default_modulus: k must be in [1, 8]");
    u128 count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    if (count > kIrreducibilityWorkCap) {
        throw UnsupportedOperation("default_modulus: search space too large");
    }
    for (u64 n = 0; n < static_cast<u64>(count); ++n) {
        Coeffs f(static_cast<std::size_t>(k) + 1, 0);
        f.back() = 1;
        u64 digits = n;
        for (int i = 0; i < k; ++i) {
            f[static_cast<std::size_t>(i)] = digits % p;
            digits /= p;
        }
        if (is_irreducible(f, p)) return f;
    }
    throw UsageError("default_modulus: no irreducible found");  // unreachable for prime p
}

// --- Ring ---

Ring Ring::prime_field(u64 p) {
    if (p >> 63) throw UsageError("prime_field: p must fit in 63 bits");
    if (!is_prime_u64(p)) throw UsageError("prime_field: p must be prime");
    return Ring(RingKind::prime_field, p, nullptr);
}

Ring Ring::ext_field(u64 p, int k) {
    if (k == 1) return prime_field(p);
    return ext_field(p, ExtField::default_modulus(p, k));
}

Ring Ring::ext_field(u64 p, ExtField::Coeffs modulus) {
    auto ctx = std::make_shared<const ExtField>(p, std::move(modulus));
    return Ring(RingKind::ext_field, p, std::move(ctx));
}

Ring Ring::rationals() { return Ring(RingKind::rational, 0, nullptr); }

Ring Ring::quaternions() { return Ring(RingKind::quaternion, 0, nullptr); }

u64 Ring::characteristic() const { return p_; }

u64 Ring::p() const {
    if (!is_finite()) throw UsageError("Ring::p: infinite ring");
    return p_;
}

int Ring::extension_degree() const {
    if (kind_ == RingKind::prime_field) return 1;
    if (kind_ == RingKind::ext_field) return ext_->degree();
    throw UsageError("Ring::extension_degree: infinite ring");
}

std::optional<u64> Ring::order() const {
    if (!is_finite()) return std::nullopt;
    u128 n = 1;
    for (int i = 0; i < extension_degree(); ++i) {
        n *= p_;
        if (n > UINT64_MAX) return std::nullopt;
    }
    return static_cast<u64>(n);
}

RingElem Ring::zero() const {
    switch (kind_) {
        case RingKind::prime_field: return PrimeFieldElem{0, p_};
        case RingKind::ext_field: return ExtFieldElem{ext_->zero(), ext_};
        case RingKind::rational: return BigRational(0);
        case RingKind::quaternion: return Quaternion();
    }
    throw UsageError("Ring::zero: bad kind");
}

RingElem Ring::one() const { return from_int(1); }

RingElem Ring::from_int(long long v) const {
    switch (kind_) {
        case RingKind::prime_field: {
            const long long r = ((v % static_cast<long long>(p_)) + static_cast<long long>(p_)) %
                                static_cast<long long>(p_);
            return PrimeFieldElem{static_cast<u64>(r), p_};
        }
        case RingKind::ext_field: {
            auto c = ext_->zero();
            const long long r = ((v % static_cast<long long>(p_)) + static_cast<long long>(p_)) %
                                static_cast<long long>(p_);
            c[0] = static_cast<u64>(r);
            return ExtFieldElem{std::move(c), ext_};
        }
        case RingKind::rational: return BigRational(v);
        case RingKind::quaternion: return Quaternion(BigRational(v));
    }
    throw UsageError("Ring::from_int: bad kind");
}

RingElem Ring::element(const std::vector<u64>& coeffs) const {
    if (kind_ == RingKind::prime_field) {
        if (coeffs.size() != 1) throw UsageError("Ring::element: expected 1 coefficient");
        return PrimeFieldElem{coeffs[0] % p_, p_};
    }
    if (kind_ == RingKind::ext_field) {
        if (static_cast<int>(coeffs.size()) != ext_->degree()) {
            throw UsageError("Ring::element: expected k coefficients");
        }
        auto c = coeffs;
        for (auto& v : c) v %= p_;
        return ExtFieldElem{std::move(c), ext_};
    }
    throw UsageError("Ring::element: coefficient construction is for finite rings");
}

std::vector<RingElem> Ring::enumerate_elements() const {
    if (!is_finite()) throw UnsupportedOperation("enumerate_elements: ring is infinite");
    const auto n = order();
    constexpr u64 kEnumCap = u64{1} << 26;
    if (!n || *n > kEnumCap) {
        throw ResourceLimitError("enumerate_elements: ring too large", n ? *n : UINT64_MAX);
    }
    const int k = extension_degree();
    std::vector<RingElem> out;
    out.reserve(*n);
    std::vector<u64> c(static_cast<std::size_t>(k), 0);
    for (u64 idx = 0; idx < *n; ++idx) {
        u64 digits = idx;
        for (int i = 0; i < k; ++i) {
            c[static_cast<std::size_t>(i)] = digits % p_;
            digits /= p_;
        }
        out.push_back(element(c));
    }
    return out;
}

bool operator==(const Ring& a, const Ring& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
        case RingKind::prime_field: return a.p_ == b.p_;
        case RingKind::ext_field: return *a.ext_ == *b.ext_;
        default: return true;
    }
}

std::string Ring::to_string() const {
    switch (kind_) {
        case RingKind::prime_field: return "GF(" + std::to_string(p_) + ")";
        case RingKind::ext_field:
            return "GF(" + std::to_string(p_) + "^" + std::to_string(ext_->degree()) + ")";
        case RingKind::rational: return "Q";
        case RingKind::quaternion: return "H";
    }
    return "?";
}

// --- element operations ---

namespace {

[[noreturn]] void mismatch() { throw UsageError("ring mismatch between operands"); }

void check_same_prime(const PrimeFieldElem& x, const PrimeFieldElem& y) {
    if (x.p != y.p) mismatch();
}

void check_same_ext(const ExtFieldElem& x, const ExtFieldElem& y) {
    if (!(*x.field == *y.field)) mismatch();
}

// Multiplicative identity of x's ring, without rebuilding (and revalidating)
// the ring descriptor.
RingElem one_like(const RingElem& x) {
    return std::visit(
        [](const auto& v) -> RingElem {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PrimeFieldElem>) {
                return PrimeFieldElem{1 % v.p, v.p};
            } else if constexpr (std::is_same_v<T, ExtFieldElem>) {
                return ExtFieldElem{v.field->one(), v.field};
            } else if constexpr (std::is_same_v<T, BigRational>) {
                return BigRational(1);
            } else {
                return Quaternion(BigRational(1));
            }
        },
        x);
}

template <typename FPrime, typename FExt, typename FRat, typename FQuat>
RingElem zip(const RingElem& x, const RingElem& y, FPrime fp, FExt fe, FRat fr, FQuat fq) {
    if (const auto* a = std::get_if<PrimeFieldElem>(&x)) {
        const auto* b = std::get_if<PrimeFieldElem>(&y);
        if (!b) mismatch();
        check_same_prime(*a, *b);
        return fp(*a, *b);
    }
    if (const auto* a = std::get_if<ExtFieldElem>(&x)) {
        const auto* b = std::get_if<ExtFieldElem>(&y);
        if (!b) mismatch();
        check_same_ext(*a, *b);
        return fe(*a, *b);
    }
    if (const auto* a = std::get_if<BigRational>(&x)) {
        const auto* b = std::get_if<BigRational>(&y);
        if (!b) mismatch();
        return fr(*a, *b);
    }
    const auto& a = std::get<Quaternion>(x);
    const auto* b = std::get_if<Quaternion>(&y);
    if (!b) mismatch();
    return fq(a, *b);
}

}  // namespace

RingElem add(const RingElem& x, const RingElem& y) {
    return zip(
        x, y,
        [](const PrimeFieldElem& a, const PrimeFieldElem& b) {
            return RingElem(PrimeFieldElem{(a.value + b.value) % a.p, a.p});
        },
        [](const ExtFieldElem& a, const ExtFieldElem& b) {
            return RingElem(ExtFieldElem{a.field->add(a.coeffs, b.coeffs), a.field});
        },
        [](const BigRational& a, const BigRational& b) { return RingElem(a + b); },
        [](const Quaternion& a, const Quaternion& b) { return RingElem(a + b); });
}

RingElem neg(const RingElem& x) {
    return std::visit(
        [](const auto& v) -> RingElem {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PrimeFieldElem>) {
                return PrimeFieldElem{(v.p - v.value) % v.p, v.p};
            } else if constexpr (std::is_same_v<T, ExtFieldElem>) {
                return ExtFieldElem{v.field->neg(v.coeffs), v.field};
            } else if constexpr (std::is_same_v<T, BigRational>) {
                return BigRational(-v);
            } else {
                return -v;
            }
        },
        x);
}

RingElem sub(const RingElem& x, const RingElem& y) { return add(x, neg(y)); }

RingElem mul(const RingElem& x, const RingElem& y) {
    return zip(
        x, y,
        [](const PrimeFieldElem& a, const PrimeFieldElem& b) {
            return RingElem(PrimeFieldElem{mulmod(a.value, b.value, a.p), a.p});
        },
        [](const ExtFieldElem& a, const ExtFieldElem& b) {
            return RingElem(ExtFieldElem{a.field->mul(a.coeffs, b.coeffs), a.field});
        },
        [](const BigRational& a, const BigRational& b) { return RingElem(a * b); },
        [](const Quaternion& a, const Quaternion& b) { return RingElem(a * b); });
}

RingElem inv(const RingElem& x) {
    return std::visit(
        [](const auto& v) -> RingElem {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PrimeFieldElem>) {
                return PrimeFieldElem{invmod(v.value, v.p), v.p};
            } else if constexpr (std::is_same_v<T, ExtFieldElem>) {
                return ExtFieldElem{v.field->inv(v.coeffs), v.field};
            } else if constexpr (std::is_same_v<T, BigRational>) {
                return rat_inv(v);
            } else {
                return v.inverse();
            }
        },
        x);
}

bool is_zero(const RingElem& x) {
    return std::visit(
        [](const auto& v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PrimeFieldElem>) {
                return v.value == 0;
            } else if constexpr (std::is_same_v<T, ExtFieldElem>) {
                return v.field->is_zero(v.coeffs);
            } else if constexpr (std::is_same_v<T, BigRational>) {
                return v == 0;
            } else {
                return v.is_zero();
            }
        },
        x);
}

bool is_one(const RingElem& x) { return x == one_like(x); }

RingElem pow(const RingElem& x, long long n) {
    if (n < 0) {
        if (is_zero(x)) throw DivisionByZero("pow: negative power of zero");
        return pow(inv(x), -n);
    }
    RingElem acc = one_like(x);
    RingElem base = x;
    while (n > 0) {
        if (n & 1) acc = mul(acc, base);
        base = mul(base, base);
        n >>= 1;
    }
    return acc;
}

bool same_ring(const RingElem& x, const RingElem& y) {
    if (x.index() != y.index()) return false;
    if (const auto* a = std::get_if<PrimeFieldElem>(&x)) {
        return a->p == std::get<PrimeFieldElem>(y).p;
    }
    if (const auto* a = std::get_if<ExtFieldElem>(&x)) {
        const auto& b = std::get<ExtFieldElem>(y);
        return a->field == b.field || (a->field && b.field && *a->field == *b.field);
    }
    return true;
}

Ring ring_of(const RingElem& x) {
    return std::visit(
        [](const auto& v) -> Ring {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PrimeFieldElem>) {
                return Ring(RingKind::prime_field, v.p, nullptr);
            } else if constexpr (std::is_same_v<T, ExtFieldElem>) {
                // Reuses the element's validated field context.
                return Ring(RingKind::ext_field, v.field->p(), v.field);
            } else if constexpr (std::is_same_v<T, BigRational>) {
                return Ring::rationals();
            } else {
                return Ring::quaternions();
            }
        },
        x);
}

std::string to_string(const RingElem& x) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PrimeFieldElem>) {
                return std::to_string(v.value);
            } else if constexpr (std::is_same_v<T, ExtFieldElem>) {
                std::string out;
                for (int e = static_cast<int>(v.coeffs.size()) - 1; e >= 0; --e) {
                    const u64 c = v.coeffs[static_cast<std::size_t>(e)];
                    if (c == 0) continue;
                    if (!out.empty()) out += '+';
                    if (e == 0) {
                        out += std::to_string(c);
                    } else {
                        if (c != 1) out += std::to_string(c) + "*";
                        out += (e == 1) ? "s" : "s^" + std::to_string(e);
                    }
                }
                return out.empty() ? "0" : out;
            } else if constexpr (std::is_same_v<T, BigRational>) {
                return rat_to_string(v);
            } else {
                return v.to_string();
            }
        },
        x);
}

}  // namespace funcid
