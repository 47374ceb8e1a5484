#include "funcid/sampling.hpp"

#include "funcid/errors.hpp"

namespace funcid {

std::uint64_t Sampler::below(std::uint64_t bound) {
    if (bound == 0) throw UsageError("Sampler::below: bound must be positive");
    if ((bound & (bound - 1)) == 0) return next() & (bound - 1);
    const std::uint64_t rem = (UINT64_MAX % bound + 1) % bound;  // 2^64 mod bound
    const std::uint64_t limit = UINT64_MAX - rem;
    std::uint64_t v;
    do {
        v = next();
    } while (v > limit);
    return v % bound;
}

long long Sampler::in_range(long long lo, long long hi) {
    if (lo > hi) throw UsageError("Sampler::in_range: empty range");
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Gf2Poly Sampler::poly(int max_deg) {
    Gf2Poly r;
    for (int i = 0; i <= max_deg; ++i) {
        if (below(2) != 0) r += Gf2Poly::monomial(i);
    }
    return r;
}

Gf2Poly Sampler::nonzero_poly(int max_deg) {
    while (true) {
        Gf2Poly r = poly(max_deg);
        if (!r.is_zero()) return r;
    }
}

Gf2Rat Sampler::rat(int max_deg) { return Gf2Rat(poly(max_deg), nonzero_poly(max_deg)); }

Gf2Rat Sampler::nonzero_rat(int max_deg) {
    return Gf2Rat(nonzero_poly(max_deg), nonzero_poly(max_deg));
}

BigRational Sampler::rational(int box) {
    if (box < 1) throw UsageError("Sampler::rational: box must be >= 1");
    const long long num = in_range(-box, box);
    const long long den = in_range(1, box);
    return BigRational(num, den);
}

BigRational Sampler::nonzero_rational(int box) {
    while (true) {
        BigRational r = rational(box);
        if (r != 0) return r;
    }
}

Quaternion Sampler::quaternion(int box) {
    auto a = rational(box);
    auto b = rational(box);
    auto c = rational(box);
    auto d = rational(box);
    return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

RingElem Sampler::elem(const Ring& ring, int box) {
    switch (ring.kind()) {
        case RingKind::prime_field:
            return ring.element({below(ring.p())});
        case RingKind::ext_field: {
            std::vector<std::uint64_t> c(static_cast<std::size_t>(ring.extension_degree()));
            for (auto& v : c) v = below(ring.p());
            return ring.element(c);
        }
        case RingKind::rational: return rational(box);
        case RingKind::quaternion: return quaternion(box);
    }
    throw UsageError("Sampler::elem: bad ring");
}

RingElem Sampler::nonzero_elem(const Ring& ring, int box) {
    while (true) {
        RingElem e = elem(ring, box);
        if (!is_zero(e)) return e;
    }
}

SquareMatrix Sampler::matrix(const Ring& ring, int m, int box) {
    SquareMatrix out(ring, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) out.set(i, j, elem(ring, box));
    }
    return out;
}

SquareMatrix Sampler::invertible_matrix(const Ring& ring, int m, int box) {
    while (true) {
        SquareMatrix x = matrix(ring, m, box);
        if (x.inverse()) return x;
    }
}

SquareMatrix Sampler::idempotent(const Ring& ring, int m, int box) {
    const int i = static_cast<int>(below(static_cast<std::uint64_t>(m)));
    const SquareMatrix s = invertible_matrix(ring, m, box);
    const SquareMatrix unit = SquareMatrix::basis_unit(ring, m, i, i);
    return s * unit * *s.inverse();
}

}  // namespace funcid
