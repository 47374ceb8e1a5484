#include "funcid/solver.hpp"

#include <algorithm>

#include "funcid/errors.hpp"

namespace funcid {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 invmod_prime(u64 a, u64 p) {
    // Fermat: a^(p-2) mod p, p prime.
    u64 r = 1, e = p - 2;
    a %= p;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

void validate(const SolverInstance& instance) {
    if (instance.algebra.m < 1) throw UsageError("solver: m must be >= 1");
    if (instance.algebra.k < 1) throw UsageError("solver: k must be >= 1");
    if (instance.exponent < 1) throw UsageError("solver: exponent n must be >= 1");
}

}  // namespace

AdditiveMap AdditiveMap::zero(int d, u64 p) {
    AdditiveMap m;
    m.d = d;
    m.p = p;
    m.a.assign(static_cast<std::size_t>(d) * d, 0);
    return m;
}

AdditiveMap AdditiveMap::identity(int d, u64 p) { return scaled_identity(d, p, 1); }

AdditiveMap AdditiveMap::scaled_identity(int d, u64 p, u64 c) {
    AdditiveMap m = zero(d, p);
    for (int i = 0; i < d; ++i) m.set(i, i, c);
    return m;
}

std::vector<u64> AdditiveMap::apply(const std::vector<u64>& coords) const {
    if (static_cast<int>(coords.size()) != d) throw UsageError("AdditiveMap::apply: size mismatch");
    std::vector<u64> out(static_cast<std::size_t>(d), 0);
    for (int r = 0; r < d; ++r) {
        u64 acc = 0;
        for (int c = 0; c < d; ++c) {
            acc = static_cast<u64>(
                (acc + static_cast<u128>(at(r, c)) * coords[static_cast<std::size_t>(c)]) % p);
        }
        out[static_cast<std::size_t>(r)] = acc;
    }
    return out;
}

// --- Algebra ---

Algebra::Algebra(const AlgebraSpec& spec)
    : spec_(spec),
      field_(spec.k == 1 ? Ring::prime_field(spec.p)
             : spec.modulus.empty() ? Ring::ext_field(spec.p, spec.k)
                                    : Ring::ext_field(spec.p, spec.modulus)),
      d_(spec.m * spec.m * spec.k) {
    if (spec.m < 1) throw UsageError("Algebra: m must be >= 1");
}

Algebra::Coords Algebra::one_coords() const {
    return from_matrix(SquareMatrix::identity(field_, spec_.m));
}

SquareMatrix Algebra::to_matrix(const Coords& x) const {
    if (static_cast<int>(x.size()) != d_) throw UsageError("Algebra: coordinate size mismatch");
    SquareMatrix mat(field_, spec_.m);
    const int k = spec_.k;
    std::vector<u64> entry(static_cast<std::size_t>(k));
    for (int i = 0; i < spec_.m; ++i) {
        for (int j = 0; j < spec_.m; ++j) {
            const std::size_t base = (static_cast<std::size_t>(i) * spec_.m + j) * k;
            for (int l = 0; l < k; ++l) entry[static_cast<std::size_t>(l)] = x[base + l];
            mat.set(i, j, field_.element(entry));
        }
    }
    return mat;
}

Algebra::Coords Algebra::from_matrix(const SquareMatrix& x) const {
    Coords out(static_cast<std::size_t>(d_), 0);
    const int k = spec_.k;
    for (int i = 0; i < spec_.m; ++i) {
        for (int j = 0; j < spec_.m; ++j) {
            const std::size_t base = (static_cast<std::size_t>(i) * spec_.m + j) * k;
            const RingElem& e = x.at(i, j);
            if (const auto* pf = std::get_if<PrimeFieldElem>(&e)) {
                out[base] = pf->value;
            } else {
                const auto& ef = std::get<ExtFieldElem>(e);
                for (int l = 0; l < k; ++l) out[base + l] = ef.coeffs[static_cast<std::size_t>(l)];
            }
        }
    }
    return out;
}

Algebra::Coords Algebra::add(const Coords& x, const Coords& y) const {
    Coords out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = (x[i] + y[i]) % spec_.p;
    return out;
}

Algebra::Coords Algebra::mul(const Coords& x, const Coords& y) const {
    return from_matrix(to_matrix(x) * to_matrix(y));
}

std::optional<Algebra::Coords> Algebra::try_inv(const Coords& x) const {
    const auto inv = to_matrix(x).inverse();
    if (!inv) return std::nullopt;
    return from_matrix(*inv);
}

Algebra::Coords Algebra::power(const Coords& x, long long e) const {
    if (e < 0) {
        const auto xi = try_inv(x);
        if (!xi) throw UsageError("Algebra::power: negative power of a non-unit");
        return power(*xi, -e);
    }
    SquareMatrix acc = SquareMatrix::identity(field_, spec_.m);
    SquareMatrix base = to_matrix(x);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return from_matrix(acc);
}

bool Algebra::is_zero(const Coords& x) const {
    return std::all_of(x.begin(), x.end(), [](u64 v) { return v == 0; });
}

u64 Algebra::unit_count() const {
    u128 q = 1;
    for (int i = 0; i < spec_.k; ++i) q *= spec_.p;
    if (spec_.m == 1) return static_cast<u64>(q - 1);
    // |GL_m(F_q)| = prod_{i=0}^{m-1} (q^m - q^i)
    u128 qm = 1;
    for (int i = 0; i < spec_.m; ++i) {
        qm *= q;
        if (qm > UINT64_MAX) throw ResourceLimitError("unit count overflows", UINT64_MAX);
    }
    u128 count = 1;
    u128 qi = 1;
    for (int i = 0; i < spec_.m; ++i) {
        count *= (qm - qi);
        qi *= q;
        if (count > UINT64_MAX) throw ResourceLimitError("unit count overflows", UINT64_MAX);
    }
    return static_cast<u64>(count);
}

std::vector<Algebra::Coords> Algebra::units(u64 cap) const {
    const u64 count = unit_count();
    if (count > cap) {
        throw ResourceLimitError("unit enumeration: |A*| = " + std::to_string(count) +
                                     " exceeds cap " + std::to_string(cap),
                                 count);
    }
    u128 total = 1;
    for (int i = 0; i < d_; ++i) total *= spec_.p;
    std::vector<Coords> out;
    out.reserve(count);
    Coords c(static_cast<std::size_t>(d_), 0);
    for (u128 idx = 0; idx < total; ++idx) {
        u128 digits = idx;
        for (int i = 0; i < d_; ++i) {
            c[static_cast<std::size_t>(i)] = static_cast<u64>(digits % spec_.p);
            digits /= spec_.p;
        }
        if (try_inv(c)) out.push_back(c);
    }
    return out;
}

std::string Algebra::to_string(const Coords& x) const {
    const SquareMatrix mat = to_matrix(x);
    if (spec_.m == 1) return funcid::to_string(mat.at(0, 0));
    return mat.to_string();
}

// --- system assembly and elimination ---

LinearSystem build_system(const SolverInstance& instance) {
    validate(instance);
    const Algebra alg(instance.algebra);
    const int d = alg.dim();
    const u64 p = alg.p();
    const auto units = alg.units(instance.unit_cap);
    const std::size_t dd = static_cast<std::size_t>(d) * d;
    const std::size_t cols = instance.family == Family::pair ? 2 * dd : dd;

    LinearSystem sys;
    sys.p = p;
    sys.rows = units.size() * static_cast<std::size_t>(d);
    sys.cols = cols;
    sys.a.assign(sys.rows * sys.cols, 0);

    // Left-multiplied identity: f(x) + x^n g(x^{-1}) = 0. Each unit yields d
    // equations (the coordinates of the residual). Rows are placed by unit
    // index.
    const std::size_t g_off = instance.family == Family::pair ? dd : 0;
    for (std::size_t ui = 0; ui < units.size(); ++ui) {
        const auto& cu = units[ui];
        const auto cv = *alg.try_inv(cu);
        const auto un = alg.power(cu, instance.exponent);
        // Left-multiplication operator of u^n in coordinates: column j is
        // coords(u^n * basis_j).
        std::vector<std::vector<u64>> lcols(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j) {
            auto basis_j = alg.zero_coords();
            basis_j[static_cast<std::size_t>(j)] = 1;
            lcols[static_cast<std::size_t>(j)] = alg.mul(un, basis_j);
        }
        const std::size_t row_base = ui * static_cast<std::size_t>(d);
        for (int r = 0; r < d; ++r) {
            const std::size_t row = row_base + static_cast<std::size_t>(r);
            for (int s = 0; s < d; ++s) {
                const u64 cus = cu[static_cast<std::size_t>(s)];
                if (cus != 0) {
                    sys.add_at(row, static_cast<std::size_t>(r) * d + s, cus);
                }
            }
            for (int j = 0; j < d; ++j) {
                const u64 lrj = lcols[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)];
                if (lrj == 0) continue;
                for (int s = 0; s < d; ++s) {
                    const u64 cvs = cv[static_cast<std::size_t>(s)];
                    if (cvs == 0) continue;
                    sys.add_at(row, g_off + static_cast<std::size_t>(j) * d + s, mulmod(lrj, cvs, p));
                }
            }
        }
    }
    return sys;
}

std::pair<std::vector<std::vector<u64>>, std::vector<std::size_t>> gfp_nullspace(LinearSystem m) {
    const u64 p = m.p;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows) continue;
        if (pivot != rank) {
            for (std::size_t c = 0; c < m.cols; ++c) {
                std::swap(m.a[rank * m.cols + c], m.a[pivot * m.cols + c]);
            }
        }
        const u64 scale = invmod_prime(m.at(rank, col), p);
        for (std::size_t c = col; c < m.cols; ++c) {
            m.a[rank * m.cols + c] = mulmod(m.at(rank, c), scale, p);
        }
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == rank) continue;
            const u64 factor = m.at(r, col);
            if (factor == 0) continue;
            for (std::size_t c = col; c < m.cols; ++c) {
                const u64 sub = mulmod(factor, m.at(rank, c), p);
                m.a[r * m.cols + c] = (m.at(r, c) + p - sub) % p;
            }
        }
        pivot_cols.push_back(col);
        ++rank;
    }

    std::vector<std::size_t> free_cols;
    {
        std::size_t next_pivot = 0;
        for (std::size_t c = 0; c < m.cols; ++c) {
            if (next_pivot < pivot_cols.size() && pivot_cols[next_pivot] == c) {
                ++next_pivot;
            } else {
                free_cols.push_back(c);
            }
        }
    }

    std::vector<std::vector<u64>> basis;
    basis.reserve(free_cols.size());
    for (const std::size_t fc : free_cols) {
        std::vector<u64> v(m.cols, 0);
        v[fc] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
            v[pivot_cols[r]] = (p - m.at(r, fc)) % p;
        }
        basis.push_back(std::move(v));
    }
    return {std::move(basis), std::move(free_cols)};
}

namespace {

std::pair<AdditiveMap, AdditiveMap> unpack_pair(const std::vector<u64>& v, int d, u64 p,
                                                Family family) {
    const std::size_t dd = static_cast<std::size_t>(d) * d;
    AdditiveMap f = AdditiveMap::zero(d, p);
    std::copy(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(dd), f.a.begin());
    AdditiveMap g = f;
    if (family == Family::pair) {
        std::copy(v.begin() + static_cast<std::ptrdiff_t>(dd), v.end(), g.a.begin());
    }
    return {std::move(f), std::move(g)};
}

}  // namespace

SolutionSpace solve(const SolverInstance& instance) {
    validate(instance);
    const Algebra alg(instance.algebra);
    LinearSystem sys = build_system(instance);
    auto [raw, free_cols] = gfp_nullspace(std::move(sys));

    SolutionSpace space;
    space.p = alg.p();
    space.d = alg.dim();
    space.family = instance.family;
    space.dimension = static_cast<int>(raw.size());
    space.free_cols = std::move(free_cols);
    for (const auto& v : raw) {
        space.basis.push_back(unpack_pair(v, space.d, space.p, instance.family));
    }
    space.raw_basis = std::move(raw);

    // Soundness gate, independent of the elimination route: evaluate
    // x^{-n} f(x) + g(x^{-1}) directly at every unit for every basis pair.
    const auto units = alg.units(instance.unit_cap);
    for (const auto& [f, g] : space.basis) {
        for (const auto& u : units) {
            const auto lhs = alg.mul(alg.power(u, -instance.exponent), f.apply(u));
            const auto rhs = g.apply(*alg.try_inv(u));
            if (!alg.is_zero(alg.add(lhs, rhs))) {
                throw std::logic_error("solver: basis pair fails re-verification at unit " +
                                       alg.to_string(u));
            }
        }
    }
    return space;
}

bool contains_pair(const SolutionSpace& space, const AdditiveMap& f, const AdditiveMap& g) {
    if (f.d != space.d || g.d != space.d || f.p != space.p || g.p != space.p) {
        throw UsageError("contains_pair: shape mismatch");
    }
    if (space.family == Family::single && !(f == g)) return false;

    const std::size_t dd = static_cast<std::size_t>(space.d) * space.d;
    std::vector<u64> target(space.family == Family::pair ? 2 * dd : dd, 0);
    std::copy(f.a.begin(), f.a.end(), target.begin());
    if (space.family == Family::pair) std::copy(g.a.begin(), g.a.end(), target.begin() + static_cast<std::ptrdiff_t>(dd));

    // Each basis vector is the unique one with a 1 in its free column, so the
    // only possible combination has the target's free-column entries as
    // coefficients. Form it and compare exactly.
    std::vector<u64> combo(target.size(), 0);
    for (std::size_t i = 0; i < space.raw_basis.size(); ++i) {
        const u64 c = target[space.free_cols[i]];
        if (c == 0) continue;
        const auto& v = space.raw_basis[i];
        for (std::size_t j = 0; j < combo.size(); ++j) {
            combo[j] = (combo[j] + mulmod(c, v[j], space.p)) % space.p;
        }
    }
    return combo == target;
}

bool example_regime(u64 p, long long n) {
    const long long modulus = static_cast<long long>(p) - 1;  // >= 1
    return (n - 2) % modulus == 0;
}

std::vector<SweepRow> dimension_sweep(u64 p_max, int k_max, int n_max, Family family,
                                      u64 unit_cap) {
    std::vector<SweepRow> rows;
    for (u64 p = 2; p <= p_max; ++p) {
        if (!is_prime_u64(p)) continue;
        for (int k = 1; k <= k_max; ++k) {
            for (int n = 1; n <= n_max; ++n) {
                SweepRow row;
                row.p = p;
                row.k = k;
                row.n = n;
                row.flagged = example_regime(p, n);
                try {
                    SolverInstance instance;
                    instance.algebra = AlgebraSpec{1, p, k, {}};
                    instance.exponent = n;
                    instance.family = family;
                    instance.unit_cap = unit_cap;
                    row.dimension = solve(instance).dimension;
                } catch (const ResourceLimitError& e) {
                    row.error = e.what();
                } catch (const UnsupportedOperation& e) {
                    row.error = e.what();
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

}  // namespace funcid
