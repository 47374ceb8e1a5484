#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "funcid/matrix.hpp"
#include "funcid/ring.hpp"

namespace funcid {

/// Which identity family is solved: `pair` leaves f and g independent,
/// `single` constrains g = f (the shape of the original n = 2 identity
/// f(x) = -x^2 f(x^{-1})).
enum class Family { pair, single };

/// A finite algebra: GF(p^k) itself (m = 1) or the m x m matrices over it.
struct AlgebraSpec {
    int m = 1;
    std::uint64_t p = 2;
    int k = 1;
    /// Optional custom monic irreducible modulus for k > 1 (little-endian,
    /// length k+1); empty selects the shipped default.
    std::vector<std::uint64_t> modulus;
};

/// One solving task: find every additive pair (f, g) with
/// x^{-n} f(x) + g(x^{-1}) = 0 at every invertible x of the algebra.
struct SolverInstance {
    AlgebraSpec algebra;
    int exponent = 1;  // n >= 1
    Family family = Family::pair;
    std::uint64_t unit_cap = 100000;
};

/// An additive (= GF(p)-linear) map of the algebra in coordinates: a d x d
/// matrix over GF(p) acting on coordinate vectors, d = m^2 k.
struct AdditiveMap {
    int d = 0;
    std::uint64_t p = 2;
    std::vector<std::uint64_t> a;  // row-major, residues in [0, p)

    static AdditiveMap zero(int d, std::uint64_t p);
    static AdditiveMap identity(int d, std::uint64_t p);
    static AdditiveMap scaled_identity(int d, std::uint64_t p, std::uint64_t c);

    std::uint64_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * d + c]; }
    void set(int r, int c, std::uint64_t v) { a[static_cast<std::size_t>(r) * d + c] = v % p; }
    std::vector<std::uint64_t> apply(const std::vector<std::uint64_t>& coords) const;

    friend bool operator==(const AdditiveMap&, const AdditiveMap&) = default;
};

/// The exact space of all solution pairs: a GF(p)-vector space given by a
/// basis of (f, g) pairs. raw_basis holds the underlying nullspace vectors
/// (layout: f entries row-major, then g entries for the pair family);
/// free_cols are the free-column indices the basis vectors correspond to,
/// in emission order.
struct SolutionSpace {
    std::uint64_t p = 2;
    int d = 0;
    Family family = Family::pair;
    int dimension = 0;
    std::vector<std::pair<AdditiveMap, AdditiveMap>> basis;
    std::vector<std::vector<std::uint64_t>> raw_basis;
    std::vector<std::size_t> free_cols;
};

/// Dense linear system over GF(p); rows are placed by unit index, so row
/// generation can be parallelized without changing the assembled order.
struct LinearSystem {
    std::uint64_t p = 2;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint64_t> a;  // row-major

    std::uint64_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
    void add_at(std::size_t r, std::size_t c, std::uint64_t v) {
        auto& slot = a[r * cols + c];
        slot = (slot + v) % p;
    }
};

/// Nullspace basis of a (copy of a) GF(p) matrix via exact Gauss-Jordan.
/// Pivots take the lowest-index column first; basis vectors are emitted in
/// free-column order. Returns the vectors and the free-column indices.
std::pair<std::vector<std::vector<std::uint64_t>>, std::vector<std::size_t>> gfp_nullspace(
    LinearSystem m);

/// Uniform coordinate view of the algebra of a SolverInstance. Elements are
/// coordinate vectors over GF(p) of length dim() in the
/// coefficient-lexicographic basis: matrix entry (i, j) row-major, then the
/// monomial-basis coefficient within the entry.
class Algebra {
public:
    using Coords = std::vector<std::uint64_t>;

    explicit Algebra(const AlgebraSpec& spec);

    const AlgebraSpec& spec() const { return spec_; }
    int dim() const { return d_; }
    std::uint64_t p() const { return spec_.p; }
    /// |A*|, computed exactly from the order formula for GL_m(GF(q)).
    std::uint64_t unit_count() const;

    Coords zero_coords() const { return Coords(static_cast<std::size_t>(d_), 0); }
    Coords one_coords() const;
    Coords add(const Coords& x, const Coords& y) const;
    Coords mul(const Coords& x, const Coords& y) const;
    std::optional<Coords> try_inv(const Coords& x) const;
    /// x^e, e may be negative for invertible x.
    Coords power(const Coords& x, long long e) const;
    bool is_zero(const Coords& x) const;

    /// All invertible elements exactly once, in counting order of their
    /// coordinates. Throws ResourceLimitError (carrying the exact count)
    /// when |A*| > cap.
    std::vector<Coords> units(std::uint64_t cap) const;

    std::string to_string(const Coords& x) const;

private:
    AlgebraSpec spec_;
    Ring field_;
    int d_;

    SquareMatrix to_matrix(const Coords& x) const;
    Coords from_matrix(const SquareMatrix& x) const;
};

/// Assemble the constraint system from the left-multiplied identity
/// f(x) + x^n g(x^{-1}) = 0: one block of dim() equations per unit,
/// unknowns = entries of f (then g, for the pair family).
LinearSystem build_system(const SolverInstance& instance);

/// Full pipeline: enumerate units, assemble, eliminate, and re-verify every
/// basis pair against every unit by direct evaluation of
/// x^{-n} f(x) + g(x^{-1}) before returning.
SolutionSpace solve(const SolverInstance& instance);

/// Exact span membership for a candidate pair, using the RREF structure of
/// the stored basis (each basis vector is the unique one with a 1 in its
/// free column).
bool contains_pair(const SolutionSpace& space, const AdditiveMap& f, const AdditiveMap& g);

/// True when p - 1 divides n - 2, the regime where (f, g) = (x, -x) solves
/// the identity on GF(p).
bool example_regime(std::uint64_t p, long long n);

struct SweepRow {
    std::uint64_t p = 0;
    int k = 1;
    int n = 1;
    std::optional<int> dimension;  // empty when the cell errored
    bool flagged = false;          // example_regime(p, n)
    std::string error;             // nonempty when the cell errored
};

/// Dimension table over all primes <= p_max, k <= k_max, n <= n_max.
/// Resource-limit failures are recorded per cell and the sweep continues.
std::vector<SweepRow> dimension_sweep(std::uint64_t p_max, int k_max, int n_max, Family family,
                                      std::uint64_t unit_cap);

}  // namespace funcid
