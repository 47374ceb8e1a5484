#pragma once

#include <optional>
#include <string>
#include <vector>

#include "funcid/ring.hpp"

namespace funcid {

/// m x m matrix over an exact division ring. Entry arithmetic goes through
/// the RingElem operations, so quaternion entries keep their
/// noncommutativity: products are accumulated as sum_k a_ik * b_kj in that
/// order, and row reduction multiplies rows on the left only.
class SquareMatrix {
public:
    SquareMatrix(const Ring& ring, int m);  // zero matrix

    static SquareMatrix identity(const Ring& ring, int m);
    /// Matrix unit e_ij (0-based): single 1 in entry (i, j).
    static SquareMatrix basis_unit(const Ring& ring, int m, int i, int j);

    int dim() const { return m_; }
    const Ring& ring() const { return ring_; }

    const RingElem& at(int i, int j) const;
    void set(int i, int j, RingElem v);

    SquareMatrix operator+(const SquareMatrix& rhs) const;
    SquareMatrix operator-(const SquareMatrix& rhs) const;
    SquareMatrix operator*(const SquareMatrix& rhs) const;
    SquareMatrix negated() const;

    /// a * X: every entry left-multiplied by a.
    SquareMatrix scaled_left(const RingElem& a) const;
    /// X * a: every entry right-multiplied by a.
    SquareMatrix scaled_right(const RingElem& a) const;

    bool is_zero() const;
    bool is_identity() const;

    /// Exact two-sided inverse via Gauss-Jordan with left-multiplied row
    /// operations (valid over noncommutative entries). Singular matrices are
    /// a normal outcome, reported as nullopt.
    std::optional<SquareMatrix> inverse() const;

    friend bool operator==(const SquareMatrix&, const SquareMatrix&);

    std::string to_string() const;

private:
    Ring ring_;
    int m_;
    std::vector<RingElem> entries_;  // row-major

    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * m_ + j; }
    void check_compatible(const SquareMatrix& rhs) const;
};

/// Outcome of a Hua-identity check a - [a^{-1} + (b^{-1} - a)^{-1}]^{-1} = aba.
/// When every required inverse exists, `residual` holds the difference of the
/// two sides (contract: zero). Otherwise `status` names the first inverse
/// that failed.
struct HuaResult {
    enum class Status {
        ok,
        a_not_invertible,
        b_not_invertible,
        difference_not_invertible,  // b^{-1} - a
        sum_not_invertible,         // a^{-1} + (b^{-1} - a)^{-1}
    };

    Status status = Status::ok;
    std::optional<SquareMatrix> residual;

    bool ok() const { return status == Status::ok; }
    static const char* describe(Status s);
};

HuaResult hua_check(const SquareMatrix& a, const SquareMatrix& b);

/// 1 - 2x for an idempotent x (x^2 = x is checked); the result squares to the
/// identity whenever 2 is invertible in the ring.
SquareMatrix idempotent_reflection(const SquareMatrix& x);

}  // namespace funcid
