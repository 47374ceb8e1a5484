#include "funcid/matrix.hpp"

#include <utility>

#include "funcid/errors.hpp"

namespace funcid {

SquareMatrix::SquareMatrix(const Ring& ring, int m) : ring_(ring), m_(m) {
    if (m < 1) throw UsageError("SquareMatrix: dimension must be >= 1");
    entries_.assign(static_cast<std::size_t>(m) * m, ring.zero());
}

SquareMatrix SquareMatrix::identity(const Ring& ring, int m) {
    SquareMatrix r(ring, m);
    for (int i = 0; i < m; ++i) r.set(i, i, ring.one());
    return r;
}

SquareMatrix SquareMatrix::basis_unit(const Ring& ring, int m, int i, int j) {
    if (i < 0 || i >= m || j < 0 || j >= m) throw UsageError("basis_unit: index out of range");
    SquareMatrix r(ring, m);
    r.set(i, j, ring.one());
    return r;
}

const RingElem& SquareMatrix::at(int i, int j) const {
    if (i < 0 || i >= m_ || j < 0 || j >= m_) throw UsageError("SquareMatrix::at: out of range");
    return entries_[idx(i, j)];
}

void SquareMatrix::set(int i, int j, RingElem v) {
    if (i < 0 || i >= m_ || j < 0 || j >= m_) throw UsageError("SquareMatrix::set: out of range");
    if (!same_ring(v, ring_.zero())) throw UsageError("SquareMatrix::set: entry from wrong ring");
    entries_[idx(i, j)] = std::move(v);
}

void SquareMatrix::check_compatible(const SquareMatrix& rhs) const {
    if (m_ != rhs.m_) throw UsageError("matrix dimension mismatch");
    if (!(ring_ == rhs.ring_)) throw UsageError("matrix ring mismatch");
}

SquareMatrix SquareMatrix::operator+(const SquareMatrix& rhs) const {
    check_compatible(rhs);
    SquareMatrix r(ring_, m_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        r.entries_[i] = add(entries_[i], rhs.entries_[i]);
    }
    return r;
}

SquareMatrix SquareMatrix::negated() const {
    SquareMatrix r(ring_, m_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = neg(entries_[i]);
    return r;
}

SquareMatrix SquareMatrix::operator-(const SquareMatrix& rhs) const { return *this + rhs.negated(); }

SquareMatrix SquareMatrix::operator*(const SquareMatrix& rhs) const {
    check_compatible(rhs);
    SquareMatrix r(ring_, m_);
    for (int i = 0; i < m_; ++i) {
        for (int j = 0; j < m_; ++j) {
            RingElem acc = ring_.zero();
            for (int k = 0; k < m_; ++k) {
                acc = add(acc, mul(entries_[idx(i, k)], rhs.entries_[idx(k, j)]));
            }
            r.entries_[idx(i, j)] = std::move(acc);
        }
    }
    return r;
}

SquareMatrix SquareMatrix::scaled_left(const RingElem& a) const {
    SquareMatrix r(ring_, m_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = mul(a, entries_[i]);
    return r;
}

SquareMatrix SquareMatrix::scaled_right(const RingElem& a) const {
    SquareMatrix r(ring_, m_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = mul(entries_[i], a);
    return r;
}

bool SquareMatrix::is_zero() const {
    for (const auto& e : entries_) {
        if (!funcid::is_zero(e)) return false;
    }
    return true;
}

bool SquareMatrix::is_identity() const { return *this == identity(ring_, m_); }

std::optional<SquareMatrix> SquareMatrix::inverse() const {
    // Gauss-Jordan on [X | I]. Pivot on the first nonzero entry in each
    // column (arithmetic is exact, no magnitude pivoting), rows are scaled
    // and combined by LEFT multiplication only, so the accumulated right
    // block is a product of elementary matrices E_k ... E_1 = X^{-1}.
    const int n = m_;
    std::vector<std::vector<RingElem>> aug(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto& row = aug[static_cast<std::size_t>(i)];
        row.reserve(2 * static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) row.push_back(entries_[idx(i, j)]);
        for (int j = 0; j < n; ++j) row.push_back(i == j ? ring_.one() : ring_.zero());
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (!funcid::is_zero(aug[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)])) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return std::nullopt;
        std::swap(aug[static_cast<std::size_t>(col)], aug[static_cast<std::size_t>(pivot)]);
        auto& prow = aug[static_cast<std::size_t>(col)];
        const RingElem pinv = inv(prow[static_cast<std::size_t>(col)]);
        for (auto& e : prow) e = mul(pinv, e);
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            auto& row = aug[static_cast<std::size_t>(r)];
            const RingElem c = row[static_cast<std::size_t>(col)];
            if (funcid::is_zero(c)) continue;
            const RingElem nc = neg(c);
            for (std::size_t j = 0; j < row.size(); ++j) {
                row[j] = add(row[j], mul(nc, prow[j]));
            }
        }
    }
    SquareMatrix out(ring_, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            out.entries_[out.idx(i, j)] =
                aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)];
        }
    }
    return out;
}

bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.m_ == b.m_ && a.ring_ == b.ring_ && a.entries_ == b.entries_;
}

std::string SquareMatrix::to_string() const {
    std::string out = "[";
    for (int i = 0; i < m_; ++i) {
        if (i > 0) out += "; ";
        for (int j = 0; j < m_; ++j) {
            if (j > 0) out += ", ";
            out += funcid::to_string(entries_[idx(i, j)]);
        }
    }
    out += "]";
    return out;
}

const char* HuaResult::describe(Status s) {
    switch (s) {
        case Status::ok: return "ok";
        case Status::a_not_invertible: return "a is not invertible";
        case Status::b_not_invertible: return "b is not invertible";
        case Status::difference_not_invertible: return "b^-1 - a is not invertible";
        case Status::sum_not_invertible: return "a^-1 + (b^-1 - a)^-1 is not invertible";
    }
    return "?";
}

HuaResult hua_check(const SquareMatrix& a, const SquareMatrix& b) {
    const auto ai = a.inverse();
    if (!ai) return {HuaResult::Status::a_not_invertible, std::nullopt};
    const auto bi = b.inverse();
    if (!bi) return {HuaResult::Status::b_not_invertible, std::nullopt};
    const SquareMatrix diff = *bi - a;
    const auto di = diff.inverse();
    if (!di) return {HuaResult::Status::difference_not_invertible, std::nullopt};
    const SquareMatrix sum = *ai + *di;
    const auto si = sum.inverse();
    if (!si) return {HuaResult::Status::sum_not_invertible, std::nullopt};
    const SquareMatrix lhs = a - *si;
    const SquareMatrix aba = a * b * a;
    return {HuaResult::Status::ok, lhs - aba};
}

SquareMatrix idempotent_reflection(const SquareMatrix& x) {
    if (!(x * x == x)) throw PreconditionError("idempotent_reflection: x^2 != x");
    const Ring& ring = x.ring();
    const RingElem two = add(ring.one(), ring.one());
    return SquareMatrix::identity(ring, x.dim()) - x.scaled_left(two);
}

}  // namespace funcid
