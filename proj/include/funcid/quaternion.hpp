#pragma once

#include <string>

#include "funcid/rational.hpp"

namespace funcid {

/// Rational quaternion a + b i + c j + d k: the standard noncommutative
/// division ring of characteristic 0. Exact throughout; the inverse is the
/// conjugate divided by the (rational, positive-definite) norm.
class Quaternion {
public:
    Quaternion() = default;
    Quaternion(BigRational a, BigRational b, BigRational c, BigRational d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}
    explicit Quaternion(BigRational scalar) : a_(std::move(scalar)) {}

    static Quaternion i() { return {0, 1, 0, 0}; }
    static Quaternion j() { return {0, 0, 1, 0}; }
    static Quaternion k() { return {0, 0, 0, 1}; }

    const BigRational& a() const { return a_; }
    const BigRational& b() const { return b_; }
    const BigRational& c() const { return c_; }
    const BigRational& d() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }

    Quaternion operator+(const Quaternion& rhs) const {
        return {a_ + rhs.a_, b_ + rhs.b_, c_ + rhs.c_, d_ + rhs.d_};
    }
    Quaternion operator-() const { return {-a_, -b_, -c_, -d_}; }
    Quaternion operator-(const Quaternion& rhs) const { return *this + (-rhs); }
    Quaternion operator*(const Quaternion& rhs) const;

    Quaternion conjugate() const { return {a_, -b_, -c_, -d_}; }
    /// a^2 + b^2 + c^2 + d^2; zero iff the element is zero.
    BigRational norm() const { return a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_; }
    Quaternion inverse() const;

    friend bool operator==(const Quaternion&, const Quaternion&) = default;

    std::string to_string() const;

private:
    BigRational a_, b_, c_, d_;
};

}  // namespace funcid
