#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "funcid/errors.hpp"

namespace funcid {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in lowest terms with positive
/// denominator by the backing type.
using BigRational = boost::multiprecision::cpp_rational;

inline BigRational rat_inv(const BigRational& x) {
    if (x == 0) throw DivisionByZero("rational inverse of zero");
    return BigRational(1) / x;
}

inline std::string rat_to_string(const BigRational& x) { return x.str(); }

}  // namespace funcid
