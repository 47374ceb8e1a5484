#pragma once

#include "funcid/gf2poly.hpp"
#include "funcid/gf2rat.hpp"

namespace funcid {

/// Parameters (A, B) of the unique additive map f on GF(2)(t) with f(1) = A,
/// f(t) = B that satisfies x^{-1} f(x) + f(x^{-1}) = 0 at every nonzero x.
struct VbParams {
    Gf2Rat A;
    Gf2Rat B;
};

/// Even/odd decomposition of a rational function:
///   x = (P(t^2) + Q(t^2) t) / (R(t^2) + S(t^2) t).
struct Decomposition {
    Gf2Poly P, Q, R, S;
};

/// Decompose the reduced representation of x. For x = 0 this is P = Q = 0,
/// R = 1, S = 0.
Decomposition decompose(const Gf2Rat& x);

/// Reassemble F(t^2) + G(t^2) * t from a split pair.
Gf2Poly recompose(const Gf2Poly& even_part, const Gf2Poly& odd_part);

/// Evaluate f_{A,B}(x). With (P,Q,R,S) = decompose(x) and
/// E = R(t^2) + S(t^2) t, the value is
///   ((P R + Q S t) / E) A + ((P S + Q R) / E) B,
/// returned reduced. f(0) = 0 falls out of the formula (P = Q = 0).
Gf2Rat eval_f(const VbParams& params, const Gf2Rat& x);

/// Same formula applied to an explicit, possibly unreduced fraction num/den.
/// Any representation of the same value yields the same result; tests
/// exercise this with random common factors.
Gf2Rat eval_f_on(const VbParams& params, const Gf2Poly& num, const Gf2Poly& den);

/// Independent evaluation route for cross-checking eval_f: split the
/// numerator into monomials t^m, rewrite each term through
/// f(t^m / D) = (t^m / D) f(D t^{-m}), and reduce D t^{-m} against the
/// anchor values f(C(t^2) t^{2p}) = C(t) t^p A, f(C(t^2) t^{2p+1}) = C(t) t^p B.
/// Monomials are expanded in numerator-major (ascending exponent) order; all
/// orders agree, this one is fixed for determinism.
Gf2Rat eval_f_oracle(const VbParams& params, const Gf2Rat& x);

/// The defining identity's left-hand side x^{-1} f(x) + f(x^{-1}), which is
/// identically zero. x must be nonzero.
Gf2Rat identity_residual(const VbParams& params, const Gf2Rat& x);

}  // namespace funcid
