#include "funcid/vbmap.hpp"

#include "funcid/errors.hpp"

namespace funcid {

Decomposition decompose(const Gf2Rat& x) {
    auto [p, q] = x.num().even_odd_split();
    auto [r, s] = x.den().even_odd_split();
    return {p, q, r, s};
}

Gf2Poly recompose(const Gf2Poly& even_part, const Gf2Poly& odd_part) {
    return even_part.substitute_square() + odd_part.substitute_square().shifted(1);
}

Gf2Rat eval_f_on(const VbParams& params, const Gf2Poly& num, const Gf2Poly& den) {
    if (den.is_zero()) throw DivisionByZero("eval_f_on: zero denominator");
    auto [p, q] = num.even_odd_split();
    auto [r, s] = den.even_odd_split();
    const Gf2Poly e = recompose(r, s);  // equals den
    const Gf2Poly coeff_a = p * r + (q * s).shifted(1);
    const Gf2Poly coeff_b = p * s + q * r;
    return Gf2Rat(coeff_a, e) * params.A + Gf2Rat(coeff_b, e) * params.B;
}

Gf2Rat eval_f(const VbParams& params, const Gf2Rat& x) {
    return eval_f_on(params, x.num(), x.den());
}

Gf2Rat eval_f_oracle(const VbParams& params, const Gf2Rat& x) {
    if (x.is_zero()) return Gf2Rat::zero();
    const Gf2Poly& n = x.num();
    const Gf2Poly& d = x.den();
    auto [r, s] = d.even_odd_split();
    const Gf2Rat r_of_t{r};
    const Gf2Rat s_of_t{s};

    Gf2Rat acc;
    for (int m = 0; m <= n.degree(); ++m) {
        if (!n.coeff(m)) continue;
        // f(t^m / D) = (t^m / D) f(D t^{-m}) with D = R(t^2) + S(t^2) t.
        Gf2Rat inner;
        if (m % 2 == 0) {
            // D t^{-2p} = R(t^2) t^{-2p} + S(t^2) t^{2(-p)+1}
            const long long p_half = m / 2;
            inner = r_of_t * t_power(-p_half) * params.A + s_of_t * t_power(-p_half) * params.B;
        } else {
            // D t^{-2q-1} = R(t^2) t^{2(-q-1)+1} + S(t^2) t^{2(-q)}
            const long long q_half = (m - 1) / 2;
            inner = r_of_t * t_power(-q_half - 1) * params.B + s_of_t * t_power(-q_half) * params.A;
        }
        acc += Gf2Rat(Gf2Poly::monomial(m), d) * inner;
    }
    return acc;
}

Gf2Rat identity_residual(const VbParams& params, const Gf2Rat& x) {
    if (x.is_zero()) throw DivisionByZero("identity_residual: x must be nonzero");
    const Gf2Rat xi = x.inv();
    return xi * eval_f(params, x) + eval_f(params, xi);
}

}  // namespace funcid
