#include "gridzero/division.hpp"

#include "gridzero/errors.hpp"

namespace gridzero {

DivisionResult divide_single(const Polynomial& f, const Polynomial& g,
                             const MonomialOrder& order) {
    if (g.is_zero()) throw ZeroDivisorError();
    auto [lm_g, lc_g] = g.leading_term(order);
    GaussRational lc_g_inv = inverse(lc_g);

    Polynomial p = f;
    Polynomial quotient(f.declared_vars() | g.declared_vars());
    Polynomial remainder(f.declared_vars() | g.declared_vars());
    while (!p.is_zero()) {
        auto [lm_p, lc_p] = p.leading_term(order);
        if (lm_g.divides(lm_p)) {
            GaussRational c = lc_p * lc_g_inv;
            Monomial m = lm_p.divided_by(lm_g);
            quotient.add_term(c, m);
            p -= Polynomial::term(c, m) * g;
        } else {
            remainder.add_term(lc_p, lm_p);
            p.add_term(-lc_p, lm_p);
        }
    }
    return {std::move(quotient), std::move(remainder)};
}

std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw ZeroDivisorError();
    if (a.is_zero()) return Polynomial::zero(a.declared_vars() | b.declared_vars());
    DivisionResult d = divide_single(a, b, MonomialOrder::global());
    if (!d.remainder.is_zero()) return std::nullopt;
    return d.quotient;
}

Polynomial CoefficientDecomposition::reassemble() const {
    auto [u, v] = base_vars(base);
    Polynomial out;
    for (const auto& [ij, coeff] : coefficients) {
        Monomial m = Monomial::var(u, ij.first) * Monomial::var(v, ij.second);
        out += coeff * Polynomial::term(GaussRational(1), m);
    }
    return out;
}

CoefficientDecomposition coefficient_decompose(const Polynomial& f, BasePair base) {
    auto [u, v] = base_vars(base);
    VarMask rest = f.declared_vars() & ~base_mask(base);
    CoefficientDecomposition out;
    out.base = base;
    for (const auto& [m, c] : f.terms()) {
        int i = m.exponent(u), j = m.exponent(v);
        Monomial mm = m.divided_by(Monomial::var(u, i) * Monomial::var(v, j));
        auto [it, inserted] = out.coefficients.emplace(std::pair{i, j}, Polynomial(rest));
        it->second.add_term(c, mm);
    }
    // Constant polynomials still expose the (0,0) cell.
    if (f.is_zero()) out.coefficients.emplace(std::pair{0, 0}, Polynomial(rest));
    return out;
}

}  // namespace gridzero
