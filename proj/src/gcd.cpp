#include "gridzero/gcd.hpp"

#include <cassert>
#include <vector>

#include "gridzero/division.hpp"
#include "gridzero/errors.hpp"

namespace gridzero {
namespace {

// Highest-precedence variable occurring in either polynomial.
Var pick_main_var(VarMask used) {
    for (Var v : MonomialOrder::global().precedence)
        if (used & mask_of(v)) return v;
    assert(false);
    return Var::x;
}

Polynomial gcd_impl(Polynomial a, Polynomial b);

// gcd of the coefficients of p viewed as univariate in v.
Polynomial content_wrt(const Polynomial& p, Var v) {
    Polynomial acc;
    for (const auto& [e, coeff] : p.univariate_view(v)) {
        if (acc.is_zero()) {
            acc = coeff;
        } else {
            acc = gcd_impl(acc, coeff);
        }
        if (acc.is_constant()) return Polynomial::constant(GaussRational(1));
    }
    return make_monic(acc);
}

Polynomial primitive_part_wrt(const Polynomial& p, Var v) {
    Polynomial c = content_wrt(p, v);
    if (c.is_constant()) return make_monic(p);
    auto q = exact_divide(p, c);
    assert(q.has_value());
    return make_monic(*q);
}

// Pseudo-remainder of a by b in the variable v (lazy variant: one leading
// coefficient multiplication per reduction step).
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, Var v) {
    int db = b.degree_in(v);
    auto bview = b.univariate_view(v);
    Polynomial lcb = bview.at(db);
    while (!a.is_zero()) {
        int da = a.degree_in(v);
        if (da < db) break;
        auto aview = a.univariate_view(v);
        Polynomial lca = aview.at(da);
        Polynomial shift = Polynomial::term(GaussRational(1), Monomial::var(v, da - db));
        a = a * lcb - b * shift * lca;
    }
    return a;
}

// Euclid for univariate polynomials over Q(i).
Polynomial gcd_univariate(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        DivisionResult d = divide_single(a, b);
        a = std::move(b);
        b = std::move(d.remainder);
    }
    return make_monic(a);
}

Polynomial gcd_impl(Polynomial a, Polynomial b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    if (a.is_constant() || b.is_constant()) return Polynomial::constant(GaussRational(1));

    VarMask used = a.used_vars() | b.used_vars();
    Var v = pick_main_var(used);

    bool univariate = (used & ~mask_of(v)) == 0;
    if (univariate) return gcd_univariate(std::move(a), std::move(b));

    Polynomial cont_a = content_wrt(a, v);
    Polynomial cont_b = content_wrt(b, v);
    Polynomial pa = primitive_part_wrt(a, v);
    Polynomial pb = primitive_part_wrt(b, v);

    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        Polynomial r = pseudo_remainder(pa, pb, v);
        pa = std::move(pb);
        if (r.is_zero()) {
            pb = Polynomial();
        } else if (r.degree_in(v) <= 0) {
            // Nontrivial remainder free of v: the primitive parts are
            // coprime in v.
            pb = Polynomial();
            pa = Polynomial::constant(GaussRational(1));
        } else {
            pb = primitive_part_wrt(r, v);
        }
    }
    Polynomial result = gcd_impl(cont_a, cont_b) * primitive_part_wrt(pa, v);
    return make_monic(result);
}

}  // namespace

Polynomial gcd_multivariate(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw BothZeroError();
    return gcd_impl(a, b);
}

Polynomial gcd_many(std::span<const Polynomial> polys) {
    Polynomial acc;
    bool any = false;
    for (const Polynomial& p : polys) {
        if (p.is_zero()) continue;
        any = true;
        acc = acc.is_zero() ? make_monic(p) : gcd_multivariate(acc, p);
        if (acc.is_constant()) break;
    }
    if (!any) throw BothZeroError();
    return acc;
}

SquarefreeResult squarefree_part(const Polynomial& f) {
    if (f.is_constant()) throw ConstantInputError();
    Polynomial g = f;
    VarMask used = f.used_vars();
    for (int i = 0; i < 4; ++i) {
        if (!(used & (1u << i))) continue;
        g = gcd_multivariate(g, f.derivative(static_cast<Var>(i)));
        if (g.is_constant()) break;
    }
    if (g.is_constant()) return {make_monic(f), true};
    auto q = exact_divide(f, g);
    assert(q.has_value());
    return {make_monic(*q), false};
}

bool is_squarefree(const Polynomial& f) {
    if (f.is_zero()) return false;
    if (f.is_constant()) return true;
    return squarefree_part(f).was_squarefree;
}

}  // namespace gridzero
