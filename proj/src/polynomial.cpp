#include "gridzero/polynomial.hpp"

#include <cassert>
#include <stdexcept>

#include "gridzero/errors.hpp"

namespace gridzero {

Polynomial Polynomial::constant(const GaussRational& c, VarMask declared) {
    Polynomial p(declared);
    if (!c.is_zero()) p.terms_.emplace(Monomial::one(), c);
    return p;
}

Polynomial Polynomial::variable(Var v) {
    Polynomial p(mask_of(v));
    p.terms_.emplace(Monomial::var(v), GaussRational(1));
    return p;
}

Polynomial Polynomial::term(const GaussRational& c, const Monomial& m) {
    Polynomial p(m.support());
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

GaussRational Polynomial::constant_value() const {
    if (terms_.empty()) return GaussRational(0);
    return terms_.begin()->second;
}

VarMask Polynomial::used_vars() const {
    VarMask m = 0;
    for (const auto& [mono, c] : terms_) m |= mono.support();
    return m;
}

Polynomial Polynomial::widened(VarMask extra) const {
    Polynomial p = *this;
    p.vars_ |= extra;
    return p;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_)
        if (m.total_degree() > d) d = m.total_degree();
    return d;
}

int Polynomial::degree_in(Var v) const {
    int d = -1;
    for (const auto& [m, c] : terms_)
        if (m.exponent(v) > d) d = m.exponent(v);
    return d;
}

std::pair<Monomial, GaussRational> Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw ZeroPolynomialError("leading term of the zero polynomial");
    auto it = terms_.begin();
    auto best = it;
    for (++it; it != terms_.end(); ++it)
        if (order.less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

GaussRational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussRational(0) : it->second;
}

Polynomial Polynomial::operator-() const {
    Polynomial p(vars_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

void Polynomial::add_term(const GaussRational& c, const Monomial& m) {
    if (c.is_zero()) return;
    vars_ |= m.support();
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    vars_ |= o.vars_;
    for (const auto& [m, c] : o.terms_) add_term(c, m);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    vars_ |= o.vars_;
    for (const auto& [m, c] : o.terms_) add_term(-c, m);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial p(a.vars_ | b.vars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) p.add_term(ca * cb, ma * mb);
    return p;
}

Polynomial Polynomial::scaled(const GaussRational& c) const {
    Polynomial p(vars_);
    if (c.is_zero()) return p;
    for (const auto& [m, coef] : terms_) p.terms_.emplace(m, coef * c);
    return p;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial acc = Polynomial::constant(GaussRational(1), vars_);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Polynomial::proportional_to(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    if (terms_.size() != o.terms_.size()) return false;
    auto ita = terms_.begin();
    auto itb = o.terms_.begin();
    GaussRational ratio = ita->second / itb->second;
    for (; ita != terms_.end(); ++ita, ++itb) {
        if (ita->first != itb->first) return false;
        if (ita->second != itb->second * ratio) return false;
    }
    return true;
}

GaussRational Polynomial::evaluate(const VarValues& at) const {
    for (int i = 0; i < 4; ++i) {
        if ((vars_ & (1u << i)) && !at.v[i])
            throw MissingVariableError(kVarNames[i]);
    }
    // Power tables keep the inner loop to one multiply per variable.
    std::array<std::vector<GaussRational>, 4> powers;
    for (int i = 0; i < 4; ++i)
        if (at.v[i]) powers[i].push_back(GaussRational(1));
    GaussRational acc(0);
    for (const auto& [m, c] : terms_) {
        GaussRational t = c;
        for (int i = 0; i < 4; ++i) {
            int e = m[i];
            if (e == 0) continue;
            auto& pw = powers[i];
            while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * *at.v[i]);
            t *= pw[static_cast<std::size_t>(e)];
        }
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::eval_partial(const VarValues& at) const {
    VarMask fixed = at.mask();
    Polynomial out(vars_ & ~fixed);
    std::array<std::vector<GaussRational>, 4> powers;
    for (int i = 0; i < 4; ++i)
        if (at.v[i]) powers[i].push_back(GaussRational(1));
    for (const auto& [m, c] : terms_) {
        GaussRational coef = c;
        Monomial rest;
        for (int i = 0; i < 4; ++i) {
            int e = m[i];
            if (e == 0) continue;
            Var v = static_cast<Var>(i);
            if (at.v[i]) {
                auto& pw = powers[i];
                while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * *at.v[i]);
                coef *= pw[static_cast<std::size_t>(e)];
            } else {
                rest = rest * Monomial::var(v, e);
            }
        }
        out.add_term(coef, rest);
    }
    return out;
}

Polynomial Polynomial::derivative(Var v) const {
    Polynomial out(vars_);
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(v);
        if (e == 0) continue;
        Monomial dm = m.divided_by(Monomial::var(v));
        out.add_term(c * GaussRational(e), dm);
    }
    return out;
}

std::map<int, Polynomial> Polynomial::univariate_view(Var v) const {
    std::map<int, Polynomial> out;
    VarMask rest = vars_ & ~mask_of(v);
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(v);
        Monomial mm = m.divided_by(Monomial::var(v, e));
        auto [it, inserted] = out.emplace(e, Polynomial(rest));
        it->second.add_term(c, mm);
    }
    return out;
}

Polynomial make_monic(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero()) return p;
    GaussRational lc = p.leading_coefficient(order);
    if (lc.is_one()) return p;
    return p.scaled(inverse(lc));
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Descending global order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        const GaussRational& c = it->second;
        bool negative = false;
        std::string body;
        if (c.is_real()) {
            negative = sgn(c.re()) < 0;
            mpq_class a = abs(c.re());
            if (m.is_one()) {
                body = a.get_str();
            } else if (a == 1) {
                body = m.str();
            } else {
                body = a.get_str() + "*" + m.str();
            }
        } else if (sgn(c.re()) == 0) {
            negative = sgn(c.im()) < 0;
            mpq_class b = abs(c.im());
            std::string coef = (b == 1) ? "i" : b.get_str() + "*i";
            body = m.is_one() ? coef : coef + "*" + m.str();
        } else {
            // Mixed coefficient: parenthesize so the term reparses as one
            // product.
            std::string coef = "(" + c.str() + ")";
            body = m.is_one() ? coef : coef + "*" + m.str();
        }
        if (out.empty()) {
            out = negative ? "-" + body : body;
        } else {
            out += negative ? " - " + body : " + " + body;
        }
    }
    return out;
}

}  // namespace gridzero
