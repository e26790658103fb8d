#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gridzero/gauss_rational.hpp"
#include "gridzero/monomial.hpp"

namespace gridzero {

/// Values for some subset of the four variables.
struct VarValues {
    std::array<std::optional<GaussRational>, 4> v;

    VarValues() = default;
    VarValues(std::initializer_list<std::pair<Var, GaussRational>> init) {
        for (auto& [var, val] : init) v[static_cast<int>(var)] = val;
    }
    void set(Var var, GaussRational val) { v[static_cast<int>(var)] = std::move(val); }
    bool has(Var var) const { return v[static_cast<int>(var)].has_value(); }
    const GaussRational& get(Var var) const { return *v[static_cast<int>(var)]; }
    VarMask mask() const {
        VarMask m = 0;
        for (int i = 0; i < 4; ++i)
            if (v[i]) m |= 1u << i;
        return m;
    }
};

/// Multivariate polynomial over Q(i) in a declared subset of {x,y,s,t}.
/// Canonical form: no zero coefficients; terms keyed by the global monomial
/// order; the zero polynomial has an empty term map. All operations are
/// exact; values are immutable in spirit (mutating operators return fresh
/// canonical state).
class Polynomial {
public:
    using TermMap = std::map<Monomial, GaussRational, GlobalMonomialLess>;

    Polynomial() = default;
    explicit Polynomial(VarMask declared) : vars_(declared) {}

    static Polynomial zero(VarMask declared = kMaskNone) { return Polynomial(declared); }
    static Polynomial constant(const GaussRational& c, VarMask declared = kMaskNone);
    static Polynomial variable(Var v);
    static Polynomial term(const GaussRational& c, const Monomial& m);

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant value; only meaningful when is_constant().
    GaussRational constant_value() const;

    /// Declared variable universe (may be wider than the support).
    VarMask declared_vars() const { return vars_; }
    /// Variables actually occurring in some term.
    VarMask used_vars() const;
    Polynomial widened(VarMask extra) const;

    /// Max total degree over terms; -1 for the zero polynomial (operations
    /// that require a nonzero input must reject it explicitly).
    int total_degree() const;
    int degree_in(Var v) const;

    std::pair<Monomial, GaussRational> leading_term(const MonomialOrder& order) const;
    Monomial leading_monomial(const MonomialOrder& order) const { return leading_term(order).first; }
    GaussRational leading_coefficient(const MonomialOrder& order) const {
        return leading_term(order).second;
    }

    GaussRational coefficient(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial scaled(const GaussRational& c) const;
    Polynomial pow(unsigned e) const;

    /// Add c * m in place.
    void add_term(const GaussRational& c, const Monomial& m);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// True when a == c * b for some nonzero constant c.
    bool proportional_to(const Polynomial& o) const;

    /// Full evaluation. Throws MissingVariableError unless every declared
    /// variable has a value.
    GaussRational evaluate(const VarValues& at) const;

    /// Substitute the given variables, producing a polynomial in the rest.
    Polynomial eval_partial(const VarValues& at) const;

    Polynomial derivative(Var v) const;

    /// View as univariate in v: exponent of v -> coefficient polynomial in
    /// the remaining variables.
    std::map<int, Polynomial> univariate_view(Var v) const;

    /// Canonical text in the expression grammar; parse(str()) == *this.
    std::string str() const;

private:
    TermMap terms_;
    VarMask vars_ = kMaskNone;
};

Polynomial make_monic(const Polynomial& p,
                      const MonomialOrder& order = MonomialOrder::global());

}  // namespace gridzero
