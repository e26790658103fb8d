#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>

namespace gridzero {

/// The fixed four-variable universe. Everything in the library lives in
/// (subrings of) Q(i)[x,y,s,t]; (x,y) is the "point" pair, (s,t) the
/// "parameter" pair.
enum class Var : int { x = 0, y = 1, s = 2, t = 3 };

inline constexpr std::array<char, 4> kVarNames{'x', 'y', 's', 't'};

/// Bitmask over the four variables.
using VarMask = unsigned;
inline constexpr VarMask kMaskNone = 0u;
inline constexpr VarMask kMaskXY = 0b0011u;
inline constexpr VarMask kMaskST = 0b1100u;
inline constexpr VarMask kMaskAll = 0b1111u;

inline constexpr VarMask mask_of(Var v) { return 1u << static_cast<int>(v); }

/// Exponent vector; zero entries are the canonical representation of
/// omitted variables.
class Monomial {
public:
    Monomial() = default;
    Monomial(std::initializer_list<std::pair<Var, int>> factors) {
        for (auto [v, e] : factors) e_[static_cast<int>(v)] += e;
    }

    static Monomial one() { return {}; }
    static Monomial var(Var v, int e = 1) { return Monomial({{v, e}}); }

    int exponent(Var v) const { return e_[static_cast<int>(v)]; }
    int operator[](int i) const { return e_[i]; }

    int total_degree() const { return e_[0] + e_[1] + e_[2] + e_[3]; }
    bool is_one() const { return total_degree() == 0; }

    VarMask support() const {
        VarMask m = 0;
        for (int i = 0; i < 4; ++i)
            if (e_[i] > 0) m |= 1u << i;
        return m;
    }

    bool divides(const Monomial& m) const {
        for (int i = 0; i < 4; ++i)
            if (e_[i] > m.e_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < 4; ++i) r.e_[i] = e_[i] + o.e_[i];
        return r;
    }

    /// Exact quotient; caller must ensure o.divides(*this).
    Monomial divided_by(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < 4; ++i) r.e_[i] = e_[i] - o.e_[i];
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

    /// "x^2*s" style text; "1" for the empty monomial.
    std::string str() const;

private:
    std::array<int, 4> e_{0, 0, 0, 0};
};

enum class OrderKind { lex, grlex, grevlex };

/// Total multiplicative order on monomials. grlex and grevlex refine total
/// degree; lex does not.
struct MonomialOrder {
    OrderKind kind = OrderKind::grevlex;
    std::array<Var, 4> precedence{Var::x, Var::y, Var::s, Var::t};

    bool respects_degree() const { return kind != OrderKind::lex; }

    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    std::string str() const;

    /// The library-wide default: grevlex with precedence x > y > s > t.
    static const MonomialOrder& global();
};

/// Comparator for containers keyed by monomials under the global order.
struct GlobalMonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return MonomialOrder::global().less(a, b);
    }
};

}  // namespace gridzero
