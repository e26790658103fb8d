#pragma once

#include <map>
#include <optional>
#include <utility>

#include "gridzero/polynomial.hpp"

namespace gridzero {

struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};

/// Single-divisor multivariate division: f = g*quotient + remainder with no
/// monomial of the remainder divisible by the leading monomial of g under
/// `order`. The representation with that property is unique, so the result
/// does not depend on reduction strategy. Throws ZeroDivisorError when
/// g == 0.
DivisionResult divide_single(const Polynomial& f, const Polynomial& g,
                             const MonomialOrder& order = MonomialOrder::global());

/// Quotient a/b when the division is exact, std::nullopt otherwise.
std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b);

inline bool divides(const Polynomial& b, const Polynomial& a) {
    return exact_divide(a, b).has_value();
}

/// Which variable pair carries the exponents of the expansion.
enum class BasePair { xy, st };

inline VarMask base_mask(BasePair b) { return b == BasePair::xy ? kMaskXY : kMaskST; }
inline std::pair<Var, Var> base_vars(BasePair b) {
    return b == BasePair::xy ? std::pair{Var::x, Var::y} : std::pair{Var::s, Var::t};
}

/// Expansion f = sum_{i,j} coeff_{ij}(other pair) * u^i v^j over the chosen
/// base pair (u,v); reassemble() reproduces f exactly.
struct CoefficientDecomposition {
    BasePair base = BasePair::xy;
    std::map<std::pair<int, int>, Polynomial> coefficients;

    Polynomial reassemble() const;
};

CoefficientDecomposition coefficient_decompose(const Polynomial& f, BasePair base);

}  // namespace gridzero
