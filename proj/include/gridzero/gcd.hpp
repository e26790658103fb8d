#pragma once

#include <span>

#include "gridzero/polynomial.hpp"

namespace gridzero {

/// Exact gcd over Q(i), normalized to leading coefficient 1 under the
/// global order. Primitive PRS: recursive content/primitive-part reduction
/// to univariate Euclid over the fraction field. Throws BothZeroError when
/// both inputs vanish.
Polynomial gcd_multivariate(const Polynomial& a, const Polynomial& b);

/// Fold of gcd_multivariate over a nonempty family (zero members ignored).
Polynomial gcd_many(std::span<const Polynomial> polys);

struct SquarefreeResult {
    Polynomial part;      // monic squarefree polynomial with the same zero set
    bool was_squarefree;  // true when the input had no repeated factor
};

/// f / gcd(f, df/dv over all used v); rejects constant input.
SquarefreeResult squarefree_part(const Polynomial& f);

bool is_squarefree(const Polynomial& f);

}  // namespace gridzero
