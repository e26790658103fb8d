#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gridzero/point_set.hpp"
#include "gridzero/polynomial.hpp"

namespace gridzero {

/// A generated extremal instance together with its predicted exact count,
/// so every generator doubles as a fixture.
struct ConstructionInstance {
    std::string name;
    std::vector<Polynomial> system;  // one or two polynomials
    PointSet P, Q;
    mpz_class predicted_count;
    std::string provenance;  // how the prediction was derived
};

/// F = x*s - y + t on P = [1,lambda] x [1,lambda*mu],
/// Q = [1,mu] x [1,lambda*mu]. The count is
/// sum over i1 <= lambda, i2 <= mu of max(0, lambda*mu - i1*i2): for fixed
/// slopes, y - t = i1*i2 has that many solutions in the height range.
ConstructionInstance elekes_grid(unsigned lambda, unsigned mu);

/// Degree-d variant of the slope grid: F = x*s + y^d - t^d on points
/// (i, j^(1/d)). Counting uses the integer surrogate relation
/// i1*i2 + j1 - j2 = 0 (polynomial x*s + y - t on the same integer grids),
/// which is in exact bijection with the original instance, so coordinates
/// stay rational. The count matches elekes_grid with the sign of the
/// y-term flipped.
ConstructionInstance elekes_degree_d(unsigned lambda, unsigned mu, unsigned d);

/// F = (x-s)^2 + y - t on P = Q = [1,lambda] x [1,2*lambda^2]; the count
/// grows as Theta(lambda^4) = Theta(n^{4/3}).
ConstructionInstance valtr_grid(unsigned lambda);

/// Graph curve y = gamma(x) (coefficients of gamma by ascending power).
struct GraphCurveSpec {
    std::vector<GaussRational> coeffs;

    /// gamma as a polynomial in `v`.
    Polynomial as_polynomial(Var v) const;
    GaussRational evaluate(const GaussRational& at) const;
};

/// Saturated instance: F = G*H + K*L with G = y - gamma(x),
/// K = t - kappa(s) and seeded random nonzero H, L; P and Q are n points
/// on the graphs of gamma and kappa, so the count is exactly n^2.
ConstructionInstance cartesian_saturation(const GraphCurveSpec& gamma,
                                          const GraphCurveSpec& kappa, unsigned n,
                                          std::uint64_t seed);

/// The diagonal system (x - s, y - t) restricted to n seeded random
/// distinct points: P = Q = {r_1..r_n} and the count is exactly n.
ConstructionInstance generic_diagonal(unsigned n, std::uint64_t seed);

/// Parse "name:arg,arg,..." construct specifications:
///   elekes:L,M | elekes-d:L,M,D | valtr:L | saturation:N,SEED,GAMMA,KAPPA
///   | diagonal:N,SEED
/// GAMMA/KAPPA are polynomial expressions in x and s respectively.
ConstructionInstance build_construction(const std::string& spec);

}  // namespace gridzero
