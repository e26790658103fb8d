#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gridzero/incidence.hpp"

namespace gridzero {

/// Ordered-pair count |{(p,q) in P x P : F(p,q) = a}|, computed as
/// |Z(F-a) ∩ (P x P)|. Throws ZeroPolynomialError when F is identically a.
IncidenceReport repeated_values(const Polynomial& F, const PointSet& P, const GaussRational& a,
                                const CountOptions& opts = {});

struct DistinctValuesResult {
    mpz_class count;                 // |F(P x P)|
    std::size_t n_p = 0;
    mpz_class per_point_max;         // max over p of |F({p} x P)|
    Fixed30 p_two_thirds;            // |P|^{2/3}
    Fixed30 ratio;                   // count / |P|^{2/3}
    std::vector<GaussRational> values;  // sorted; filled when requested
};

/// Exact |F(P x P)| by evaluating all ordered pairs and deduplicating.
DistinctValuesResult distinct_values(const Polynomial& F, const PointSet& P,
                                     bool with_values = false);

/// Fiber of the map (F1,F2) over (a,b): counts pairs with F1 = a and
/// F2 = b via the two-polynomial system (F1-a, F2-b), including the gcd
/// coprimality diagnostic.
IncidenceReport map_fiber(const Polynomial& F1, const Polynomial& F2, const PointSet& P,
                          const GaussRational& a, const GaussRational& b,
                          const CountOptions& opts = {});

struct MapDistinctResult {
    mpz_class count;  // |(F1,F2)(P x P)|
    std::size_t n_p = 0;
    mpq_class ratio;  // count / |P|, exact
    std::vector<std::pair<GaussRational, GaussRational>> values;  // sorted; on request
};

MapDistinctResult map_distinct_values(const Polynomial& F1, const Polynomial& F2,
                                      const PointSet& P, bool with_values = false);

/// Pointwise fiber classification of the system (F1, F2) over q = (s,t).
struct FiberProbeResult {
    enum class Kind { empty, finite_with_bound, contains_curve };
    Kind kind = Kind::empty;
    mpz_class bound;   // Bezout bound, finite_with_bound only
    Polynomial curve;  // contains_curve: common factor; zero when the whole
                       // plane is in the fiber
};

/// Specializes both polynomials at (s,t) = q. Both zero: the fiber is the
/// whole plane. Any nonzero-constant specialization: empty. Otherwise the
/// gcd of the nonzero specializations either exhibits a curve in the fiber
/// or certifies a finite fiber of size at most deg*deg.
FiberProbeResult fiber_probe(const Polynomial& F1, const Polynomial& F2, const Point& q);

}  // namespace gridzero
