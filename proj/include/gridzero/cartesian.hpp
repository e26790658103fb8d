#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gridzero/division.hpp"
#include "gridzero/gcd.hpp"
#include "gridzero/point_set.hpp"
#include "gridzero/polynomial.hpp"

namespace gridzero {

/// Certified decomposition F = G*H + K*L with G in (x,y), K in (s,t), both
/// nonconstant. assemble() re-multiplies the identity; every producing
/// operation verifies it before returning.
struct CartesianWitness {
    Polynomial g, k, h, l;
    bool g_reduced = false;  // input G replaced by its squarefree part
    bool k_reduced = false;

    Polynomial assemble() const { return g * h + k * l; }
};

/// Evidence that the decomposition fails: the remainder coefficient at
/// x^i y^j is not divisible by K (re-checked by exact division).
struct FailureCertificate {
    int i = 0, j = 0;
    Polynomial residue;              // R_ij
    Polynomial reduction_remainder;  // nonzero remainder of R_ij / K
    std::string note;
};

using CartesianOutcome = std::variant<CartesianWitness, FailureCertificate>;

inline bool succeeded(const CartesianOutcome& o) {
    return std::holds_alternative<CartesianWitness>(o);
}

/// One-dimensional test: f in (x,y), g in x alone, k in y alone, both
/// squarefree nonconstant. Decides whether f = g*h + k*l is solvable and
/// returns h, l or the failing remainder coefficient. With
/// reduce_to_squarefree unset, non-squarefree g or k raises
/// NotSquarefreeError; otherwise they are replaced by their squarefree
/// parts and flagged.
CartesianOutcome alon_1d_test(const Polynomial& f, const Polynomial& g, const Polynomial& k,
                              bool reduce_to_squarefree = false,
                              const MonomialOrder& order = MonomialOrder::global());

/// The (G,K)-Cartesian test. Divides F by G, expands the remainder as
/// sum R_ij(s,t) x^i y^j and tests K | R_ij for every cell. Non-squarefree
/// G or K are replaced by their squarefree parts (same zero set) and the
/// substitution is flagged on the witness. Under a degree-respecting order
/// the witness satisfies deg(H) <= deg(F)-deg(G) and
/// deg(L) <= deg(F)-deg(K).
CartesianOutcome cartesian_test(const Polynomial& F, const Polynomial& G, const Polynomial& K,
                                const MonomialOrder& order = MonomialOrder::global());

/// Detect a one-sided decomposition F = K(s,t)*L (H = 0) or F = G(x,y)*H
/// (L = 0) by taking the gcd of the coefficient polynomials of either
/// expansion. Returns std::nullopt when both gcds are constant.
std::optional<CartesianWitness> trivial_cartesian_probe(const Polynomial& F);

/// The candidate points q at which the specialization F(.,.,q) vanishes
/// identically (all expansion coefficients F_ij vanish at q). When
/// trivial_cartesian_probe(F) finds nothing, the result provably has at
/// most deg(F)^2 members; that bound is asserted.
std::vector<Point> degenerate_points(const Polynomial& F, const PointSet& candidates);

struct FitOutcome {
    enum class Status { found, none, not_attempted };
    Status status = Status::none;
    Polynomial curve;          // valid when status == found
    std::size_t subset_used = 0;  // points the curve interpolates (found only)
};

/// Smallest bivariate curve of degree <= d through I: nullspace of the
/// evaluation matrix over monomials of degree <= d, choosing minimal total
/// degree, then least leading monomial under the global order, normalized
/// monic. When the full set admits no curve, subsets of size
/// |I| - (d-1)^2 are enumerated exactly, bounded by `subset_budget`
/// combinations (NotAttempted beyond the budget).
FitOutcome fit_vanishing_curve(const PointSet& pts, int d, BasePair base = BasePair::xy,
                               unsigned long subset_budget = 1000000);

struct GridWitnessResult {
    bool success = false;
    CartesianWitness witness;       // valid on success
    std::size_t coverage_i = 0;     // |I ∩ Z(G)|
    std::size_t coverage_j = 0;     // |J ∩ Z(K)|
    std::string failure_reason;     // set when success is false
};

/// Synthesize (G,K) from a grid witness I x J ⊂ Z(F) with |I|,|J| > d^2:
/// fit a curve through I and a dual curve through J, then certify with
/// cartesian_test; falls back to subset fits when the direct pair fails.
/// Throws GridNotContainedError / GridTooSmallError on precondition
/// violations; a sound grid for which no Q(i) witness is found is reported
/// as an unsuccessful result, not an error.
GridWitnessResult grid_witness_to_cartesian(const Polynomial& F, const PointSet& I,
                                            const PointSet& J);

}  // namespace gridzero
