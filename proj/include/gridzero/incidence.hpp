#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gridzero/bitset.hpp"
#include "gridzero/decimal.hpp"
#include "gridzero/point_set.hpp"
#include "gridzero/polynomial.hpp"

namespace gridzero {

/// Which pair of variables is pinned to the point.
enum class SpecializeSide {
    second,  // fix (s,t) = q, leaving the curve C_q in (x,y)
    first,   // fix (x,y) = p, leaving the dual curve C_p* in (s,t)
};

struct SpecializedCurve {
    Point source;
    SpecializeSide side = SpecializeSide::second;
    Polynomial curve;
    bool degenerate = false;  // specialization vanished identically
};

/// Exact partial evaluation of F at one point of the product.
SpecializedCurve specialize(const Polynomial& F, const Point& pt, SpecializeSide side);

struct KstWitness {
    std::vector<std::size_t> p_side;  // indices into P
    std::vector<std::size_t> q_side;  // indices into Q
};

/// Exact counting report for |Z(system) ∩ (P x Q)| together with the
/// envelope quantities used to assess tightness.
struct IncidenceReport {
    mpz_class count;
    std::size_t n_p = 0, n_q = 0;

    Fixed30 st_main_term;       // |P|^{2/3} |Q|^{2/3}
    bool st_main_exact = false; // main term is an exact integer
    Fixed30 st_envelope;        // main term + |P| + |Q|
    mpz_class linear_envelope;  // |P| + |Q|

    Fixed30 ratio_main;   // count / main term
    Fixed30 ratio_st;     // count / st envelope
    mpq_class ratio_linear;  // count / (|P|+|Q|), exact

    std::vector<std::size_t> degenerate_q;  // q indices with all specializations zero

    bool system_pair = false;  // two-polynomial system
    bool coprime = true;       // gcd diagnostic for pairs
    Polynomial system_gcd;     // set when system_pair

    std::optional<KstWitness> kst;  // filled by callers that run the check

    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;  // (p,q), emit_pairs only
};

struct CountOptions {
    bool emit_pairs = false;
    int threads = 1;
};

/// |Z(F_1,...,F_m) ∩ (P x Q)| by exact enumeration with per-q
/// specialization reuse and duplicate-curve grouping. One or two
/// polynomials; for two, coprimality is checked via gcd and reported.
/// Counting partitioned over Q-chunks reduces deterministically: the count
/// and pair list are identical for any thread count.
IncidenceReport count_intersections(std::span<const Polynomial> system, const PointSet& P,
                                    const PointSet& Q, const CountOptions& opts = {});

inline IncidenceReport count_intersections(const Polynomial& F, const PointSet& P,
                                           const PointSet& Q, const CountOptions& opts = {}) {
    return count_intersections(std::span<const Polynomial>(&F, 1), P, Q, opts);
}

/// Bipartite incidence structure between P and the multiset of curves
/// {C_q : q in Q}. Edge (p,q) iff F(p,q) = 0; equivalently p in C_q iff
/// q in C_p*.
struct IncidenceGraph {
    std::size_t n_p = 0, n_q = 0;
    std::vector<DynBitset> adj_p;  // per p: incident q's
    std::vector<DynBitset> adj_q;  // per q: incident p's
    std::vector<std::size_t> deg_p, deg_q;
    unsigned long long edges = 0;
    std::vector<std::size_t> degenerate_q;
    /// q indices grouped by curve identity (proportional squarefree
    /// specializations); degenerate specializations form their own class.
    std::vector<std::vector<std::size_t>> curve_classes;
};

/// Multiset-friendly builder: duplicate points in the raw vectors are kept
/// as separate vertices, matching the multiset semantics of C_Q.
IncidenceGraph incidence_graph(const Polynomial& F, const std::vector<Point>& P,
                               const std::vector<Point>& Q);
IncidenceGraph incidence_graph(const Polynomial& F, const PointSet& P, const PointSet& Q);

/// Exhaustive K_{s,t} search: s vertices on the P side and t on the Q side,
/// all adjacent. Enumerates subsets of the cheaper side with bitset
/// intersections on the other; `budget` caps intersection steps
/// (ComplexityGuardError beyond it). Returns std::nullopt when the graph is
/// K_{s,t}-free.
std::optional<KstWitness> kst_free_check(const IncidenceGraph& graph, std::size_t s,
                                         std::size_t t, unsigned long long budget = 10000000ULL);

/// Rich-pair partition: P is split so that no two points in a part co-lie
/// on >= 2dM curves C_q; Q splits dually after removing the poor set Q0
/// (curves through < 2dM points of P). Greedy coloring; the parts-count
/// bound dM+1 holds whenever the incidence graph has no K_{M,M} and is
/// reported via p_within_bound / q_within_bound. A verification pass
/// asserts K_{2,2dM}- and K_{2dM,2}-freeness of every (P_i, Q_j) subgraph.
struct RichPartition {
    std::vector<std::vector<std::size_t>> p_parts;
    std::vector<std::vector<std::size_t>> q_parts;  // partition of Q minus the poor set
    std::vector<std::size_t> q_poor;
    std::size_t rich_threshold = 0;  // 2dM
    std::size_t part_bound = 0;      // dM+1
    bool p_within_bound = true;
    bool q_within_bound = true;
};

RichPartition partition_rich(const Polynomial& F, const PointSet& P, const PointSet& Q,
                             std::size_t M);

}  // namespace gridzero
