#include "gridzero/incidence.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <thread>

#include "gridzero/errors.hpp"
#include "gridzero/gcd.hpp"

namespace gridzero {

SpecializedCurve specialize(const Polynomial& F, const Point& pt, SpecializeSide side) {
    if (F.is_zero()) throw ZeroPolynomialError();
    VarValues at;
    if (side == SpecializeSide::second) {
        at.set(Var::s, pt.u);
        at.set(Var::t, pt.v);
    } else {
        at.set(Var::x, pt.u);
        at.set(Var::y, pt.v);
    }
    SpecializedCurve out;
    out.source = pt;
    out.side = side;
    out.curve = F.eval_partial(at);
    out.degenerate = out.curve.is_zero();
    return out;
}

namespace {

// Flat term list for fast repeated evaluation of a specialized bivariate
// polynomial.
struct CurveEvaluator {
    struct Term {
        int eu, ev;
        GaussRational c;
    };
    std::vector<Term> terms;
    int max_u = 0, max_v = 0;
    bool identically_zero = true;

    explicit CurveEvaluator(const Polynomial& curve, Var u, Var v) {
        identically_zero = curve.is_zero();
        for (const auto& [m, c] : curve.terms()) {
            terms.push_back({m.exponent(u), m.exponent(v), c});
            max_u = std::max(max_u, m.exponent(u));
            max_v = std::max(max_v, m.exponent(v));
        }
    }

    bool vanishes_at(const GaussRational& u, const GaussRational& v) const {
        if (identically_zero) return true;
        std::vector<GaussRational> pu(static_cast<std::size_t>(max_u) + 1, GaussRational(1));
        std::vector<GaussRational> pv(static_cast<std::size_t>(max_v) + 1, GaussRational(1));
        for (int e = 1; e <= max_u; ++e) pu[static_cast<std::size_t>(e)] = pu[e - 1] * u;
        for (int e = 1; e <= max_v; ++e) pv[static_cast<std::size_t>(e)] = pv[e - 1] * v;
        GaussRational acc(0);
        for (const Term& t : terms) {
            acc += t.c * pu[static_cast<std::size_t>(t.eu)] * pv[static_cast<std::size_t>(t.ev)];
        }
        return acc.is_zero();
    }
};

struct SpecializationGroup {
    std::vector<CurveEvaluator> evaluators;  // nonzero specializations only
    bool all_zero = false;                   // every system member vanished
    std::vector<std::size_t> q_indices;
    bool unsatisfiable = false;              // some specialization is a nonzero constant
    std::vector<std::uint32_t> members;      // p indices incident to the group (filled later)
};

void run_indexed(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t tid = 0; tid < nthreads; ++tid) {
        pool.emplace_back([&, tid] {
            for (std::size_t i = tid; i < n; i += nthreads) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

IncidenceReport count_intersections(std::span<const Polynomial> system, const PointSet& P,
                                    const PointSet& Q, const CountOptions& opts) {
    if (system.empty() || system.size() > 2)
        throw Error("count_intersections expects one or two polynomials");
    for (const Polynomial& f : system)
        if (f.is_zero()) throw ZeroPolynomialError();

    IncidenceReport report;
    report.n_p = P.size();
    report.n_q = Q.size();
    if (system.size() == 2) {
        report.system_pair = true;
        report.system_gcd = gcd_multivariate(system[0], system[1]);
        report.coprime = report.system_gcd.is_constant();
    }

    // Group q's with identical (monic-normalized) specializations; the
    // per-group membership scan over P is done once.
    std::vector<SpecializationGroup> groups;
    std::map<std::string, std::size_t> key_to_group;
    std::vector<std::size_t> group_of_q(Q.size());
    for (std::size_t qi = 0; qi < Q.size(); ++qi) {
        std::string key;
        std::vector<Polynomial> specs;
        bool all_zero = true, unsat = false;
        for (const Polynomial& f : system) {
            Polynomial spec = specialize(f, Q[qi], SpecializeSide::second).curve;
            if (!spec.is_zero()) {
                all_zero = false;
                if (spec.is_constant()) unsat = true;
                spec = make_monic(spec);
            }
            key += spec.str();
            key += ';';
            specs.push_back(std::move(spec));
        }
        auto [it, inserted] = key_to_group.emplace(key, groups.size());
        if (inserted) {
            SpecializationGroup g;
            g.all_zero = all_zero;
            g.unsatisfiable = unsat;
            for (const Polynomial& spec : specs) {
                if (!spec.is_zero())
                    g.evaluators.emplace_back(spec, Var::x, Var::y);
            }
            groups.push_back(std::move(g));
        }
        groups[it->second].q_indices.push_back(qi);
        group_of_q[qi] = it->second;
        if (all_zero) report.degenerate_q.push_back(qi);
    }

    run_indexed(groups.size(), opts.threads, [&](std::size_t gi) {
        SpecializationGroup& g = groups[gi];
        if (g.unsatisfiable) return;
        if (g.all_zero) {
            g.members.resize(P.size());
            for (std::size_t pi = 0; pi < P.size(); ++pi)
                g.members[pi] = static_cast<std::uint32_t>(pi);
            return;
        }
        for (std::size_t pi = 0; pi < P.size(); ++pi) {
            bool all_vanish = true;
            for (const CurveEvaluator& ev : g.evaluators) {
                if (!ev.vanishes_at(P[pi].u, P[pi].v)) {
                    all_vanish = false;
                    break;
                }
            }
            if (all_vanish) g.members.push_back(static_cast<std::uint32_t>(pi));
        }
    });

    mpz_class count = 0;
    for (std::size_t qi = 0; qi < Q.size(); ++qi) {
        const SpecializationGroup& g = groups[group_of_q[qi]];
        count += static_cast<unsigned long>(g.members.size());
        if (opts.emit_pairs) {
            for (std::uint32_t pi : g.members)
                report.pairs.emplace_back(pi, static_cast<std::uint32_t>(qi));
        }
    }
    report.count = count;

    // Envelope quantities.
    mpz_class np(static_cast<unsigned long>(P.size()));
    mpz_class nq(static_cast<unsigned long>(Q.size()));
    bool exact = false;
    report.st_main_term = power_two_thirds(np * nq, &exact);
    report.st_main_exact = exact;
    report.linear_envelope = np + nq;
    report.st_envelope = report.st_main_term + Fixed30::from_integer(report.linear_envelope);
    report.ratio_main = Fixed30::ratio(report.count, report.st_main_term);
    report.ratio_st = Fixed30::ratio(report.count, report.st_envelope);
    if (report.linear_envelope != 0) {
        report.ratio_linear = mpq_class(report.count, report.linear_envelope);
        report.ratio_linear.canonicalize();
    }
    return report;
}

namespace {

std::string curve_class_key(const Polynomial& spec) {
    if (spec.is_zero()) return "<plane>";
    if (spec.is_constant()) return "<empty>";
    Polynomial monic = make_monic(spec);
    SquarefreeResult sf = squarefree_part(monic);
    return sf.part.str();
}

}  // namespace

IncidenceGraph incidence_graph(const Polynomial& F, const std::vector<Point>& P,
                               const std::vector<Point>& Q) {
    if (F.is_zero()) throw ZeroPolynomialError();
    IncidenceGraph g;
    g.n_p = P.size();
    g.n_q = Q.size();
    g.adj_p.assign(P.size(), DynBitset(Q.size()));
    g.adj_q.assign(Q.size(), DynBitset(P.size()));
    g.deg_p.assign(P.size(), 0);
    g.deg_q.assign(Q.size(), 0);

    std::map<std::string, std::vector<std::size_t>> classes;
    std::vector<std::string> class_order;

    for (std::size_t qi = 0; qi < Q.size(); ++qi) {
        SpecializedCurve sc = specialize(F, Q[qi], SpecializeSide::second);
        if (sc.degenerate) g.degenerate_q.push_back(qi);
        std::string key = curve_class_key(sc.curve);
        auto [it, inserted] = classes.emplace(key, std::vector<std::size_t>{});
        if (inserted) class_order.push_back(key);
        it->second.push_back(qi);

        CurveEvaluator ev(sc.curve, Var::x, Var::y);
        if (sc.degenerate) {
            for (std::size_t pi = 0; pi < P.size(); ++pi) {
                g.adj_p[pi].set(qi);
                g.adj_q[qi].set(pi);
                ++g.deg_p[pi];
                ++g.deg_q[qi];
                ++g.edges;
            }
            continue;
        }
        for (std::size_t pi = 0; pi < P.size(); ++pi) {
            if (ev.vanishes_at(P[pi].u, P[pi].v)) {
                g.adj_p[pi].set(qi);
                g.adj_q[qi].set(pi);
                ++g.deg_p[pi];
                ++g.deg_q[qi];
                ++g.edges;
            }
        }
    }
    for (const std::string& key : class_order) g.curve_classes.push_back(classes.at(key));
    return g;
}

IncidenceGraph incidence_graph(const Polynomial& F, const PointSet& P, const PointSet& Q) {
    return incidence_graph(F, P.points(), Q.points());
}

std::optional<KstWitness> kst_free_check(const IncidenceGraph& graph, std::size_t s,
                                         std::size_t t, unsigned long long budget) {
    if (s < 1 || t < 1) throw Error("kst_free_check requires s,t >= 1");

    // Enumerate subsets on the side with the cheaper subset count.
    auto capped_binom = [](std::size_t n, std::size_t k) -> unsigned long long {
        if (k > n) return 0;
        k = std::min(k, n - k);
        unsigned long long acc = 1;
        for (std::size_t i = 1; i <= k; ++i) {
            acc = acc * (n - k + i) / i;
            if (acc > (1ULL << 62)) return 1ULL << 62;
        }
        return acc;
    };
    bool enumerate_p = capped_binom(graph.n_p, s) <= capped_binom(graph.n_q, t);

    const std::vector<DynBitset>& adj = enumerate_p ? graph.adj_p : graph.adj_q;
    std::size_t n_enum = enumerate_p ? graph.n_p : graph.n_q;
    std::size_t pick = enumerate_p ? s : t;
    std::size_t need = enumerate_p ? t : s;

    if (n_enum < pick) return std::nullopt;

    unsigned long long steps = 0;
    std::vector<std::size_t> chosen;
    std::optional<KstWitness> found;

    // Depth-first subset enumeration with intersection pruning; the first
    // witness in lexicographic order wins, deterministically.
    auto rec = [&](auto&& self, std::size_t start, const DynBitset* inter) -> bool {
        if (chosen.size() == pick) {
            KstWitness w;
            std::vector<std::size_t> other = inter->collect(need);
            if (enumerate_p) {
                w.p_side = chosen;
                w.q_side = std::move(other);
            } else {
                w.q_side = chosen;
                w.p_side = std::move(other);
            }
            found = std::move(w);
            return true;
        }
        for (std::size_t v = start; v + (pick - chosen.size()) <= n_enum; ++v) {
            if (++steps > budget)
                throw ComplexityGuardError("K_{s,t} search exceeded budget of " +
                                           std::to_string(budget) + " subset-intersection steps");
            DynBitset next = inter ? (*inter & adj[v]) : adj[v];
            if (next.count() < need) continue;
            chosen.push_back(v);
            if (self(self, v + 1, &next)) return true;
            chosen.pop_back();
        }
        return false;
    };
    rec(rec, 0, nullptr);
    return found;
}

namespace {

// Greedy coloring in index order; returns part lists.
std::vector<std::vector<std::size_t>> greedy_parts(const std::vector<std::vector<std::size_t>>& adj) {
    std::size_t n = adj.size();
    std::vector<std::size_t> color(n, SIZE_MAX);
    std::size_t ncolors = 0;
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<bool> used(ncolors + 1, false);
        for (std::size_t u : adj[v])
            if (u < v && color[u] != SIZE_MAX && color[u] < used.size()) used[color[u]] = true;
        std::size_t c = 0;
        while (c < used.size() && used[c]) ++c;
        color[v] = c;
        ncolors = std::max(ncolors, c + 1);
    }
    std::vector<std::vector<std::size_t>> parts(ncolors);
    for (std::size_t v = 0; v < n; ++v) parts[color[v]].push_back(v);
    return parts;
}

IncidenceGraph subgraph(const IncidenceGraph& g, const std::vector<std::size_t>& p_idx,
                        const std::vector<std::size_t>& q_idx) {
    IncidenceGraph out;
    out.n_p = p_idx.size();
    out.n_q = q_idx.size();
    out.adj_p.assign(out.n_p, DynBitset(out.n_q));
    out.adj_q.assign(out.n_q, DynBitset(out.n_p));
    out.deg_p.assign(out.n_p, 0);
    out.deg_q.assign(out.n_q, 0);
    for (std::size_t i = 0; i < p_idx.size(); ++i) {
        for (std::size_t j = 0; j < q_idx.size(); ++j) {
            if (g.adj_p[p_idx[i]].test(q_idx[j])) {
                out.adj_p[i].set(j);
                out.adj_q[j].set(i);
                ++out.deg_p[i];
                ++out.deg_q[j];
                ++out.edges;
            }
        }
    }
    return out;
}

}  // namespace

RichPartition partition_rich(const Polynomial& F, const PointSet& P, const PointSet& Q,
                             std::size_t M) {
    if (F.is_zero()) throw ZeroPolynomialError();
    int d = F.total_degree();
    RichPartition out;
    out.rich_threshold = 2 * static_cast<std::size_t>(d) * M;
    out.part_bound = static_cast<std::size_t>(d) * M + 1;

    IncidenceGraph g = incidence_graph(F, P, Q);

    // Rich graph on P: edge when two points share >= 2dM curves C_q.
    std::vector<std::vector<std::size_t>> rich_p(P.size());
    for (std::size_t i = 0; i < P.size(); ++i) {
        for (std::size_t j = i + 1; j < P.size(); ++j) {
            if ((g.adj_p[i] & g.adj_p[j]).count() >= out.rich_threshold) {
                rich_p[i].push_back(j);
                rich_p[j].push_back(i);
            }
        }
    }
    out.p_parts = greedy_parts(rich_p);
    out.p_within_bound = out.p_parts.size() <= out.part_bound;

    // Poor set: curves through fewer than 2dM points of P.
    std::vector<std::size_t> q_rich;
    for (std::size_t qi = 0; qi < Q.size(); ++qi) {
        if (g.deg_q[qi] < out.rich_threshold)
            out.q_poor.push_back(qi);
        else
            q_rich.push_back(qi);
    }

    // Dual rich graph on the remaining q's.
    std::vector<std::vector<std::size_t>> rich_q(q_rich.size());
    for (std::size_t a = 0; a < q_rich.size(); ++a) {
        for (std::size_t b = a + 1; b < q_rich.size(); ++b) {
            if ((g.adj_q[q_rich[a]] & g.adj_q[q_rich[b]]).count() >= out.rich_threshold) {
                rich_q[a].push_back(b);
                rich_q[b].push_back(a);
            }
        }
    }
    std::vector<std::vector<std::size_t>> q_parts_local = greedy_parts(rich_q);
    for (const auto& part : q_parts_local) {
        std::vector<std::size_t> mapped;
        mapped.reserve(part.size());
        for (std::size_t a : part) mapped.push_back(q_rich[a]);
        out.q_parts.push_back(std::move(mapped));
    }
    out.q_within_bound = out.q_parts.size() <= out.part_bound;

    // Verification pass: every (P_i, Q_j) subgraph must be K_{2,2dM}- and
    // K_{2dM,2}-free by construction.
    for (const auto& p_part : out.p_parts) {
        for (const auto& q_part : out.q_parts) {
            IncidenceGraph sub = subgraph(g, p_part, q_part);
            if (kst_free_check(sub, 2, out.rich_threshold))
                throw std::logic_error("rich partition verification failed: K_{2,2dM} present");
            if (kst_free_check(sub, out.rich_threshold, 2))
                throw std::logic_error("rich partition verification failed: K_{2dM,2} present");
        }
    }
    return out;
}

}  // namespace gridzero
