#include "gridzero/values.hpp"

#include <map>
#include <set>

#include "gridzero/errors.hpp"
#include "gridzero/gcd.hpp"

namespace gridzero {

IncidenceReport repeated_values(const Polynomial& F, const PointSet& P, const GaussRational& a,
                                const CountOptions& opts) {
    Polynomial shifted = F - Polynomial::constant(a);
    if (shifted.is_zero())
        throw ZeroPolynomialError("F is identically equal to the probed value");
    return count_intersections(shifted, P, P, opts);
}

DistinctValuesResult distinct_values(const Polynomial& F, const PointSet& P, bool with_values) {
    if (F.is_zero()) throw ZeroPolynomialError();
    DistinctValuesResult out;
    out.n_p = P.size();

    std::set<GaussRational> seen;
    std::size_t per_point_max = 0;
    for (const Point& p : P) {
        VarValues left;
        left.set(Var::x, p.u);
        left.set(Var::y, p.v);
        Polynomial row = F.eval_partial(left);
        std::set<GaussRational> row_values;
        for (const Point& q : P) {
            VarValues right;
            right.set(Var::s, q.u);
            right.set(Var::t, q.v);
            GaussRational value = row.evaluate(right);
            row_values.insert(value);
            seen.insert(std::move(value));
        }
        per_point_max = std::max(per_point_max, row_values.size());
    }
    out.count = static_cast<unsigned long>(seen.size());
    out.per_point_max = static_cast<unsigned long>(per_point_max);
    out.p_two_thirds = power_two_thirds(mpz_class(static_cast<unsigned long>(P.size())));
    out.ratio = Fixed30::ratio(out.count, out.p_two_thirds);
    if (with_values) out.values.assign(seen.begin(), seen.end());
    return out;
}

IncidenceReport map_fiber(const Polynomial& F1, const Polynomial& F2, const PointSet& P,
                          const GaussRational& a, const GaussRational& b,
                          const CountOptions& opts) {
    Polynomial s1 = F1 - Polynomial::constant(a);
    Polynomial s2 = F2 - Polynomial::constant(b);
    if (s1.is_zero() || s2.is_zero())
        throw ZeroPolynomialError("a map component is identically the probed value");
    std::vector<Polynomial> system{s1, s2};
    return count_intersections(std::span<const Polynomial>(system), P, P, opts);
}

MapDistinctResult map_distinct_values(const Polynomial& F1, const Polynomial& F2,
                                      const PointSet& P, bool with_values) {
    if (F1.is_zero() || F2.is_zero()) throw ZeroPolynomialError();
    MapDistinctResult out;
    out.n_p = P.size();

    std::set<std::pair<GaussRational, GaussRational>> seen;
    for (const Point& p : P) {
        VarValues left;
        left.set(Var::x, p.u);
        left.set(Var::y, p.v);
        Polynomial row1 = F1.eval_partial(left);
        Polynomial row2 = F2.eval_partial(left);
        for (const Point& q : P) {
            VarValues right;
            right.set(Var::s, q.u);
            right.set(Var::t, q.v);
            seen.emplace(row1.evaluate(right), row2.evaluate(right));
        }
    }
    out.count = static_cast<unsigned long>(seen.size());
    if (!P.empty()) {
        out.ratio = mpq_class(out.count, mpz_class(static_cast<unsigned long>(P.size())));
        out.ratio.canonicalize();
    }
    if (with_values) out.values.assign(seen.begin(), seen.end());
    return out;
}

FiberProbeResult fiber_probe(const Polynomial& F1, const Polynomial& F2, const Point& q) {
    if (F1.is_zero() || F2.is_zero()) throw ZeroPolynomialError();
    VarValues at;
    at.set(Var::s, q.u);
    at.set(Var::t, q.v);
    Polynomial s1 = F1.eval_partial(at);
    Polynomial s2 = F2.eval_partial(at);

    FiberProbeResult out;
    if (s1.is_zero() && s2.is_zero()) {
        out.kind = FiberProbeResult::Kind::contains_curve;
        out.curve = Polynomial();  // whole-plane marker
        return out;
    }
    if ((s1.is_constant() && !s1.is_zero()) || (s2.is_constant() && !s2.is_zero())) {
        out.kind = FiberProbeResult::Kind::empty;
        return out;
    }
    std::vector<Polynomial> nonzero;
    if (!s1.is_zero()) nonzero.push_back(s1);
    if (!s2.is_zero()) nonzero.push_back(s2);
    Polynomial g = gcd_many(nonzero);
    if (!g.is_constant()) {
        out.kind = FiberProbeResult::Kind::contains_curve;
        out.curve = g;
        return out;
    }
    out.kind = FiberProbeResult::Kind::finite_with_bound;
    mpz_class bound = 1;
    for (const Polynomial& p : nonzero) bound *= p.total_degree();
    out.bound = bound;
    return out;
}

}  // namespace gridzero
