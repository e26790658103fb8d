#include "gridzero/cartesian.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "gridzero/errors.hpp"

namespace gridzero {
namespace {

void require_domain(const Polynomial& p, VarMask allowed, const char* name,
                    const char* domain) {
    if (p.used_vars() & ~allowed)
        throw VariableDomainError(std::string(name) + " must be a polynomial in " + domain);
}

// Shared core of the 1-D and 2-D tests: F = G*Hdiv + R, then test K | R_ij
// cell by cell over the (x,y) expansion of R.
CartesianOutcome divide_and_check(const Polynomial& F, const Polynomial& G, const Polynomial& K,
                                  bool g_reduced, bool k_reduced, const MonomialOrder& order) {
    DivisionResult div = divide_single(F, G, order);
    CoefficientDecomposition rem = coefficient_decompose(div.remainder, BasePair::xy);

    Polynomial L;
    for (const auto& [ij, r_ij] : rem.coefficients) {
        if (r_ij.is_zero()) continue;
        auto quotient = exact_divide(r_ij, K);
        if (!quotient) {
            DivisionResult probe = divide_single(r_ij, K, order);
            FailureCertificate cert;
            cert.i = ij.first;
            cert.j = ij.second;
            cert.residue = r_ij;
            cert.reduction_remainder = probe.remainder;
            cert.note = "remainder coefficient at x^" + std::to_string(ij.first) + "*y^" +
                        std::to_string(ij.second) + " is not divisible by K";
            return cert;
        }
        Monomial cell = Monomial::var(Var::x, ij.first) * Monomial::var(Var::y, ij.second);
        L += *quotient * Polynomial::term(GaussRational(1), cell);
    }

    CartesianWitness w;
    w.g = G;
    w.k = K;
    w.h = div.quotient;
    w.l = L;
    w.g_reduced = g_reduced;
    w.k_reduced = k_reduced;
    if (w.assemble() != F)
        throw std::logic_error("witness identity failed to re-multiply; division is broken");
    if (order.respects_degree()) {
        assert(w.h.is_zero() || w.h.total_degree() <= F.total_degree() - G.total_degree());
        assert(w.l.is_zero() || w.l.total_degree() <= F.total_degree() - K.total_degree());
    }
    return w;
}

}  // namespace

CartesianOutcome alon_1d_test(const Polynomial& f, const Polynomial& g, const Polynomial& k,
                              bool reduce_to_squarefree, const MonomialOrder& order) {
    if (f.is_zero()) throw ZeroPolynomialError();
    if (g.is_constant() || k.is_constant()) throw ConstantDivisorError();
    require_domain(f, kMaskXY, "f", "(x,y)");
    require_domain(g, mask_of(Var::x), "g", "x");
    require_domain(k, mask_of(Var::y), "k", "y");

    Polynomial g2 = g, k2 = k;
    bool g_reduced = false, k_reduced = false;
    if (!is_squarefree(g)) {
        if (!reduce_to_squarefree) throw NotSquarefreeError("g");
        g2 = squarefree_part(g).part;
        g_reduced = true;
    }
    if (!is_squarefree(k)) {
        if (!reduce_to_squarefree) throw NotSquarefreeError("k");
        k2 = squarefree_part(k).part;
        k_reduced = true;
    }

    // Divide by g, then expand the remainder along powers of x: each
    // coefficient r_i(y) must be divisible by k.
    DivisionResult div = divide_single(f, g2, order);
    Polynomial l;
    for (const auto& [e, r_i] : div.remainder.univariate_view(Var::x)) {
        if (r_i.is_zero()) continue;
        auto quotient = exact_divide(r_i, k2);
        if (!quotient) {
            DivisionResult probe = divide_single(r_i, k2, order);
            FailureCertificate cert;
            cert.i = e;
            cert.j = 0;
            cert.residue = r_i;
            cert.reduction_remainder = probe.remainder;
            cert.note = "remainder coefficient at x^" + std::to_string(e) +
                        " is not divisible by k";
            return cert;
        }
        l += *quotient * Polynomial::term(GaussRational(1), Monomial::var(Var::x, e));
    }
    CartesianWitness w;
    w.g = g2;
    w.k = k2;
    w.h = div.quotient;
    w.l = l;
    w.g_reduced = g_reduced;
    w.k_reduced = k_reduced;
    if (w.assemble() != f)
        throw std::logic_error("witness identity failed to re-multiply; division is broken");
    return w;
}

CartesianOutcome cartesian_test(const Polynomial& F, const Polynomial& G, const Polynomial& K,
                                const MonomialOrder& order) {
    if (F.is_zero()) throw ZeroPolynomialError();
    if (G.is_constant() || K.is_constant()) throw ConstantDivisorError();
    require_domain(G, kMaskXY, "G", "(x,y)");
    require_domain(K, kMaskST, "K", "(s,t)");

    SquarefreeResult gs = squarefree_part(G);
    SquarefreeResult ks = squarefree_part(K);
    Polynomial g2 = gs.was_squarefree ? G : gs.part;
    Polynomial k2 = ks.was_squarefree ? K : ks.part;
    return divide_and_check(F, g2, k2, !gs.was_squarefree, !ks.was_squarefree, order);
}

std::optional<CartesianWitness> trivial_cartesian_probe(const Polynomial& F) {
    if (F.is_zero()) throw ZeroPolynomialError();

    // K-side: common factor of the coefficients of the (x,y) expansion.
    {
        CoefficientDecomposition dec = coefficient_decompose(F, BasePair::xy);
        std::vector<Polynomial> coeffs;
        for (const auto& [ij, c] : dec.coefficients) coeffs.push_back(c);
        Polynomial k = gcd_many(coeffs);
        if (!k.is_constant()) {
            CartesianWitness w;
            w.k = k;
            auto l = exact_divide(F, k);
            assert(l.has_value());
            w.l = *l;
            w.g = Polynomial::variable(Var::x);
            w.h = Polynomial::zero(kMaskAll);
            if (w.assemble() != F) throw std::logic_error("trivial K-side witness broken");
            return w;
        }
    }
    // G-side, symmetrically over the (s,t) expansion.
    {
        CoefficientDecomposition dec = coefficient_decompose(F, BasePair::st);
        std::vector<Polynomial> coeffs;
        for (const auto& [ij, c] : dec.coefficients) coeffs.push_back(c);
        Polynomial g = gcd_many(coeffs);
        if (!g.is_constant()) {
            CartesianWitness w;
            w.g = g;
            auto h = exact_divide(F, g);
            assert(h.has_value());
            w.h = *h;
            w.k = Polynomial::variable(Var::s);
            w.l = Polynomial::zero(kMaskAll);
            if (w.assemble() != F) throw std::logic_error("trivial G-side witness broken");
            return w;
        }
    }
    return std::nullopt;
}

std::vector<Point> degenerate_points(const Polynomial& F, const PointSet& candidates) {
    if (F.is_zero()) throw ZeroPolynomialError();
    CoefficientDecomposition dec = coefficient_decompose(F, BasePair::xy);

    std::vector<Point> out;
    for (const Point& q : candidates) {
        VarValues at{{Var::s, q.u}, {Var::t, q.v}};
        bool all_zero = true;
        for (const auto& [ij, coeff] : dec.coefficients) {
            if (!coeff.evaluate(at).is_zero()) {
                all_zero = false;
                break;
            }
        }
        if (all_zero) out.push_back(q);
    }

    int d = F.total_degree();
    if (out.size() > static_cast<std::size_t>(d) * static_cast<std::size_t>(d)) {
        // More than d^2 common zeros forces a common factor of the F_ij.
        if (!trivial_cartesian_probe(F))
            throw std::logic_error("degenerate point count exceeds d^2 without a trivial factor");
    }
    return out;
}

namespace {

std::vector<Monomial> monomials_up_to(int d, BasePair base) {
    auto [u, v] = base_vars(base);
    std::vector<Monomial> out;
    for (int total = 0; total <= d; ++total)
        for (int i = 0; i <= total; ++i)
            out.push_back(Monomial::var(u, i) * Monomial::var(v, total - i));
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return GlobalMonomialLess{}(a, b); });
    return out;
}

// Nullspace element with minimal leading monomial: eliminate with columns in
// ascending order; the first dependent column yields the canonical curve.
std::optional<Polynomial> min_curve_through(const std::vector<Point>& pts, int d, BasePair base) {
    auto [u, v] = base_vars(base);
    std::vector<Monomial> cols = monomials_up_to(d, base);
    const std::size_t n_rows = pts.size(), n_cols = cols.size();

    std::vector<std::vector<GaussRational>> m(n_rows, std::vector<GaussRational>(n_cols));
    for (std::size_t r = 0; r < n_rows; ++r) {
        VarValues at;
        at.set(u, pts[r].u);
        at.set(v, pts[r].v);
        for (std::size_t c = 0; c < n_cols; ++c)
            m[r][c] = Polynomial::term(GaussRational(1), cols[c]).evaluate(at);
    }

    std::vector<std::size_t> pivot_row_of_col(n_cols, SIZE_MAX);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n_cols; ++c) {
        // Find a pivot for this column below the current rank.
        std::size_t pr = SIZE_MAX;
        for (std::size_t r = rank; r < n_rows; ++r) {
            if (!m[r][c].is_zero()) {
                pr = r;
                break;
            }
        }
        if (pr == SIZE_MAX) {
            // Dependent column: skipping the constant monomial (an all-zero
            // column can only be the constant if pts is empty).
            if (cols[c].is_one()) continue;
            // Back-substitute to express col c in earlier pivot columns.
            Polynomial curve;
            curve.add_term(GaussRational(1), cols[c]);
            // Solve U * w = column_c restricted to pivot rows.
            std::vector<GaussRational> rhs(rank);
            for (std::size_t r = 0; r < rank; ++r) rhs[r] = m[r][c];
            // m rows 0..rank-1 are in echelon form over pivot columns.
            std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
            for (std::size_t pc = 0; pc < c; ++pc)
                if (pivot_row_of_col[pc] != SIZE_MAX) pivots.emplace_back(pivot_row_of_col[pc], pc);
            for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
                auto [r, pc] = *it;
                GaussRational w = rhs[r] / m[r][pc];
                if (!w.is_zero()) curve.add_term(-w, cols[pc]);
                for (std::size_t rr = 0; rr < r; ++rr) rhs[rr] -= m[rr][pc] * w;
            }
            return curve;
        }
        if (pr != rank) std::swap(m[pr], m[rank]);
        pivot_row_of_col[c] = rank;
        for (std::size_t r = rank + 1; r < n_rows; ++r) {
            if (m[r][c].is_zero()) continue;
            GaussRational factor = m[r][c] / m[rank][c];
            for (std::size_t cc = c; cc < n_cols; ++cc) m[r][cc] -= factor * m[rank][cc];
        }
        ++rank;
    }
    return std::nullopt;
}

unsigned long binomial_capped(std::size_t n, std::size_t k, unsigned long cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long acc = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > cap) return cap + 1;
    }
    return static_cast<unsigned long>(acc);
}

}  // namespace

FitOutcome fit_vanishing_curve(const PointSet& pts, int d, BasePair base,
                               unsigned long subset_budget) {
    if (d < 1) throw Error("fit_vanishing_curve requires degree >= 1");
    FitOutcome out;

    auto direct = min_curve_through(pts.points(), d, base);
    if (direct) {
        out.status = FitOutcome::Status::found;
        out.curve = make_monic(*direct);
        out.subset_used = pts.size();
        return out;
    }

    // Near-coverage fallback: drop (d-1)^2 points and retry, exactly.
    std::size_t drop = static_cast<std::size_t>(d - 1) * static_cast<std::size_t>(d - 1);
    if (drop == 0 || drop >= pts.size()) {
        out.status = FitOutcome::Status::none;
        return out;
    }
    if (binomial_capped(pts.size(), drop, subset_budget) > subset_budget) {
        out.status = FitOutcome::Status::not_attempted;
        return out;
    }

    std::size_t keep = pts.size() - drop;
    std::vector<std::size_t> idx(keep);
    // Enumerate keep-subsets in lexicographic order; first success wins.
    for (std::size_t i = 0; i < keep; ++i) idx[i] = i;
    while (true) {
        std::vector<Point> subset;
        subset.reserve(keep);
        for (std::size_t i : idx) subset.push_back(pts[i]);
        auto fit = min_curve_through(subset, d, base);
        if (fit) {
            out.status = FitOutcome::Status::found;
            out.curve = make_monic(*fit);
            out.subset_used = keep;
            return out;
        }
        // Next combination.
        std::size_t i = keep;
        while (i > 0) {
            --i;
            if (idx[i] != i + pts.size() - keep) {
                ++idx[i];
                for (std::size_t j = i + 1; j < keep; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return out;  // exhausted; status already none
        }
    }
}

GridWitnessResult grid_witness_to_cartesian(const Polynomial& F, const PointSet& I,
                                            const PointSet& J) {
    if (F.is_zero()) throw ZeroPolynomialError();
    int d = F.total_degree();
    std::size_t dd = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
    if (I.size() <= dd || J.size() <= dd)
        throw GridTooSmallError("need |I|,|J| > d^2 = " + std::to_string(dd) + ", got |I|=" +
                                std::to_string(I.size()) + ", |J|=" + std::to_string(J.size()));
    for (const Point& p : I) {
        for (const Point& q : J) {
            VarValues at{{Var::x, p.u}, {Var::y, p.v}, {Var::s, q.u}, {Var::t, q.v}};
            if (!F.evaluate(at).is_zero())
                throw GridNotContainedError("F(p,q) != 0 at p=" + p.str() + ", q=" + q.str());
        }
    }

    GridWitnessResult res;
    auto coverage = [](const Polynomial& curve, const PointSet& pts, Var u, Var v) {
        std::size_t n = 0;
        for (const Point& p : pts) {
            VarValues at;
            at.set(u, p.u);
            at.set(v, p.v);
            if (curve.evaluate(at).is_zero()) ++n;
        }
        return n;
    };

    FitOutcome fit_g = fit_vanishing_curve(I, d, BasePair::xy);
    FitOutcome fit_k = fit_vanishing_curve(J, d, BasePair::st);
    if (fit_g.status != FitOutcome::Status::found || fit_k.status != FitOutcome::Status::found) {
        res.failure_reason = "no vanishing curve found through the grid sides";
        return res;
    }

    CartesianOutcome outcome = cartesian_test(F, fit_g.curve, fit_k.curve);
    if (succeeded(outcome)) {
        res.success = true;
        res.witness = std::get<CartesianWitness>(outcome);
        res.coverage_i = coverage(res.witness.g, I, Var::x, Var::y);
        res.coverage_j = coverage(res.witness.k, J, Var::s, Var::t);
        return res;
    }

    // Direct pair failed; retry with curves fitted through near-full
    // subsets (|pts| - (d-1)^2 points), collecting distinct candidates.
    auto subset_candidates = [&](const PointSet& pts, BasePair base,
                                 std::vector<Polynomial>& cands) {
        std::size_t drop = static_cast<std::size_t>(d - 1) * static_cast<std::size_t>(d - 1);
        if (drop == 0 || drop >= pts.size()) return;
        if (binomial_capped(pts.size(), drop, 1000000) > 1000000UL) return;
        std::size_t keep = pts.size() - drop;
        std::vector<std::size_t> idx(keep);
        for (std::size_t i = 0; i < keep; ++i) idx[i] = i;
        std::size_t fits_tried = 0;
        while (fits_tried < 512 && cands.size() < 16) {
            std::vector<Point> subset;
            subset.reserve(keep);
            for (std::size_t i : idx) subset.push_back(pts[i]);
            auto fit = min_curve_through(subset, d, base);
            ++fits_tried;
            if (fit) {
                Polynomial c = make_monic(*fit);
                bool known = false;
                for (const Polynomial& seen : cands)
                    if (seen == c) known = true;
                if (!known) cands.push_back(std::move(c));
            }
            std::size_t i = keep;
            bool advanced = false;
            while (i > 0) {
                --i;
                if (idx[i] != i + pts.size() - keep) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < keep; ++j) idx[j] = idx[j - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
    };

    std::vector<Polynomial> g_candidates{fit_g.curve};
    std::vector<Polynomial> k_candidates{fit_k.curve};
    subset_candidates(I, BasePair::xy, g_candidates);
    subset_candidates(J, BasePair::st, k_candidates);
    for (const Polynomial& g : g_candidates) {
        for (const Polynomial& k : k_candidates) {
            CartesianOutcome o = cartesian_test(F, g, k);
            if (!succeeded(o)) continue;
            res.success = true;
            res.witness = std::get<CartesianWitness>(o);
            res.coverage_i = coverage(res.witness.g, I, Var::x, Var::y);
            res.coverage_j = coverage(res.witness.k, J, Var::s, Var::t);
            return res;
        }
    }
    res.failure_reason = "fitted curves do not certify a decomposition over Q(i)";
    return res;
}

}  // namespace gridzero
