#pragma once

// Test-only oracles and generators. The brute-force counter is the
// independent reference for every optimized counting path: it evaluates the
// full four-variable polynomials pair by pair and knows nothing about
// specialization, grouping or parallel reduction.

#include <gmpxx.h>

#include <random>
#include <set>
#include <vector>

#include "gridzero/parse.hpp"
#include "gridzero/point_set.hpp"
#include "gridzero/polynomial.hpp"

namespace gridzero::testing {

inline Polynomial poly(const char* text) { return parse_polynomial(text); }

inline GaussRational rat(long num, long den = 1) { return GaussRational::from_fraction(num, den); }

inline Point pt(long ux, long uy) { return Point{GaussRational(ux), GaussRational(uy)}; }

inline mpz_class brute_force_count(const std::vector<Polynomial>& system, const PointSet& P,
                                   const PointSet& Q) {
    mpz_class count = 0;
    for (const Point& p : P) {
        for (const Point& q : Q) {
            VarValues at{{Var::x, p.u}, {Var::y, p.v}, {Var::s, q.u}, {Var::t, q.v}};
            bool all_zero = true;
            for (const Polynomial& f : system) {
                if (!f.evaluate(at).is_zero()) {
                    all_zero = false;
                    break;
                }
            }
            if (all_zero) count += 1;
        }
    }
    return count;
}

inline mpz_class brute_force_count(const Polynomial& F, const PointSet& P, const PointSet& Q) {
    return brute_force_count(std::vector<Polynomial>{F}, P, Q);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng_);
    }

    GaussRational rational(long range = 6, long max_den = 3, int imaginary_percent = 10) {
        mpq_class re(integer(-range, range), integer(1, max_den));
        re.canonicalize();
        if (integer(0, 99) < imaginary_percent) {
            mpq_class im(integer(-range, range), integer(1, max_den));
            im.canonicalize();
            return {re, im};
        }
        return {re};
    }

    GaussRational nonzero_rational(long range = 6, long max_den = 3) {
        while (true) {
            GaussRational v = rational(range, max_den);
            if (!v.is_zero()) return v;
        }
    }

    Monomial monomial(VarMask vars, int max_degree) {
        Monomial m;
        int budget = max_degree;
        for (int i = 0; i < 4; ++i) {
            if (!(vars & (1u << i)) || budget == 0) continue;
            int e = static_cast<int>(integer(0, budget));
            m = m * Monomial::var(static_cast<Var>(i), e);
            budget -= e;
        }
        return m;
    }

    /// Random nonzero polynomial with support in `vars`.
    Polynomial polynomial(VarMask vars, int max_degree, int max_terms = 5) {
        while (true) {
            Polynomial p(vars);
            int k = static_cast<int>(integer(1, max_terms));
            for (int i = 0; i < k; ++i)
                p.add_term(nonzero_rational(4, 2), monomial(vars, max_degree));
            if (!p.is_zero()) return p;
        }
    }

    Polynomial nonconstant_polynomial(VarMask vars, int max_degree, int max_terms = 5) {
        while (true) {
            Polynomial p = polynomial(vars, max_degree, max_terms);
            if (!p.is_constant()) return p;
        }
    }

    Point point(long range = 12, long max_den = 3) {
        return Point{rational(range, max_den, 0), rational(range, max_den, 0)};
    }

    PointSet point_set(std::size_t n, long range = 50, long max_den = 3) {
        std::set<Point> seen;
        std::vector<Point> pts;
        while (pts.size() < n) {
            Point p = point(range, max_den);
            if (seen.insert(p).second) pts.push_back(p);
        }
        return PointSet(std::move(pts));
    }

    std::mt19937_64& raw() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// n x n integer grid [1..n]^2.
inline PointSet integer_grid(int n) {
    std::vector<Point> pts;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) pts.push_back(pt(i, j));
    return PointSet(std::move(pts));
}

}  // namespace gridzero::testing
