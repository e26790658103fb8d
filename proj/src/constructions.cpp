#include "gridzero/constructions.hpp"

#include <random>
#include <set>

#include "gridzero/errors.hpp"
#include "gridzero/parse.hpp"

namespace gridzero {
namespace {

Polynomial P(const char* text) { return parse_polynomial(text); }

std::vector<Point> integer_grid(unsigned cols, unsigned rows) {
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(cols) * rows);
    for (unsigned i = 1; i <= cols; ++i)
        for (unsigned j = 1; j <= rows; ++j)
            pts.push_back({GaussRational(static_cast<long>(i)), GaussRational(static_cast<long>(j))});
    return pts;
}

// Count of (j1, j2) in [1, h]^2 with j1 - j2 = gap, summed over the slope
// products; shared by the two slope-grid generators.
mpz_class slope_grid_count(unsigned lambda, unsigned mu) {
    mpz_class count = 0;
    long h = static_cast<long>(lambda) * static_cast<long>(mu);
    for (unsigned i1 = 1; i1 <= lambda; ++i1) {
        for (unsigned i2 = 1; i2 <= mu; ++i2) {
            long gap = static_cast<long>(i1) * static_cast<long>(i2);
            if (h > gap) count += h - gap;
        }
    }
    return count;
}

GaussRational small_rational(std::mt19937_64& rng, long num_range, long den_range) {
    std::uniform_int_distribution<long> num(-num_range, num_range);
    std::uniform_int_distribution<long> den(1, den_range);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return {q};
}

}  // namespace

ConstructionInstance elekes_grid(unsigned lambda, unsigned mu) {
    if (lambda < 1 || mu < 1) throw Error("elekes_grid requires lambda, mu >= 1");
    ConstructionInstance inst;
    inst.name = "elekes:" + std::to_string(lambda) + "," + std::to_string(mu);
    inst.system.push_back(P("x*s - y + t"));
    unsigned height = lambda * mu;
    inst.P = PointSet(integer_grid(lambda, height), "P");
    inst.Q = PointSet(integer_grid(mu, height), "Q");
    inst.predicted_count = slope_grid_count(lambda, mu);
    inst.provenance =
        "closed summation over slope products: sum_{i1<=lambda,i2<=mu} max(0, lambda*mu - i1*i2)";
    return inst;
}

ConstructionInstance elekes_degree_d(unsigned lambda, unsigned mu, unsigned d) {
    if (lambda < 1 || mu < 1 || d < 1) throw Error("elekes_degree_d requires positive parameters");
    ConstructionInstance inst;
    inst.name = "elekes-d:" + std::to_string(lambda) + "," + std::to_string(mu) + "," +
                std::to_string(d);
    inst.system.push_back(P("x*s + y - t"));
    unsigned height = lambda * mu;
    inst.P = PointSet(integer_grid(lambda, height), "P");
    inst.Q = PointSet(integer_grid(mu, height), "Q");
    inst.predicted_count = slope_grid_count(lambda, mu);
    inst.provenance =
        "integer surrogate for x*s + y^" + std::to_string(d) + " - t^" + std::to_string(d) +
        " on points (i, j^(1/" + std::to_string(d) +
        ")): the relation i1*i2 + j1 - j2 = 0 is counted over the same integer grids";
    return inst;
}

ConstructionInstance valtr_grid(unsigned lambda) {
    if (lambda < 1) throw Error("valtr_grid requires lambda >= 1");
    ConstructionInstance inst;
    inst.name = "valtr:" + std::to_string(lambda);
    inst.system.push_back(P("(x-s)^2 + y - t"));
    unsigned height = 2 * lambda * lambda;
    inst.P = PointSet(integer_grid(lambda, height), "P");
    inst.Q = PointSet(integer_grid(lambda, height), "Q");
    // t = (x-s)^2 + y must land in [1, 2*lambda^2]; y >= 1 makes the lower
    // end automatic.
    mpz_class count = 0;
    for (unsigned x = 1; x <= lambda; ++x) {
        for (unsigned s = 1; s <= lambda; ++s) {
            long shift = (static_cast<long>(x) - static_cast<long>(s)) *
                         (static_cast<long>(x) - static_cast<long>(s));
            if (static_cast<long>(height) > shift) count += static_cast<long>(height) - shift;
        }
    }
    inst.predicted_count = count;
    inst.provenance = "closed summation: sum_{x,s<=lambda} max(0, 2*lambda^2 - (x-s)^2)";
    return inst;
}

Polynomial GraphCurveSpec::as_polynomial(Var v) const {
    Polynomial out(mask_of(v));
    for (std::size_t e = 0; e < coeffs.size(); ++e)
        out.add_term(coeffs[e], Monomial::var(v, static_cast<int>(e)));
    return out;
}

GaussRational GraphCurveSpec::evaluate(const GaussRational& at) const {
    GaussRational acc(0);
    for (std::size_t e = coeffs.size(); e-- > 0;) acc = acc * at + coeffs[e];
    return acc;
}

ConstructionInstance cartesian_saturation(const GraphCurveSpec& gamma,
                                          const GraphCurveSpec& kappa, unsigned n,
                                          std::uint64_t seed) {
    if (n < 1) throw Error("cartesian_saturation requires n >= 1");
    if (gamma.coeffs.size() > 5 || kappa.coeffs.size() > 5)
        throw Error("graph curve degree is capped at 4");

    Polynomial G = Polynomial::variable(Var::y) - gamma.as_polynomial(Var::x);
    Polynomial K = Polynomial::variable(Var::t) - kappa.as_polynomial(Var::s);

    std::mt19937_64 rng(seed);
    auto random_poly = [&rng](int max_degree) {
        std::uniform_int_distribution<int> nterms(1, 4);
        std::uniform_int_distribution<int> expo(0, max_degree);
        std::uniform_int_distribution<int> coef(-4, 4);
        std::uniform_int_distribution<int> imag(0, 7);
        Polynomial p(kMaskAll);
        int k = nterms(rng);
        for (int i = 0; i < k; ++i) {
            Monomial m;
            int budget = max_degree;
            for (Var v : {Var::x, Var::y, Var::s, Var::t}) {
                int e = expo(rng) % (budget + 1);
                m = m * Monomial::var(v, e);
                budget -= e;
            }
            long c = coef(rng);
            if (c == 0) c = 1;
            GaussRational coeff(c);
            if (imag(rng) == 0) coeff = coeff * GaussRational::unit_i() + GaussRational(1);
            p.add_term(coeff, m);
        }
        return p;
    };

    Polynomial F, H, L;
    do {
        H = random_poly(2);
        L = random_poly(2);
        if (H.is_zero() || L.is_zero()) continue;
        F = G * H + K * L;
    } while (F.is_zero() || F.is_constant());

    ConstructionInstance inst;
    inst.name = "saturation:" + std::to_string(n) + "," + std::to_string(seed);
    inst.system.push_back(F);
    std::vector<Point> pp, qq;
    for (unsigned k = 1; k <= n; ++k) {
        GaussRational xk(static_cast<long>(k));
        pp.push_back({xk, gamma.evaluate(xk)});
        qq.push_back({xk, kappa.evaluate(xk)});
    }
    inst.P = PointSet(std::move(pp), "P");
    inst.Q = PointSet(std::move(qq), "Q");
    inst.predicted_count = mpz_class(static_cast<unsigned long>(n)) * n;
    inst.provenance = "F = G*H + K*L vanishes on all of Z(G) x Z(K), so the grid saturates: n^2";
    return inst;
}

ConstructionInstance generic_diagonal(unsigned n, std::uint64_t seed) {
    if (n < 1) throw Error("generic_diagonal requires n >= 1");
    std::mt19937_64 rng(seed);
    std::set<Point> seen;
    std::vector<Point> pts;
    long range = 8 * static_cast<long>(n);
    while (pts.size() < n) {
        Point p{small_rational(rng, range, 4), small_rational(rng, range, 4)};
        if (seen.insert(p).second) pts.push_back(std::move(p));
    }
    ConstructionInstance inst;
    inst.name = "diagonal:" + std::to_string(n) + "," + std::to_string(seed);
    inst.system.push_back(P("x - s"));
    inst.system.push_back(P("y - t"));
    inst.P = PointSet(pts, "P");
    inst.Q = PointSet(pts, "Q");
    inst.predicted_count = static_cast<unsigned long>(n);
    inst.provenance = "both projections of the sampled diagonal set are injective, so the count is n";
    return inst;
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

unsigned parse_unsigned(const std::string& s, const char* what) {
    try {
        unsigned long v = std::stoul(s);
        return static_cast<unsigned>(v);
    } catch (const std::exception&) {
        throw Error(std::string("bad ") + what + " in construct spec: '" + s + "'");
    }
}

GraphCurveSpec parse_graph_curve(const std::string& text, Var v) {
    Polynomial p = parse_polynomial(text);
    if (p.used_vars() & ~mask_of(v))
        throw Error("graph curve '" + text + "' must use only the variable " +
                    std::string(1, kVarNames[static_cast<int>(v)]));
    GraphCurveSpec spec;
    int deg = p.is_zero() ? 0 : p.degree_in(v);
    spec.coeffs.assign(static_cast<std::size_t>(std::max(deg, 0)) + 1, GaussRational(0));
    for (const auto& [m, c] : p.terms())
        spec.coeffs[static_cast<std::size_t>(m.exponent(v))] = c;
    return spec;
}

}  // namespace

ConstructionInstance build_construction(const std::string& spec) {
    std::size_t colon = spec.find(':');
    if (colon == std::string::npos)
        throw Error("construct spec must look like name:args, got '" + spec + "'");
    std::string name = spec.substr(0, colon);
    std::vector<std::string> args = split(spec.substr(colon + 1), ',');

    if (name == "elekes") {
        if (args.size() != 2) throw Error("elekes expects lambda,mu");
        return elekes_grid(parse_unsigned(args[0], "lambda"), parse_unsigned(args[1], "mu"));
    }
    if (name == "elekes-d") {
        if (args.size() != 3) throw Error("elekes-d expects lambda,mu,d");
        return elekes_degree_d(parse_unsigned(args[0], "lambda"), parse_unsigned(args[1], "mu"),
                               parse_unsigned(args[2], "d"));
    }
    if (name == "valtr") {
        if (args.size() != 1) throw Error("valtr expects lambda");
        return valtr_grid(parse_unsigned(args[0], "lambda"));
    }
    if (name == "saturation") {
        if (args.size() != 4) throw Error("saturation expects n,seed,gamma,kappa");
        GraphCurveSpec gamma = parse_graph_curve(args[2], Var::x);
        GraphCurveSpec kappa = parse_graph_curve(args[3], Var::s);
        return cartesian_saturation(gamma, kappa, parse_unsigned(args[0], "n"),
                                    parse_unsigned(args[1], "seed"));
    }
    if (name == "diagonal") {
        if (args.size() != 2) throw Error("diagonal expects n,seed");
        return generic_diagonal(parse_unsigned(args[0], "n"), parse_unsigned(args[1], "seed"));
    }
    throw Error("unknown construction '" + name + "'");
}

}  // namespace gridzero
