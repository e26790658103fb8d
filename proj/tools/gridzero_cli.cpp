// Command-line front end: expression parsing, point-set IO, experiment
// commands, JSON reporting. Exit codes: 0 success, 1 usage error, 2
// mathematical failure certificate (e.g. a non-decomposable instance).

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "gridzero/cartesian.hpp"
#include "gridzero/constructions.hpp"
#include "gridzero/csv.hpp"
#include "gridzero/errors.hpp"
#include "gridzero/incidence.hpp"
#include "gridzero/parse.hpp"
#include "gridzero/report_json.hpp"
#include "gridzero/values.hpp"

namespace gz = gridzero;
using gz::Json;

namespace {

struct CommonOpts {
    std::string out;
    std::string order = "grevlex";
    int threads = 1;
    bool timing = false;
    bool explain = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--out", opts.out, "write the JSON report to this path (default: stdout)");
    cmd->add_option("--order", opts.order, "monomial order: lex, grlex or grevlex")
        ->check(CLI::IsMember({"lex", "grlex", "grevlex"}));
    cmd->add_option("--threads", opts.threads, "worker threads for the counting loops")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--timing", opts.timing,
                  "include wall-clock timing in the report (off keeps reports byte-identical)");
    cmd->add_flag("--explain", opts.explain, "print what this subcommand computes and exit");
}

gz::MonomialOrder order_from(const CommonOpts& opts) {
    gz::MonomialOrder order;
    if (opts.order == "lex") order.kind = gz::OrderKind::lex;
    else if (opts.order == "grlex") order.kind = gz::OrderKind::grlex;
    else order.kind = gz::OrderKind::grevlex;
    return order;
}

class Report {
public:
    Report(std::string command, const CommonOpts& opts) : opts_(opts) {
        json_["schema"] = 1;
        json_["command"] = std::move(command);
        start_ = std::chrono::steady_clock::now();
    }

    Json& inputs() { return json_["inputs"]; }
    void set_result(Json result) { json_["result"] = std::move(result); }

    int finish(int exit_code) {
        if (opts_.timing) {
            auto elapsed = std::chrono::steady_clock::now() - start_;
            json_["timing_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        }
        json_["exit_code"] = exit_code;
        std::string text = json_.dump(2);
        text += '\n';
        if (opts_.out.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(opts_.out);
            if (!out) throw gz::Error("cannot open output file: " + opts_.out);
            out << text;
        }
        return exit_code;
    }

private:
    Json json_;
    CommonOpts opts_;
    std::chrono::steady_clock::time_point start_;
};

gz::Polynomial parse_poly_arg(const std::string& text, const char* what) {
    try {
        return gz::parse_polynomial(text);
    } catch (const gz::SyntaxError& e) {
        throw gz::Error(std::string("in ") + what + ": " + e.what());
    }
}

struct PointsSource {
    std::string path;      // CSV file, or
    std::string construct; // construct spec providing P and Q
};

// Emit the incident pairs as CSV next to the JSON report.
void write_pairs_csv(const std::string& path, const gz::IncidenceReport& report,
                     const gz::PointSet& P, const gz::PointSet& Q) {
    std::ofstream out(path);
    if (!out) throw gz::Error("cannot open pair output file: " + path);
    out << "p_index,q_index,px,py,qx,qy\n";
    for (auto [pi, qi] : report.pairs) {
        const gz::Point& p = P[pi];
        const gz::Point& q = Q[qi];
        out << pi << "," << qi << "," << p.u.str() << "," << p.v.str() << "," << q.u.str() << ","
            << q.v.str() << "\n";
    }
}

std::string explain_text(const std::string& command) {
    if (command == "cartesian-test")
        return "Divides F by G under the chosen monomial order, expands the remainder as "
               "sum R_ij(s,t) x^i y^j and tests whether K divides every R_ij. Success yields "
               "H and L with F = G*H + K*L, re-multiplied and verified exactly; failure names "
               "a remainder coefficient that K does not divide.";
    if (command == "grid-witness")
        return "Checks I x J is contained in Z(F) and |I|,|J| > deg(F)^2, fits minimal "
               "vanishing curves G through I and K through J, and certifies F = G*H + K*L via "
               "the division test, reporting |I ∩ Z(G)| and |J ∩ Z(K)|.";
    if (command == "count")
        return "Counts pairs (p,q) with every system polynomial vanishing, by exact rational "
               "evaluation with per-q specialization reuse; reports the count against the "
               "|P|^(2/3)|Q|^(2/3) + |P| + |Q| and |P| + |Q| envelopes.";
    if (command == "incidence")
        return "Builds the bipartite graph with an edge (p,q) when F(p,q) = 0, groups the "
               "specialized curves into identity classes by proportional squarefree parts, "
               "flags identically-zero specializations, and searches K_{s,t} exhaustively.";
    if (command == "partition")
        return "Splits P so no part has two points sharing 2dM or more curves C_q, removes "
               "the q whose curves meet fewer than 2dM points of P, splits the rest of Q "
               "dually, and verifies every block pair is K_{2,2dM}- and K_{2dM,2}-free.";
    if (command == "values")
        return "repeated: counts ordered pairs with F(p,q) = a as |Z(F-a) ∩ (P x P)|. "
               "distinct: evaluates all pairs exactly and deduplicates. map modes do the same "
               "for the pair map (F1,F2) with a gcd coprimality diagnostic.";
    if (command == "construct")
        return "Generates a named extremal instance together with its predicted exact count "
               "(closed summation or by construction) and optionally verifies the prediction "
               "by counting.";
    if (command == "probe")
        return "trivial: looks for one-sided factors K(s,t) | F or G(x,y) | F via gcds of "
               "expansion coefficients. degenerate: finds candidate q where F(.,.,q) vanishes "
               "identically. fiber: classifies the fiber of (F1,F2) over one point as empty, "
               "finite with a Bezout bound, or containing a curve.";
    return "";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counting of |Z(F) ∩ (P x Q)| for planar point sets, Cartesian "
                 "decomposition tests over Q(i), and extremal grid constructions"};
    app.require_subcommand(1);

    // cartesian-test
    auto* cmd_ct = app.add_subcommand("cartesian-test", "test F = G*H + K*L for given G, K");
    CommonOpts ct_opts;
    std::string ct_poly, ct_g, ct_k;
    cmd_ct->add_option("--poly", ct_poly, "F in x,y,s,t");
    cmd_ct->add_option("--g", ct_g, "G in x,y");
    cmd_ct->add_option("--k", ct_k, "K in s,t");
    add_common(cmd_ct, ct_opts);

    // grid-witness
    auto* cmd_gw = app.add_subcommand("grid-witness", "recover (G,K) from a grid I x J in Z(F)");
    CommonOpts gw_opts;
    std::string gw_poly, gw_i, gw_j;
    cmd_gw->add_option("--poly", gw_poly, "F in x,y,s,t");
    cmd_gw->add_option("--i", gw_i, "CSV of the I side");
    cmd_gw->add_option("--j", gw_j, "CSV of the J side");
    add_common(cmd_gw, gw_opts);

    // count
    auto* cmd_count = app.add_subcommand("count", "count |Z(system) ∩ (P x Q)| exactly");
    CommonOpts count_opts;
    std::string count_poly, count_poly2, count_p, count_q, count_construct, count_pairs_out;
    cmd_count->add_option("--poly", count_poly, "F (optional when --construct is given)");
    cmd_count->add_option("--poly2", count_poly2, "second system polynomial");
    cmd_count->add_option("--p", count_p, "CSV of P");
    cmd_count->add_option("--q", count_q, "CSV of Q");
    cmd_count->add_option("--construct", count_construct,
                          "take polynomial and points from a construction, e.g. elekes:3,3");
    cmd_count->add_option("--emit-pairs", count_pairs_out, "write incident pairs to this CSV");
    add_common(cmd_count, count_opts);

    // incidence
    auto* cmd_inc = app.add_subcommand("incidence", "incidence graph and K_{s,t} analysis");
    CommonOpts inc_opts;
    std::string inc_poly, inc_p, inc_q;
    std::size_t inc_s = 2, inc_t = 2;
    unsigned long long inc_budget = 10000000ULL;
    cmd_inc->add_option("--poly", inc_poly);
    cmd_inc->add_option("--p", inc_p, "CSV of P");
    cmd_inc->add_option("--q", inc_q, "CSV of Q");
    cmd_inc->add_option("--s", inc_s, "left size of the K_{s,t} search");
    cmd_inc->add_option("--t", inc_t, "right size of the K_{s,t} search");
    cmd_inc->add_option("--kst-budget", inc_budget, "subset-intersection step budget");
    add_common(cmd_inc, inc_opts);

    // partition
    auto* cmd_part = app.add_subcommand("partition", "rich-pair partition of P and Q");
    CommonOpts part_opts;
    std::string part_poly, part_p, part_q;
    std::size_t part_m = 0;
    cmd_part->add_option("--poly", part_poly);
    cmd_part->add_option("--p", part_p);
    cmd_part->add_option("--q", part_q);
    cmd_part->add_option("--m", part_m, "richness parameter M (M > deg(F)^2 recommended)");
    add_common(cmd_part, part_opts);

    // values
    auto* cmd_val = app.add_subcommand("values", "repeated/distinct values of F or (F1,F2)");
    CommonOpts val_opts;
    std::string val_mode, val_poly, val_poly2, val_points, val_a, val_b;
    bool val_list = false;
    cmd_val->add_option("--mode", val_mode, "repeated | distinct | map-fiber | map-distinct")
        ->check(CLI::IsMember({"repeated", "distinct", "map-fiber", "map-distinct"}));
    cmd_val->add_option("--poly", val_poly);
    cmd_val->add_option("--poly2", val_poly2, "second map component (map modes)");
    cmd_val->add_option("--points", val_points, "CSV of P");
    cmd_val->add_option("--a", val_a, "probed value (repeated/map-fiber)");
    cmd_val->add_option("--b", val_b, "second probed coordinate (map-fiber)");
    cmd_val->add_flag("--list", val_list, "include the value list in the report");
    add_common(cmd_val, val_opts);

    // construct
    auto* cmd_con = app.add_subcommand("construct", "generate an extremal instance");
    CommonOpts con_opts;
    std::string con_spec, con_export_p, con_export_q;
    bool con_verify = false;
    cmd_con->add_option("--spec", con_spec,
                        "elekes:L,M | elekes-d:L,M,D | valtr:L | saturation:N,SEED,GAMMA,KAPPA | "
                        "diagonal:N,SEED");
    cmd_con->add_option("--export-p", con_export_p, "write P to this CSV");
    cmd_con->add_option("--export-q", con_export_q, "write Q to this CSV");
    cmd_con->add_flag("--verify", con_verify, "count the instance and compare to the prediction");
    add_common(cmd_con, con_opts);

    // probe
    auto* cmd_probe = app.add_subcommand("probe", "trivial factor / degenerate points / fiber");
    CommonOpts probe_opts;
    std::string probe_mode, probe_poly, probe_poly2, probe_points, probe_qx, probe_qy;
    cmd_probe->add_option("--mode", probe_mode, "trivial | degenerate | fiber")
        ->check(CLI::IsMember({"trivial", "degenerate", "fiber"}));
    cmd_probe->add_option("--poly", probe_poly);
    cmd_probe->add_option("--poly2", probe_poly2, "second polynomial (fiber mode)");
    cmd_probe->add_option("--points", probe_points, "CSV of candidate points (degenerate mode)");
    cmd_probe->add_option("--qx", probe_qx, "fiber point s-coordinate");
    cmd_probe->add_option("--qy", probe_qy, "fiber point t-coordinate");
    add_common(cmd_probe, probe_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        for (const auto* sub : app.get_subcommands()) {
            // --explain short-circuits before any input validation.
            if (sub->count("--explain") > 0) {
                std::cout << explain_text(sub->get_name()) << "\n";
                return 0;
            }
        }

        if (cmd_ct->parsed()) {
            if (ct_poly.empty() || ct_g.empty() || ct_k.empty())
                throw gz::Error("cartesian-test needs --poly, --g and --k");
            Report report("cartesian-test", ct_opts);
            gz::Polynomial F = parse_poly_arg(ct_poly, "--poly");
            gz::Polynomial G = parse_poly_arg(ct_g, "--g");
            gz::Polynomial K = parse_poly_arg(ct_k, "--k");
            report.inputs() = Json{{"poly", F.str()}, {"g", G.str()}, {"k", K.str()},
                                   {"order", order_from(ct_opts).str()}};
            gz::CartesianOutcome outcome = gz::cartesian_test(F, G, K, order_from(ct_opts));
            report.set_result(gz::to_json(outcome));
            return report.finish(gz::succeeded(outcome) ? 0 : 2);
        }

        if (cmd_gw->parsed()) {
            if (gw_poly.empty() || gw_i.empty() || gw_j.empty())
                throw gz::Error("grid-witness needs --poly, --i and --j");
            Report report("grid-witness", gw_opts);
            gz::Polynomial F = parse_poly_arg(gw_poly, "--poly");
            gz::PointSet I = gz::load_points(gw_i, "I");
            gz::PointSet J = gz::load_points(gw_j, "J");
            report.inputs() = Json{{"poly", F.str()},
                                   {"i", Json{{"path", gw_i}, {"size", I.size()}}},
                                   {"j", Json{{"path", gw_j}, {"size", J.size()}}}};
            try {
                gz::GridWitnessResult res = gz::grid_witness_to_cartesian(F, I, J);
                report.set_result(gz::to_json(res));
                return report.finish(res.success ? 0 : 2);
            } catch (const gz::GridNotContainedError& e) {
                report.set_result(Json{{"success", false}, {"error", "GridNotContained"},
                                       {"detail", e.what()}});
                return report.finish(2);
            } catch (const gz::GridTooSmallError& e) {
                report.set_result(Json{{"success", false}, {"error", "GridTooSmall"},
                                       {"detail", e.what()}});
                return report.finish(2);
            }
        }

        if (cmd_count->parsed()) {
            Report report("count", count_opts);
            std::vector<gz::Polynomial> system;
            gz::PointSet P, Q;
            Json inputs;
            if (!count_construct.empty()) {
                gz::ConstructionInstance inst = gz::build_construction(count_construct);
                system = inst.system;
                P = inst.P;
                Q = inst.Q;
                inputs["construct"] = count_construct;
                inputs["predicted_count"] = inst.predicted_count.get_str();
                if (!count_poly.empty()) {
                    gz::Polynomial F = parse_poly_arg(count_poly, "--poly");
                    if (F != inst.system[0])
                        throw gz::Error("--poly disagrees with the construction's polynomial " +
                                        inst.system[0].str());
                }
            } else {
                if (count_poly.empty() || count_p.empty() || count_q.empty())
                    throw gz::Error("count needs either --construct or --poly with --p and --q");
                system.push_back(parse_poly_arg(count_poly, "--poly"));
                if (!count_poly2.empty()) system.push_back(parse_poly_arg(count_poly2, "--poly2"));
                P = gz::load_points(count_p, "P");
                Q = gz::load_points(count_q, "Q");
                inputs["p"] = Json{{"path", count_p}, {"size", P.size()}};
                inputs["q"] = Json{{"path", count_q}, {"size", Q.size()}};
            }
            Json polys = Json::array();
            for (const auto& f : system) polys.push_back(f.str());
            inputs["system"] = polys;
            inputs["threads"] = count_opts.threads;
            report.inputs() = inputs;

            gz::CountOptions copts;
            copts.threads = count_opts.threads;
            copts.emit_pairs = !count_pairs_out.empty();
            gz::IncidenceReport res =
                gz::count_intersections(std::span<const gz::Polynomial>(system), P, Q, copts);
            if (!count_pairs_out.empty()) write_pairs_csv(count_pairs_out, res, P, Q);
            report.set_result(gz::to_json(res));
            return report.finish(0);
        }

        if (cmd_inc->parsed()) {
            if (inc_poly.empty() || inc_p.empty() || inc_q.empty())
                throw gz::Error("incidence needs --poly, --p and --q");
            Report report("incidence", inc_opts);
            gz::Polynomial F = parse_poly_arg(inc_poly, "--poly");
            gz::PointSet P = gz::load_points(inc_p, "P");
            gz::PointSet Q = gz::load_points(inc_q, "Q");
            report.inputs() = Json{{"poly", F.str()},
                                   {"p", Json{{"path", inc_p}, {"size", P.size()}}},
                                   {"q", Json{{"path", inc_q}, {"size", Q.size()}}},
                                   {"s", inc_s}, {"t", inc_t}};
            gz::IncidenceGraph graph = gz::incidence_graph(F, P, Q);
            Json result = gz::to_json(graph);
            auto witness = gz::kst_free_check(graph, inc_s, inc_t, inc_budget);
            result["kst_free"] = !witness.has_value();
            if (witness) result["kst_witness"] = gz::to_json(*witness);
            report.set_result(result);
            return report.finish(0);
        }

        if (cmd_part->parsed()) {
            if (part_poly.empty() || part_p.empty() || part_q.empty() || part_m == 0)
                throw gz::Error("partition needs --poly, --p, --q and a positive --m");
            Report report("partition", part_opts);
            gz::Polynomial F = parse_poly_arg(part_poly, "--poly");
            gz::PointSet P = gz::load_points(part_p, "P");
            gz::PointSet Q = gz::load_points(part_q, "Q");
            report.inputs() = Json{{"poly", F.str()},
                                   {"p", Json{{"path", part_p}, {"size", P.size()}}},
                                   {"q", Json{{"path", part_q}, {"size", Q.size()}}},
                                   {"m", part_m}};
            gz::RichPartition partition = gz::partition_rich(F, P, Q, part_m);
            report.set_result(gz::to_json(partition));
            return report.finish(0);
        }

        if (cmd_val->parsed()) {
            if (val_mode.empty() || val_poly.empty() || val_points.empty())
                throw gz::Error("values needs --mode, --poly and --points");
            Report report("values", val_opts);
            gz::Polynomial F = parse_poly_arg(val_poly, "--poly");
            gz::PointSet pts = gz::load_points(val_points, "P");
            Json inputs{{"mode", val_mode}, {"poly", F.str()},
                        {"points", Json{{"path", val_points}, {"size", pts.size()}}}};
            gz::CountOptions copts;
            copts.threads = val_opts.threads;
            if (val_mode == "repeated") {
                if (val_a.empty()) throw gz::Error("repeated mode needs --a");
                gz::GaussRational a = gz::parse_gauss_rational(val_a);
                inputs["a"] = a.str();
                report.inputs() = inputs;
                report.set_result(gz::to_json(gz::repeated_values(F, pts, a, copts)));
                return report.finish(0);
            }
            if (val_mode == "distinct") {
                report.inputs() = inputs;
                report.set_result(gz::to_json(gz::distinct_values(F, pts, val_list)));
                return report.finish(0);
            }
            if (val_poly2.empty()) throw gz::Error("map modes need --poly2");
            gz::Polynomial F2 = parse_poly_arg(val_poly2, "--poly2");
            inputs["poly2"] = F2.str();
            if (val_mode == "map-fiber") {
                if (val_a.empty() || val_b.empty())
                    throw gz::Error("map-fiber mode needs --a and --b");
                gz::GaussRational a = gz::parse_gauss_rational(val_a);
                gz::GaussRational b = gz::parse_gauss_rational(val_b);
                inputs["a"] = a.str();
                inputs["b"] = b.str();
                report.inputs() = inputs;
                report.set_result(gz::to_json(gz::map_fiber(F, F2, pts, a, b, copts)));
                return report.finish(0);
            }
            report.inputs() = inputs;
            report.set_result(gz::to_json(gz::map_distinct_values(F, F2, pts, val_list)));
            return report.finish(0);
        }

        if (cmd_con->parsed()) {
            if (con_spec.empty()) throw gz::Error("construct needs --spec");
            Report report("construct", con_opts);
            gz::ConstructionInstance inst = gz::build_construction(con_spec);
            report.inputs() = Json{{"spec", con_spec}};
            if (!con_export_p.empty()) gz::save_points(inst.P, con_export_p);
            if (!con_export_q.empty()) gz::save_points(inst.Q, con_export_q);
            Json result = gz::to_json(inst);
            if (con_verify) {
                gz::CountOptions copts;
                copts.threads = con_opts.threads;
                gz::IncidenceReport counted = gz::count_intersections(
                    std::span<const gz::Polynomial>(inst.system), inst.P, inst.Q, copts);
                result["counted"] = counted.count.get_str();
                result["verified"] = (counted.count == inst.predicted_count);
            }
            report.set_result(result);
            return report.finish(0);
        }

        if (cmd_probe->parsed()) {
            if (probe_mode.empty() || probe_poly.empty())
                throw gz::Error("probe needs --mode and --poly");
            Report report("probe", probe_opts);
            gz::Polynomial F = parse_poly_arg(probe_poly, "--poly");
            Json inputs{{"mode", probe_mode}, {"poly", F.str()}};
            if (probe_mode == "trivial") {
                report.inputs() = inputs;
                auto witness = gz::trivial_cartesian_probe(F);
                Json result;
                result["found"] = witness.has_value();
                if (witness) result["witness"] = gz::to_json(*witness);
                report.set_result(result);
                return report.finish(0);
            }
            if (probe_mode == "degenerate") {
                if (probe_points.empty()) throw gz::Error("degenerate mode needs --points");
                gz::PointSet candidates = gz::load_points(probe_points, "candidates");
                inputs["points"] = Json{{"path", probe_points}, {"size", candidates.size()}};
                report.inputs() = inputs;
                std::vector<gz::Point> degenerate = gz::degenerate_points(F, candidates);
                Json result;
                result["count"] = degenerate.size();
                Json list = Json::array();
                for (const gz::Point& p : degenerate)
                    list.push_back(Json::array({p.u.str(), p.v.str()}));
                result["points"] = list;
                report.set_result(result);
                return report.finish(0);
            }
            if (probe_poly2.empty()) throw gz::Error("fiber mode needs --poly2");
            if (probe_qx.empty() || probe_qy.empty())
                throw gz::Error("fiber mode needs --qx and --qy");
            gz::Polynomial F2 = parse_poly_arg(probe_poly2, "--poly2");
            gz::Point q{gz::parse_gauss_rational(probe_qx), gz::parse_gauss_rational(probe_qy)};
            inputs["poly2"] = F2.str();
            inputs["q"] = Json::array({q.u.str(), q.v.str()});
            report.inputs() = inputs;
            report.set_result(gz::to_json(gz::fiber_probe(F, F2, q)));
            return report.finish(0);
        }
    } catch (const gz::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
