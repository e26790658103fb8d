#include "gridzero/report_json.hpp"

namespace gridzero {

Json decimal_json(const Fixed30& value, bool exact) {
    Json j;
    if (exact) {
        mpz_class ipart = value.scaled / Fixed30::unit();
        j["value"] = ipart.get_str();
        j["approx"] = false;
    } else {
        j["value"] = value.str();
        j["approx"] = true;
    }
    return j;
}

Json rational_json(const mpq_class& value) {
    Json j;
    j["value"] = value.get_str();
    j["approx"] = false;
    return j;
}

Json to_json(const IncidenceReport& r) {
    Json j;
    j["count"] = r.count.get_str();
    j["sizes"] = Json{{"p", r.n_p}, {"q", r.n_q}};
    Json env;
    env["st_main_term"] = decimal_json(r.st_main_term, r.st_main_exact);
    env["st"] = decimal_json(r.st_envelope, false);
    env["linear"] = r.linear_envelope.get_str();
    j["envelopes"] = env;
    Json ratios;
    ratios["count_over_st_main"] = decimal_json(r.ratio_main, false);
    ratios["count_over_st"] = decimal_json(r.ratio_st, false);
    ratios["count_over_linear"] = rational_json(r.ratio_linear);
    j["ratios"] = ratios;
    j["degenerate_q"] = r.degenerate_q;
    if (r.system_pair) {
        j["system_gcd"] = r.system_gcd.str();
        j["coprime"] = r.coprime;
    }
    if (r.kst) j["kst_witness"] = to_json(*r.kst);
    return j;
}

Json to_json(const CartesianWitness& w) {
    Json j;
    j["g"] = w.g.str();
    j["k"] = w.k.str();
    j["h"] = w.h.str();
    j["l"] = w.l.str();
    j["g_reduced_to_squarefree"] = w.g_reduced;
    j["k_reduced_to_squarefree"] = w.k_reduced;
    return j;
}

Json to_json(const FailureCertificate& c) {
    Json j;
    j["offending_cell"] = Json{{"i", c.i}, {"j", c.j}};
    j["residue"] = c.residue.str();
    j["reduction_remainder"] = c.reduction_remainder.str();
    j["note"] = c.note;
    return j;
}

Json to_json(const CartesianOutcome& outcome) {
    Json j;
    if (succeeded(outcome)) {
        j["decomposable"] = true;
        j["witness"] = to_json(std::get<CartesianWitness>(outcome));
    } else {
        j["decomposable"] = false;
        j["failure"] = to_json(std::get<FailureCertificate>(outcome));
    }
    return j;
}

Json to_json(const KstWitness& w) {
    Json j;
    j["p_side"] = w.p_side;
    j["q_side"] = w.q_side;
    return j;
}

Json to_json(const IncidenceGraph& g) {
    Json j;
    j["sizes"] = Json{{"p", g.n_p}, {"q", g.n_q}};
    j["edges"] = g.edges;
    j["degenerate_q"] = g.degenerate_q;
    std::size_t duplicated = 0;
    for (const auto& cls : g.curve_classes)
        if (cls.size() > 1) ++duplicated;
    j["curve_classes"] = Json{{"total", g.curve_classes.size()},
                              {"with_duplicates", duplicated}};
    Json classes = Json::array();
    for (const auto& cls : g.curve_classes)
        if (cls.size() > 1) classes.push_back(cls);
    j["duplicate_classes"] = classes;
    return j;
}

Json to_json(const RichPartition& p) {
    Json j;
    j["rich_threshold"] = p.rich_threshold;
    j["part_bound"] = p.part_bound;
    j["p_parts"] = p.p_parts;
    j["q_parts"] = p.q_parts;
    j["q_poor"] = p.q_poor;
    j["p_within_bound"] = p.p_within_bound;
    j["q_within_bound"] = p.q_within_bound;
    return j;
}

Json to_json(const DistinctValuesResult& r) {
    Json j;
    j["count"] = r.count.get_str();
    j["p_size"] = r.n_p;
    j["per_point_max"] = r.per_point_max.get_str();
    j["p_two_thirds"] = decimal_json(r.p_two_thirds, false);
    j["ratio_over_p_two_thirds"] = decimal_json(r.ratio, false);
    if (!r.values.empty()) {
        Json vals = Json::array();
        for (const GaussRational& v : r.values) vals.push_back(v.str());
        j["values"] = vals;
    }
    return j;
}

Json to_json(const MapDistinctResult& r) {
    Json j;
    j["count"] = r.count.get_str();
    j["p_size"] = r.n_p;
    j["ratio_over_p"] = rational_json(r.ratio);
    if (!r.values.empty()) {
        Json vals = Json::array();
        for (const auto& [a, b] : r.values) vals.push_back(Json::array({a.str(), b.str()}));
        j["values"] = vals;
    }
    return j;
}

Json to_json(const FiberProbeResult& r) {
    Json j;
    switch (r.kind) {
        case FiberProbeResult::Kind::empty:
            j["kind"] = "empty";
            break;
        case FiberProbeResult::Kind::finite_with_bound:
            j["kind"] = "finite_with_bound";
            j["bound"] = r.bound.get_str();
            break;
        case FiberProbeResult::Kind::contains_curve:
            j["kind"] = "contains_curve";
            j["curve"] = r.curve.is_zero() ? "0 (whole plane)" : r.curve.str();
            break;
    }
    return j;
}

Json to_json(const GridWitnessResult& r) {
    Json j;
    j["success"] = r.success;
    if (r.success) {
        j["witness"] = to_json(r.witness);
        j["coverage"] = Json{{"i", r.coverage_i}, {"j", r.coverage_j}};
    } else {
        j["failure_reason"] = r.failure_reason;
    }
    return j;
}

Json to_json(const ConstructionInstance& inst) {
    Json j;
    j["name"] = inst.name;
    Json polys = Json::array();
    for (const Polynomial& f : inst.system) polys.push_back(f.str());
    j["system"] = polys;
    j["sizes"] = Json{{"p", inst.P.size()}, {"q", inst.Q.size()}};
    j["predicted_count"] = inst.predicted_count.get_str();
    j["provenance"] = inst.provenance;
    return j;
}

}  // namespace gridzero
