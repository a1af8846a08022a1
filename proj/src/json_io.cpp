#include "maclaurin/json_io.hpp"

#include <sstream>

namespace maclaurin {

using nlohmann::json;

json to_json(const CertifiedValue& value) {
    json j;
    if (value.is_exact()) {
        j["exact"] = rat_to_string(value.exact_value());
        j["approx"] = value.approx();
    } else {
        j["lo"] = rat_to_string(value.interval().lo_rat());
        j["hi"] = rat_to_string(value.interval().hi_rat());
        j["precision_bits"] = value.interval().precision_bits();
        j["approx"] = value.approx();
    }
    return j;
}

json to_json(const Verdict& verdict) {
    json j;
    j["kind"] = to_string(verdict.kind);
    if (verdict.gap) j["gap"] = to_json(*verdict.gap);
    if (verdict.width) j["width"] = rat_to_string(*verdict.width);
    return j;
}

json to_json(const VerificationReport& report) {
    json j;
    j["graph"] = report.graph_id;
    j["s"] = report.s;
    j["q"] = report.q;
    j["lhs"] = to_json(report.lhs);
    j["rhs"] = to_json(report.rhs);
    j["verdict"] = to_json(report.verdict);
    json hist = json::object();
    for (const auto& [t, count] : report.sigma_histogram) hist[std::to_string(t)] = count;
    j["sigma_histogram"] = hist;
    if (report.structure_check) j["structure"] = to_json(*report.structure_check);
    j["elapsed_ns"] = report.elapsed_ns;
    return j;
}

json to_json(const EqualityDiagnosis& diagnosis) {
    json j;
    j["support"] = diagnosis.support.to_vector();
    j["applicable"] = diagnosis.applicable;
    j["complete_multipartite"] = diagnosis.complete_multipartite;
    if (diagnosis.parts) {
        json parts = json::array();
        for (const auto& part : diagnosis.parts->parts) parts.push_back(part.to_vector());
        j["parts"] = parts;
    }
    json mass = json::array();
    for (const Rat& z : diagnosis.part_mass) mass.push_back(rat_to_string(z));
    j["part_mass"] = mass;
    j["balanced"] = diagnosis.balanced;
    j["part_count"] = diagnosis.part_count;
    j["clique_number"] = diagnosis.clique_number;
    j["predicted"] = to_string(diagnosis.predicted);
    return j;
}

json to_json(const ReducedGraph& reduced) {
    json j;
    j["part_count"] = reduced.part_count;
    json mass = json::array();
    for (const Rat& z : reduced.mass) mass.push_back(rat_to_string(z));
    j["mass"] = mass;
    return j;
}

json to_json(const SimplexPoint& point) {
    json j;
    j["s"] = point.s;
    json x = json::array();
    for (const Rat& v : point.weights.values) x.push_back(rat_to_string(v));
    j["x"] = x;
    j["direction_mass"] = rat_to_string(point.direction_mass);
    j["scale"] = to_json(point.scale);
    j["mass"] = to_json(point.mass);
    return j;
}

json to_json(const ShiftOutcome& outcome) {
    json j;
    j["point"] = to_json(outcome.point);
    j["xi_u"] = rat_to_string(outcome.xi_u);
    j["xi_v"] = rat_to_string(outcome.xi_v);
    j["f_before"] = to_json(outcome.f_before);
    j["f_after"] = to_json(outcome.f_after);
    j["f_preserved"] = outcome.f_preserved;
    return j;
}

json to_json(const DescentResult& result) {
    json j;
    j["point"] = to_json(result.point);
    json shifts = json::array();
    for (const auto& s : result.shifts) shifts.push_back(to_json(s));
    j["shifts"] = shifts;
    j["dropped"] = result.dropped;
    j["criticality_residual"] = result.criticality.residual;
    j["criticality_lambda"] = result.criticality.lambda;
    return j;
}

json to_json(const OptimizationResult& result) {
    json j;
    j["M"] = to_json(result.best);
    j["support"] = result.support.to_vector();
    json x = json::array();
    for (const Rat& v : result.argmax.weights.values) x.push_back(rat_to_string(v));
    j["x"] = x;
    j["scale"] = to_json(result.argmax.scale);
    j["iterations"] = result.iterations;
    j["converged"] = result.converged;
    return j;
}

json to_json(const BlowupCheckReport& report) {
    json j;
    j["s"] = report.s;
    j["q"] = report.q;
    j["blowup_clique_count"] = report.blowup_clique_count.str();
    j["base_mass"] = rat_to_string(report.base_mass);
    j["count_identity"] = report.count_identity;
    j["cliques_checked"] = report.cliques_checked;
    j["sigma_preserved"] = report.sigma_preserved;
    j["f_blowup"] = to_json(report.f_blowup);
    j["f_base"] = to_json(report.f_base);
    j["f_consistent"] = report.f_consistent;
    j["ok"] = report.ok;
    return j;
}

json to_json(const SurveyRecord& record) {
    json j;
    j["graph6"] = record.graph6;
    if (record.is_error()) {
        j["error"] = record.error;
        return j;
    }
    j["n"] = record.n;
    j["s"] = record.s;
    j["q"] = record.q;
    j["verdict"] = to_string(record.verdict);
    j["tight"] = record.tight;
    j["predicted_tight"] = record.predicted_tight;
    j["discrepancy"] = record.discrepancy;
    return j;
}

std::string survey_csv_header() {
    return "graph6,n,s,q,verdict,tight,predicted_tight,discrepancy";
}

std::string survey_csv_line(const SurveyRecord& record) {
    std::ostringstream out;
    if (record.is_error()) {
        out << record.graph6 << ",,,,error,,,";
        return out.str();
    }
    out << record.graph6 << ',' << record.n << ',' << record.s << ',' << record.q << ','
        << to_string(record.verdict) << ',' << (record.tight ? 1 : 0) << ','
        << (record.predicted_tight ? 1 : 0) << ',' << (record.discrepancy ? 1 : 0);
    return out.str();
}

json envelope(const std::string& command, json inputs, json result) {
    json j;
    j["tool_version"] = kToolVersion;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["result"] = std::move(result);
    return j;
}

}  // namespace maclaurin
