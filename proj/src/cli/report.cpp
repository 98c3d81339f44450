#include "logparadox/report.hpp"

namespace logparadox {

using nlohmann::json;

json to_json(const ExperimentReport& r) {
    json j;
    j["schema_version"] = r.schema_version;
    j["command"] = r.command;
    j["tool_version"] = r.tool_version;
    j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
    j["params"] = r.params;
    j["results"] = r.results;
    return j;
}

ExperimentReport report_from_json(const json& j) {
    try {
        ExperimentReport r;
        r.schema_version = j.at("schema_version").get<int>();
        if (r.schema_version != kReportSchemaVersion) {
            throw Error(ErrorCode::InvalidParams,
                        "unsupported report schema version " + std::to_string(r.schema_version));
        }
        r.command = j.at("command").get<std::string>();
        r.tool_version = j.at("tool_version").get<std::string>();
        const auto& seed = j.at("seed");
        if (!seed.is_null()) r.seed = seed.get<std::uint64_t>();
        r.params = j.at("params");
        r.results = j.at("results");
        return r;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidParams, std::string("malformed report: ") + e.what());
    }
}

std::string serialize(const ExperimentReport& r) { return to_json(r).dump(2) + "\n"; }

ExperimentReport parse_report(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidParams, std::string("malformed report: ") + e.what());
    }
    return report_from_json(j);
}

json to_json(const MeanSummary& s) {
    return {{"n", s.n},
            {"arith_mean", s.arith_mean},
            {"geom_mean", s.geom_mean},
            {"inter_mean_distance", s.inter_mean_distance},
            {"flatness", s.flatness},
            {"min", s.min},
            {"max", s.max}};
}

json to_json(const DiffResult& d) {
    return {{"d_arith", d.d_arith}, {"d_geom", d.d_geom}, {"d_id", d.d_id}, {"paradox_signed", d.paradox_signed}};
}

json to_json(const SignPrediction& s) {
    return {{"sign_arith", s.sign_arith}, {"sign_geom", s.sign_geom}};
}

json to_json(const ParadoxVerdict& v) {
    return {{"arith_order", to_string(v.arith_order)},
            {"geom_order", to_string(v.geom_order)},
            {"is_paradox", v.is_paradox},
            {"d_a", v.d_a},
            {"d_g", v.d_g},
            {"criterion", v.criterion}};
}

json to_json(const HeuristicStep& h) {
    return {{"q", h.q},
            {"min", h.min},
            {"max", h.max},
            {"removed", h.removed},
            {"inserted", h.inserted},
            {"precondition_holds", h.precondition_holds}};
}

json to_json(const MwuResult& m) {
    return {{"u_statistic", m.u_statistic},
            {"p_value", m.p_value},
            {"method", to_string(m.method)},
            {"alternative", to_string(m.alternative)}};
}

json to_json(const SweepReport& s) {
    json points = json::array();
    for (const auto& p : s.points) {
        points.push_back({{"k", p.k},
                          {"p_geom", p.p_geom},
                          {"p_arith", p.p_arith},
                          {"d_arith", p.d_arith},
                          {"d_geom", p.d_geom},
                          {"paradox_direction_ok", p.paradox_direction_ok}});
    }
    json crossings = json::array();
    for (const auto& c : s.crossings) {
        crossings.push_back({{"alpha", c.alpha}, {"k", c.k ? json(*c.k) : json(nullptr)}});
    }
    return {{"sample_size", s.config.sample_size},
            {"n_resamples", s.config.n_resamples},
            {"max_fraction", s.config.max_fraction},
            {"step", s.config.step},
            {"seed", s.config.seed},
            {"alternative", to_string(s.config.alternative)},
            {"n", s.n},
            {"replace_interval", {s.replace_lo, s.replace_hi}},
            {"points", std::move(points)},
            {"threshold_crossings", std::move(crossings)}};
}

json to_json(const MarkovKmerModel& m) {
    return {{"states", m.states},
            {"counts", m.counts},
            {"structure_frequencies", m.structure_frequencies},
            {"per_protein_frequencies", m.per_protein_frequencies()},
            {"total_structures", m.total_structures()},
            {"total_proteins", m.total_proteins()}};
}

} // namespace logparadox
