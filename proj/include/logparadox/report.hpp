#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "logparadox/core_stats.hpp"
#include "logparadox/finite_diff.hpp"
#include "logparadox/mann_whitney.hpp"
#include "logparadox/markov.hpp"
#include "logparadox/paradox.hpp"
#include "logparadox/resampling.hpp"

namespace logparadox {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr std::string_view kToolVersion = "0.1.0";

/// Serializable record of one CLI invocation.
struct ExperimentReport {
    int schema_version = kReportSchemaVersion;
    std::string command;
    nlohmann::json params = nlohmann::json::object();
    std::optional<std::uint64_t> seed;
    std::string tool_version{kToolVersion};
    nlohmann::json results = nlohmann::json::object();

    friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

[[nodiscard]] nlohmann::json to_json(const ExperimentReport& r);
/// Throws InvalidParams on a missing field or unsupported schema version.
[[nodiscard]] ExperimentReport report_from_json(const nlohmann::json& j);
[[nodiscard]] std::string serialize(const ExperimentReport& r);
[[nodiscard]] ExperimentReport parse_report(std::string_view text);

[[nodiscard]] nlohmann::json to_json(const MeanSummary& s);
[[nodiscard]] nlohmann::json to_json(const DiffResult& d);
[[nodiscard]] nlohmann::json to_json(const SignPrediction& s);
[[nodiscard]] nlohmann::json to_json(const ParadoxVerdict& v);
[[nodiscard]] nlohmann::json to_json(const HeuristicStep& h);
[[nodiscard]] nlohmann::json to_json(const MwuResult& m);
[[nodiscard]] nlohmann::json to_json(const SweepReport& s);
[[nodiscard]] nlohmann::json to_json(const MarkovKmerModel& m);

} // namespace logparadox
