#pragma once

// Batch execution of the verification suites and report serialization.

#include "lieid/algebra.hpp"
#include "lieid/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lieid {

enum class Format { json, text };

struct RunConfig {
    Epsilon eps = Epsilon::orthogonal();
    int n = 2;
    std::vector<std::string> checks; // empty means all
    int m_max = 4;
    int d_check = 6;
    std::size_t cap_dim = 10000;
    Format format = Format::json;
    bool timings = false;
    unsigned jobs = 0; // 0: hardware concurrency
};

/// Suite names in canonical order.
const std::vector<std::string>& known_checks();

/// Throws std::invalid_argument with an explanation when the config is unusable.
void validate(const RunConfig& config);

/// One suite; a breached dimension cap becomes a skipped record.
Report run_check(const std::string& check, const RunConfig& config);
/// All selected suites on a bounded worker pool; records sorted canonically.
Report run(const RunConfig& config);

/// 0 when there is no fail record, 1 otherwise.
int exit_code(const Report& report);

nlohmann::json report_to_json(const Report& report, const RunConfig& config);
Report report_from_json(const nlohmann::json& j);
std::string report_to_text(const Report& report);

/// Identities and scope of a suite (or "proposition"); nullopt for unknown ids.
std::optional<std::string> explain(const std::string& id);

} // namespace lieid
