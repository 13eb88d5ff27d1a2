#pragma once

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lieid {

enum class Status { pass, fail, skipped };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

/// One certified (or refuted) identity.
struct CheckRecord {
    std::string check;    // suite the record belongs to (closure, killing, ...)
    std::string id;       // stable record id, e.g. "closure.structure-constants"
    std::string identity; // the relation being certified, as a formula
    nlohmann::json params = nlohmann::json::object();
    Status status = Status::pass;
    std::string scope;    // exhaustive / degree-bounded description
    std::string residual; // nonzero residual on failure
    std::string witness;  // offending index tuple or state on failure
    std::string note;     // recorded values (constants, scalars, conventions)
    std::optional<double> runtime_ms;

    friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct Report {
    std::vector<CheckRecord> records;

    void add(CheckRecord r) { records.push_back(std::move(r)); }
    void append(const Report& other);

    std::size_t count(Status s) const;
    bool all_passed() const { return count(Status::fail) == 0; }
    /// Canonical order: check id, then parameters.
    void sort();

    friend bool operator==(const Report&, const Report&) = default;
};

/// Convenience: a record that passes iff `ok`.
CheckRecord make_record(std::string check, std::string id, std::string identity, nlohmann::json params, bool ok,
                        std::string scope = {});

nlohmann::json to_json(const CheckRecord& r);
CheckRecord record_from_json(const nlohmann::json& j);

} // namespace lieid
