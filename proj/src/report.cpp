#include "lieid/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace lieid {

std::string to_string(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
    }
    return "?";
}

Status status_from_string(const std::string& s)
{
    if (s == "pass") return Status::pass;
    if (s == "fail") return Status::fail;
    if (s == "skipped") return Status::skipped;
    throw std::invalid_argument("unknown status '" + s + "'");
}

void Report::append(const Report& other)
{
    records.insert(records.end(), other.records.begin(), other.records.end());
}

std::size_t Report::count(Status s) const
{
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [s](const CheckRecord& r) { return r.status == s; }));
}

void Report::sort()
{
    std::stable_sort(records.begin(), records.end(), [](const CheckRecord& a, const CheckRecord& b) {
        if (a.check != b.check) return a.check < b.check;
        if (a.id != b.id) return a.id < b.id;
        return a.params.dump() < b.params.dump();
    });
}

CheckRecord make_record(std::string check, std::string id, std::string identity, nlohmann::json params, bool ok,
                        std::string scope)
{
    CheckRecord r;
    r.check = std::move(check);
    r.id = std::move(id);
    r.identity = std::move(identity);
    r.params = std::move(params);
    r.status = ok ? Status::pass : Status::fail;
    r.scope = std::move(scope);
    return r;
}

nlohmann::json to_json(const CheckRecord& r)
{
    nlohmann::json j;
    j["check"] = r.check;
    j["id"] = r.id;
    j["identity"] = r.identity;
    j["params"] = r.params;
    j["status"] = to_string(r.status);
    if (!r.scope.empty()) j["scope"] = r.scope;
    if (!r.residual.empty()) j["residual"] = r.residual;
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (!r.note.empty()) j["note"] = r.note;
    if (r.runtime_ms) j["runtime_ms"] = *r.runtime_ms;
    return j;
}

CheckRecord record_from_json(const nlohmann::json& j)
{
    CheckRecord r;
    r.check = j.at("check").get<std::string>();
    r.id = j.at("id").get<std::string>();
    r.identity = j.at("identity").get<std::string>();
    r.params = j.at("params");
    r.status = status_from_string(j.at("status").get<std::string>());
    r.scope = j.value("scope", "");
    r.residual = j.value("residual", "");
    r.witness = j.value("witness", "");
    r.note = j.value("note", "");
    if (j.contains("runtime_ms")) r.runtime_ms = j["runtime_ms"].get<double>();
    return r;
}

} // namespace lieid
