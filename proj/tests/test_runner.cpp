#include "doctest.h"

#include "lieid/runner.hpp"

#include <set>

using namespace lieid;

namespace {

RunConfig config_for(Epsilon e, int n, std::vector<std::string> checks)
{
    RunConfig c;
    c.eps = e;
    c.n = n;
    c.checks = std::move(checks);
    c.d_check = 4;
    c.m_max = 3;
    return c;
}

} // namespace

TEST_CASE("full run on so(4) passes")
{
    RunConfig c = config_for(Epsilon::orthogonal(), 2, {});
    c.m_max = 4;
    c.d_check = 6;
    Report r = run(c);
    CHECK(exit_code(r) == 0);
    CHECK(r.count(Status::fail) == 0);
    std::set<std::string> checks;
    for (const auto& rec : r.records) checks.insert(rec.check);
    CHECK(checks.size() == known_checks().size());
}

TEST_CASE("minimal and degenerate cases")
{
    Report closure = run(config_for(Epsilon::symplectic(), 1, {"closure"}));
    CHECK(exit_code(closure) == 0);
    CHECK(closure.count(Status::pass) > 0);

    Report proj = run(config_for(Epsilon::orthogonal(), 1, {"projector"}));
    REQUIRE(proj.records.size() == 1);
    CHECK(proj.records[0].status == Status::skipped);
    CHECK(proj.records[0].note.find("degenerate rank") != std::string::npos);
    CHECK(exit_code(proj) == 0);

    RunConfig capped = config_for(Epsilon::orthogonal(), 2, {"projector"});
    capped.cap_dim = 3;
    Report cr = run(capped);
    REQUIRE(cr.records.size() == 1);
    CHECK(cr.records[0].status == Status::skipped);
}

TEST_CASE("records are canonical and deterministic")
{
    RunConfig one = config_for(Epsilon::symplectic(), 2, {"kmatrix", "closure", "pairing", "fock-realization"});
    one.jobs = 1;
    RunConfig many = one;
    many.jobs = 4;
    Report a = run(one), b = run(many);
    CHECK(a == b);
    CHECK(report_to_json(a, one).dump() == report_to_json(b, many).dump());
    Report sorted = a;
    sorted.sort();
    CHECK(sorted == a);
}

TEST_CASE("json report round trip")
{
    RunConfig c = config_for(Epsilon::orthogonal(), 2, {"identities", "killing"});
    c.timings = true;
    Report r = run(c);
    nlohmann::json j = report_to_json(r, c);
    CHECK(j["schema"] == 1);
    CHECK(j["summary"]["fail"] == 0);
    CHECK(report_from_json(nlohmann::json::parse(j.dump())) == r);
    for (const auto& rec : r.records) CHECK(rec.runtime_ms.has_value());

    nlohmann::json bad = j;
    bad["schema"] = 2;
    CHECK_THROWS_AS(report_from_json(bad), std::invalid_argument);
}

TEST_CASE("failing records set the exit code")
{
    Report r;
    r.add(make_record("closure", "closure.synthetic", "x = x", {}, true));
    CHECK(exit_code(r) == 0);
    r.add(make_record("closure", "closure.synthetic-fail", "x = y", {}, false));
    CHECK(exit_code(r) == 1);
    CHECK(report_to_text(r).find("fail") != std::string::npos);
}

TEST_CASE("config validation")
{
    CHECK_THROWS_AS(validate(config_for(Epsilon::orthogonal(), 0, {})), std::invalid_argument);
    CHECK_THROWS_AS(validate(config_for(Epsilon::orthogonal(), 2, {"bogus"})), std::invalid_argument);
    RunConfig neg = config_for(Epsilon::orthogonal(), 2, {});
    neg.d_check = -1;
    CHECK_THROWS_AS(validate(neg), std::invalid_argument);
    CHECK_NOTHROW(validate(config_for(Epsilon::symplectic(), 3, {"pairing", "kmatrix"})));
}

TEST_CASE("explain")
{
    for (const auto& c : known_checks()) CHECK(explain(c).has_value());
    auto constraints = explain("constraints");
    REQUIRE(constraints.has_value());
    CHECK(constraints->find("(1/4)(2n-1)") != std::string::npos);
    auto prop = explain("proposition");
    REQUIRE(prop.has_value());
    CHECK(prop->find("D_m = (-1)^m A_m^t") != std::string::npos);
    CHECK(!explain("bogus").has_value());
}
