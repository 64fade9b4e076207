#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "braidkit/verifier.hpp"

using namespace braidkit;

TEST_CASE("catalog shape") {
    const auto& catalog = check_catalog();
    CHECK(catalog.size() == 23);
    std::set<std::string> ids;
    for (const CheckInfo& c : catalog) {
        CHECK(ids.insert(c.id).second); // unique
        CHECK(c.min_n >= 3);
        CHECK(c.max_n >= c.min_n);
        CHECK_FALSE(c.summary.empty());
    }
    CHECK(catalog.front().id == "C0");
    CHECK(catalog.back().id == "X11");
    CHECK(catalog.back().negative_control);
    int controls = 0;
    for (const CheckInfo& c : catalog)
        if (c.negative_control) ++controls;
    CHECK(controls == 1);
}

TEST_CASE("catalog lookup") {
    CHECK(check_exists("C0"));
    CHECK(check_exists("C21"));
    CHECK(check_exists("X11"));
    CHECK_FALSE(check_exists("C22"));
    CHECK_FALSE(check_exists(""));
    CHECK_THROWS_AS(run_check("BOGUS", 3), std::invalid_argument);
}

TEST_CASE("every positive check passes at its smallest strand count") {
    for (const CheckInfo& c : check_catalog()) {
        if (c.negative_control) continue;
        const CheckReport r = run_check(c.id, c.min_n);
        INFO(c.id, " n=", c.min_n, " -> ", r.status, ": ", r.witness);
        CHECK(r.status == "pass");
        CHECK_FALSE(r.witness.empty());
        CHECK(r.n == c.min_n);
        CHECK(r.check == c.id);
    }
}

TEST_CASE("every positive check passes at its largest strand count") {
    for (const CheckInfo& c : check_catalog()) {
        if (c.negative_control) continue;
        const CheckReport r = run_check(c.id, c.max_n);
        INFO(c.id, " n=", c.max_n, " -> ", r.status, ": ", r.witness);
        CHECK(r.status == "pass");
    }
}

TEST_CASE("the negative control fails with a concrete witness") {
    for (int n = 3; n <= 5; ++n) {
        const CheckReport r = run_check("X11", n);
        CHECK(r.status == "fail");
        CHECK(r.witness.find(" vs ") != std::string::npos);
    }
}

TEST_CASE("out-of-range strand counts are skipped, not failed") {
    const CheckReport low = run_check("C15", 3);
    CHECK(low.status == "skip");
    CHECK(low.witness.find("range") != std::string::npos);
    const CheckReport high = run_check("C18", 4);
    CHECK(high.status == "skip");
}

TEST_CASE("resource caps turn into skips with a reason") {
    OracleLimits tight;
    tight.max_free_len = 8;
    const CheckReport r = run_check("C10", 6, SamplerParams{}, tight);
    CHECK(r.status == "skip");
    CHECK(r.witness.find("resource limit") != std::string::npos);
}

TEST_CASE("run_all covers the catalog in order and excludes the control") {
    const std::vector<CheckReport> rs = run_all(3, 4);
    CHECK(rs.size() == 2 * 22);
    CHECK(rs[0].check == "C0");
    CHECK(rs[0].n == 3);
    CHECK(rs[1].check == "C0");
    CHECK(rs[1].n == 4);
    CHECK(rs[2].check == "C1");
    for (const CheckReport& r : rs) {
        CHECK(r.check != "X11");
        CHECK(r.status != "fail");
    }
}

TEST_CASE("seed is propagated into reports") {
    SamplerParams p;
    p.seed = 77;
    const CheckReport r = run_check("C4", 3, p);
    CHECK(r.seed == 77);
    CHECK(r.status == "pass");
}

TEST_CASE("checks are deterministic") {
    SamplerParams p;
    p.seed = 123;
    const CheckReport a = run_check("C5", 4, p);
    const CheckReport b = run_check("C5", 4, p);
    CHECK(a.status == b.status);
    CHECK(a.witness == b.witness);
}

TEST_CASE("report JSON carries all fields") {
    const CheckReport r = run_check("C12", 3);
    const nlohmann::json j = report_to_json(r);
    CHECK(j.at("check").get<std::string>() == "C12");
    CHECK(j.at("n").get<int>() == 3);
    CHECK(j.at("seed").get<std::uint64_t>() == 0);
    CHECK(j.at("status").get<std::string>() == "pass");
    CHECK_FALSE(j.at("witness").get<std::string>().empty());
    CHECK(j.at("elapsed_ms").is_number());
}

TEST_CASE("report list JSON aggregates counts") {
    std::vector<CheckReport> rs;
    rs.push_back(run_check("C13", 3));
    rs.push_back(run_check("X11", 3));
    rs.push_back(run_check("C15", 3)); // skip: below range
    const nlohmann::json j = reports_to_json(rs);
    CHECK(j.at("version").get<std::string>() == "1");
    CHECK(j.at("total").get<int>() == 3);
    CHECK(j.at("passed").get<int>() == 1);
    CHECK(j.at("failed").get<int>() == 1);
    CHECK(j.at("skipped").get<int>() == 1);
    CHECK(j.at("reports").size() == 3);
}

TEST_CASE("report text names the check and outcome") {
    const CheckReport r = run_check("C18", 3);
    const std::string line = report_to_text(r);
    CHECK(line.find("C18") != std::string::npos);
    CHECK(line.find("n=3") != std::string::npos);
    CHECK(line.find("pass") != std::string::npos);
}
