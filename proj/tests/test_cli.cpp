#include "doctest.h"

#include "darboux/cli.hpp"

#include <cstdlib>
#include <set>

using namespace darboux;

namespace {

struct EnvGuard {
    explicit EnvGuard(const char* value) {
        if (value)
            setenv("DARBOUX_ORDER", value, 1);
        else
            unsetenv("DARBOUX_ORDER");
    }
    ~EnvGuard() { unsetenv("DARBOUX_ORDER"); }
};

}  // namespace

TEST_CASE("registry: unique ids, anchors, known suites") {
    std::set<std::string> ids;
    std::set<std::string> suites(suite_ids().begin(), suite_ids().end());
    for (const auto& c : check_registry()) {
        CHECK_MESSAGE(ids.insert(c.id).second, c.id);
        CHECK_MESSAGE(!c.anchor.empty(), c.id);
        CHECK_MESSAGE(suites.count(c.suite), c.suite);
        CHECK(c.suite != "all");
    }
    for (const auto& s : suite_ids()) CHECK_MESSAGE(!suite_checks(s).empty(), s);
    CHECK(suite_checks("all").size() == check_registry().size());
}

TEST_CASE("unknown suite and unknown spec") {
    CHECK_THROWS_WITH_AS(run_suite("nope", 64), doctest::Contains("unknown suite"), CliError);
    CHECK_THROWS_AS(run_check("no-such-id", 64), CliError);
}

TEST_CASE("order below the minimum is rejected") {
    CHECK_THROWS_AS(run_suite("genus0", 7), CliError);
    CHECK_THROWS_AS(resolve_order(4L), CliError);
    CHECK(resolve_order(8L) == 8);
}

TEST_CASE("order resolution: flag, then environment, then default") {
    {
        EnvGuard g(nullptr);
        CHECK(resolve_order(std::nullopt) == 64);
    }
    {
        EnvGuard g("20");
        CHECK(resolve_order(std::nullopt) == 20);
        CHECK(resolve_order(30L) == 30);
    }
    {
        EnvGuard g("abc");
        CHECK_THROWS_AS(resolve_order(std::nullopt), CliError);
    }
    {
        EnvGuard g("3");
        CHECK_THROWS_AS(resolve_order(std::nullopt), CliError);
    }
}

TEST_CASE("dump_series") {
    CHECK(dump_series("j", 3) == "q^-1: 1, q^0: 744, q^1: 196884, q^2: 21493760");
    CHECK(dump_series("x7", 6) == "q^1: -1, q^2: 2, q^3: 0, q^4: -5, q^5: 4");
    CHECK(dump_series("zero", 10).empty());
    CHECK_THROWS_AS(dump_series("not-a-series", 10), CliError);
    CHECK_THROWS_AS(dump_series("spec:thm-3A-1:middle", 10), CliError);
    std::string l = dump_series("spec:thm-3A-1:left", 8), r = dump_series("spec:thm-3A-1:right", 8);
    CHECK(!l.empty());
    CHECK(l == r);
}

TEST_CASE("genus0 suite passes at the default order") {
    ReportDocument doc = run_suite("genus0", 64);
    CHECK(doc.status == Status::Pass);
    CHECK(exit_code(doc) == 0);
    CHECK(doc.results.size() >= 10);
    for (const auto& r : doc.results) CHECK_MESSAGE(r.passed(), r.id << ": " << r.detail);
    for (std::size_t i = 1; i < doc.results.size(); ++i) CHECK(doc.results[i - 1].id < doc.results[i].id);
}

TEST_CASE("results are order-stable across thread counts") {
    ReportDocument a = run_suite("divisors", 64, 1), b = run_suite("divisors", 64, 8);
    a.duration_ms = b.duration_ms = 0;
    CHECK(a == b);
}

TEST_CASE("JSON round trip, including a mismatch") {
    ReportDocument doc = run_suite("belyi", 64);
    VerificationReport bad;
    bad.id = "zz-synthetic";
    bad.anchor = "anchor with \"quotes\"";
    bad.order = 20;
    bad.status = Status::Fail;
    bad.first_mismatch = Mismatch{make_rational(5, 7), Scalar(make_rational(1, 3), make_rational(-2)), Scalar(0)};
    doc.results.push_back(bad);
    doc.status = Status::Fail;
    std::string text = to_json(doc);
    CHECK(from_json(text) == doc);
    CHECK(to_json(from_json(text)) == text);
    CHECK(text.find("\"first_mismatch\"") != std::string::npos);
    CHECK(exit_code(doc) == 1);
    CHECK_THROWS_AS(from_json("{\"version\": 1}"), CliError);
}

TEST_CASE("a failing or throwing check gives a nonzero exit code") {
    ReportDocument doc;
    doc.results.push_back(make_report("a", "x", true));
    CHECK(exit_code(doc) == 0);
    VerificationReport err;
    err.id = "b";
    err.status = Status::Error;
    doc.results.push_back(err);
    CHECK(exit_code(doc) == 1);
    VerificationReport ins;
    ins.id = "c";
    ins.status = Status::InsufficientOrder;
    doc.results = {ins};
    CHECK(exit_code(doc) == 1);
}

TEST_CASE("single check and text rendering") {
    ReportDocument doc = run_check("thm-7A-1", 32);
    REQUIRE(doc.results.size() == 1);
    CHECK(doc.results[0].passed());
    CHECK(doc.suite == "genus1-e7");
    std::string text = render_text(doc);
    CHECK(text.find("thm-7A-1") != std::string::npos);
    CHECK(text.find("1/1 passed") != std::string::npos);
    std::string list = render_list();
    CHECK(list.find("div-phi7") != std::string::npos);
    CHECK(list.find("The divisor of $\\Phi_7$ is") != std::string::npos);
}

TEST_CASE("reports carry the registered anchor") {
    for (const char* s : {"genus0-omega", "klein-invariants", "belyi"}) {
        ReportDocument doc = run_suite(s, 16);
        for (const auto& r : doc.results) CHECK_MESSAGE(r.anchor == find_check(r.id).anchor, r.id);
    }
}
