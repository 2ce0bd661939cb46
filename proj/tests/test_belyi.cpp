#include "doctest.h"

#include "darboux/belyi.hpp"

using namespace darboux;

TEST_CASE("Phi3 pattern and genus") {
    BranchingPattern p = branching_pattern(phi3_map());
    CHECK(p.str() == "7^3 1^3/2^12/3^8");
    CHECK(p.equivalent(BranchingPattern::parse("[7^3 1^3/3^8/2^12]")));
    CHECK(rh_genus(p) == 0);
    CHECK(rh_genus(BranchingPattern::parse("7^3 1^3/4^6/2^12")) == 1);
    CHECK(rh_genus(BranchingPattern::parse("7^3 1^3/7^3 1^3/2^12")) == 1);
}

TEST_CASE("tetrahedral phi3 pattern") {
    BranchingPattern p = branching_pattern(find_covering("phi3").map);
    CHECK(p == BranchingPattern::parse("3.1/2^2/3.1"));
}

TEST_CASE("identity map") {
    BranchingPattern p = branching_pattern(RationalMap::identity());
    CHECK(p.str() == "1/1/1");
    CHECK(p.degree() == 1);
    CHECK(rh_genus(p) == 0);
}

TEST_CASE("inconsistent patterns are refused") {
    CHECK_THROWS_AS(rh_genus(BranchingPattern::parse("2/1/2")), BelyiError);
    CHECK_THROWS_AS(BranchingPattern::parse("2/2"), BelyiError);
}

TEST_CASE("belyi certification") {
    CHECK(belyi_certify(phi3_map()).passed());
    CHECK(belyi_certify(RationalMap(UniPoly{0, 0, 1})).passed());
    CHECK(belyi_certify(RationalMap(UniPoly{0, -3, 0, 1})).status == Status::Fail);
}

TEST_CASE("catalog entries") {
    for (const auto& e : covering_catalog()) {
        auto r = verify_covering(e);
        INFO(e.name << ": " << r.detail);
        CHECK(r.passed());
        if (e.domain == Domain::P1) CHECK(e.pattern.degree() == e.map.degree());
    }
}

TEST_CASE("covering relations") {
    for (const auto& rel : cover_relations()) {
        auto r = verify_cover_relation(rel.id);
        INFO(rel.id << ": " << r.detail);
        CHECK(r.passed());
    }
    CHECK_THROWS_AS(verify_cover_relation("nope"), BelyiError);
}

TEST_CASE("Phi3 is not a function of x^3") {
    CHECK_FALSE(cubic_decomposable(phi3_map()));
    CHECK(cubic_decomposable(phi3_star_map()));
}
