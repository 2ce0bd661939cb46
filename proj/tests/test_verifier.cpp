#include "doctest.h"

#include "darboux/belyi.hpp"
#include "darboux/verifier.hpp"

#include <set>

using namespace darboux;

namespace {
Rational q(long a, long b = 1) { return make_rational(a, b); }
}  // namespace

TEST_CASE("catalog ids are unique and anchored") {
    std::set<std::string> ids;
    for (const auto& s : identity_catalog()) {
        CHECK(ids.insert(s.id).second);
        CHECK_FALSE(s.anchor.empty());
        CHECK_FALSE(s.suite.empty());
    }
    CHECK(ids.size() >= 50);
}

TEST_CASE("every catalogued identity holds at its default order") {
    for (const auto& s : identity_catalog()) {
        VerificationReport r = verify_identity(s);
        INFO(s.id << ": " << r.detail);
        CHECK(r.status == Status::Pass);
        CHECK(r.order == s.order);
        CHECK_FALSE(r.first_mismatch.has_value());
    }
}

TEST_CASE("perturbing any top-level exponent breaks the identity") {
    long n = 0;
    for (const auto& s : identity_catalog()) {
        for (const auto& p : perturbations(s, q(1, 42))) {
            VerificationReport r = verify_identity(p, 20);
            INFO(p.id);
            CHECK(r.status == Status::Fail);
            REQUIRE(r.first_mismatch.has_value());
            CHECK(r.first_mismatch->left != r.first_mismatch->right);
            ++n;
        }
    }
    CHECK(n > 100);
}

TEST_CASE("a wrong right side reports the first differing exponent") {
    IdentitySpec s = find_identity("thm-3A-1");
    s.right = s.right * Scalar(1) + Expr::product({pw(poly_atom("x^5", UniPoly{0, 0, 0, 0, 0, 1}))}, q(1, 1000));
    VerificationReport r = verify_identity(s, 16);
    CHECK(r.status == Status::Fail);
    REQUIRE(r.first_mismatch.has_value());
    CHECK(r.first_mismatch->exponent == 5);
}

TEST_CASE("order validation") {
    const IdentitySpec& s = find_identity("thm-3B-1");
    CHECK(verify_identity(s, 8).status == Status::Pass);
    CHECK_THROWS_AS(verify_identity(s, 0), VerifierError);
    CHECK_THROWS_AS(find_identity("no-such-identity"), VerifierError);
}

TEST_CASE("fractional power of a non-normalized atom is refused") {
    IdentitySpec s;
    s.id = "bad";
    s.anchor = "test";
    s.suite = "test";
    s.chart = Chart::line();
    s.left = Expr::product({pw(poly_atom("(2-x)", UniPoly{2, -1}), q(1, 2))});
    s.right = Expr::one();
    CHECK_THROWS_AS(verify_identity(s, 8), VerifierError);
}

TEST_CASE("expansion in a scaled chart") {
    // x = -t: (1-x)^{1/2} = (1+t)^{1/2} = 1 + t/2 - t^2/8 + ...
    Series s = expand_recipe(Expr::product({pw(poly_atom("(1-x)", UniPoly{1, -1}), q(1, 2))}), Chart::line(Scalar(-1)), 4);
    CHECK(s.coeff(1) == Scalar(q(1, 2)));
    CHECK(s.coeff(2) == Scalar(q(-1, 8)));
    CHECK(s.coeff(3) == Scalar(q(1, 16)));
}

TEST_CASE("curve chart expansion of u") {
    // on E7 with t = y at (0,0), u has a double zero
    Series s = expand_recipe(Expr::variable(), Chart::on_curve(CurveId::E7), 6);
    CHECK(s.lead() == 2);
    CHECK(s.lead_coeff().is_one());
}

TEST_CASE("chart mismatch is an error") {
    IdentitySpec s = find_identity("thm-7A-1");
    s.chart = Chart::on_curve(CurveId::E4);
    CHECK_THROWS_AS(verify_identity(s, 8), VerifierError);
}

TEST_CASE("radical candidate separation") {
    VerificationReport a = verify_radical_candidate_separation("3A");
    INFO(a.detail);
    CHECK(a.status == Status::Pass);
    VerificationReport b = verify_radical_candidate_separation("3B");
    INFO(b.detail);
    CHECK(b.status == Status::Pass);
    CHECK_THROWS_AS(verify_radical_candidate_separation("7A"), VerifierError);
}

TEST_CASE("omega sums are supported on a single residue class") {
    VerificationReport r = verify_omega_stability(30);
    INFO(r.detail);
    CHECK(r.status == Status::Pass);
}
