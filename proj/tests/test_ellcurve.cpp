#include "doctest.h"

#include "darboux/curve.hpp"

using namespace darboux;

namespace {

CurveFunction e7(const char* name) { return table_function(Curve::e7(), name); }

CurveFunction e7_poly(std::initializer_list<long> a, std::initializer_list<long> b = {}) {
    return CurveFunction(Curve::e7(), UniPoly(a), UniPoly(b));
}

}  // namespace

TEST_CASE("local expansion at the 2-torsion point uses t = v") {
    auto le = local_expansion(Curve::e7(), {0, 0}, Rational(8));
    // u = t^2 / (1 - 11u + 32u^2) by fixed-point iteration: t^2 + 11 t^4 + (242 - 32) t^6 + ...
    CHECK(le.x.coeff(Rational(2)) == Scalar(1));
    CHECK(le.x.coeff(Rational(4)) == Scalar(11));
    CHECK(le.x.coeff(Rational(6)) == Scalar(210));
    CHECK(le.y.coeff(Rational(1)) == Scalar(1));
}

TEST_CASE("local expansion at a generic point satisfies the curve equation") {
    for (Point p : {Point{make_rational(1, 4), make_rational(1, 4)}, Point{make_rational(1, 8), make_rational(-1, 8)}}) {
        auto le = local_expansion(Curve::e7(), p, Rational(12));
        Series lhs = le.y * le.y;
        Series rhs = evaluate(Curve::e7().rhs(), le.x);
        CHECK(first_mismatch(lhs, rhs, Rational(12)) == std::nullopt);
        CHECK(le.y.coeff(Rational(0)) == Scalar(p.y));
    }
    // slope at (1/4, 1/4): 2 v v' = 1 - 22u + 96u^2 = 3/2
    auto le = local_expansion(Curve::e7(), {make_rational(1, 4), make_rational(1, 4)}, Rational(3));
    CHECK(le.y.coeff(Rational(1)) == Scalar(3));
}

TEST_CASE("norm of v - u") {
    RationalMap n = e7_poly({0, -1}, {1}).norm();
    // u^2 - u(1 - 11u + 32u^2) = -u + 12u^2 - 32u^3 = -u(1-4u)(1-8u)
    CHECK(n == RationalMap(UniPoly{0, -1, 12, -32}));
    CHECK(e7_poly({2, 3}).norm() == RationalMap(UniPoly{4, 12, 9}));
}

TEST_CASE("norm is multiplicative") {
    CurveFunction f = e7_poly({1, 2, -3}, {0, 5});
    CurveFunction g = e7_poly({-7, 0, 1}, {2, 1, 1});
    CHECK((f * g).norm() == f.norm() * g.norm());
}

TEST_CASE("G4 norm carries the V cluster once and (u - 1/8) once") {
    RationalMap n = e7("G4").norm();
    const PlaceCluster& v = find_cluster(Curve::e7(), "V");
    CHECK(multiplicity(n.num(), v.minpoly) == 1);
    CHECK(multiplicity(n.num(), UniPoly::linear_root(make_rational(1, 8))) == 1);
}

TEST_CASE("valuations of simple functions") {
    CurveFunction u = CurveFunction::x(Curve::e7());
    CHECK(valuation(u, {0, 0}) == 2);
    CHECK(valuation_at_infinity(u) == -2);
    CHECK(valuation_at_infinity(CurveFunction::y(Curve::e7())) == -3);
    CHECK(valuation(e7_poly({1, -4}), {make_rational(1, 4), make_rational(1, 4)}) == 1);
}

TEST_CASE("every Table 1 row verifies") {
    const auto& table = divisor_table(Curve::e7());
    CHECK(table.size() == 13);
    for (const auto& row : table) {
        auto rep = verify_divisor("E7 " + row.name, "table", row.f, row.divisor);
        INFO(row.name << ": " << rep.detail);
        CHECK(rep.passed());
        CHECK(degree(row.divisor, Curve::e7()) == 0);
    }
}

TEST_CASE("every Table 2 row verifies") {
    const auto& table = divisor_table(Curve::e4());
    CHECK(table.size() == 12);
    for (const auto& row : table) {
        auto rep = verify_divisor("E4 " + row.name, "table", row.f, row.divisor);
        INFO(row.name << ": " << rep.detail);
        CHECK(rep.passed());
    }
}

TEST_CASE("a wrong divisor is rejected") {
    FracDivisor wrong;
    wrong.add(Place::at(0, 0), 1).add(Place::infinity(), -1);
    auto rep = verify_divisor("u", "table", e7("u"), wrong);
    CHECK_FALSE(rep.passed());
}

TEST_CASE("divisors of Phi7 and Phi4") {
    auto r7 = verify_divisor("Phi7", "div", phi7(), phi7_divisor());
    INFO(r7.detail);
    CHECK(r7.passed());
    auto r4 = verify_divisor("Phi4", "div", phi4(), phi4_divisor());
    INFO(r4.detail);
    CHECK(r4.passed());
}

TEST_CASE("bridging identities among the table functions") {
    CHECK(e7("v-u") * e7("G4") == e7("1-8u") * e7("G4^"));
    CHECK(e7("v+u") * e7("G3") == e7("1-4u") * e7("G3^"));
    CHECK(e7("F4") * e7("F4~") == e7("1-4u").pow(2) * e7("1-8u"));
    CHECK(e7("v-u") * e7("v+u") == e7("u") * e7("1-4u") * e7("1-8u"));
    CHECK(e7("1-4u") * e7("v-u") * e7("F3~") == e7("1-8u") * e7("v+u") * e7("F4~"));
    CHECK(e7("1-4u") * e7("v+u") * e7("F3") == e7("1-8u") * e7("v-u") * e7("F4"));
}

TEST_CASE("involution and isogeny") {
    CurveFunction f = e7_poly({1, 3, -2}, {4, 1});
    CHECK(involution_apply(involution_apply(f)) == f);
    CurveFraction p = isogeny_pullback(CurveFraction(CurveFunction::x(Curve::e4())));
    CHECK(involution_apply(p) == p);
    CurveFraction w = isogeny_pullback(CurveFraction(CurveFunction::y(Curve::e4())));
    CHECK(involution_apply(w) == w);
    // w^2 = p(1 + 22p - 7p^2) after pulling back
    CHECK(w * w == evaluate(RationalMap(Curve::e4().rhs()), p));
}

TEST_CASE("group law and torsion on E4") {
    const Curve& c = Curve::e4();
    GroupPoint p{false, {1, 4}};
    CHECK(point_order(c, p) == 6);
    CHECK(point_order(c, GroupPoint{false, {0, 0}}) == 2);
    TorsionAudit a = torsion_audit(c);
    CHECK(a.order_of_1_4 == 6);
    CHECK(a.two_torsion_only_origin);
    CHECK(a.four_torsion_quartic == UniPoly{512, 0, -44, 0, 1});
    CHECK(a.no_rational_four_torsion);
    CHECK(a.torsion_order == 6);
}
