#include "doctest.h"

#include "darboux/hypergeom.hpp"

#include <algorithm>

using namespace darboux;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

// k-th coefficient as a ratio of rising factorials
Rational pochhammer_term(const HpgParams& p, long k) {
    auto rising = [](const Rational& a, long n) {
        Rational r = 1;
        for (long i = 0; i < n; ++i) r *= a + i;
        return r;
    };
    Rational num = 1, den = rising(Rational(1), k);
    for (const auto& a : p.upper) num *= rising(a, k);
    for (const auto& b : p.lower) den *= rising(b, k);
    return num / den;
}

bool vanishes_below(const Series& s, const Rational& bound) {
    return s.is_zero() ? s.order() >= bound : s.lead() >= bound && s.order() >= bound;
}

std::vector<Rational> sorted(std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    return v;
}

const HpgParams rep3a = HpgParams::parse("(-1/42, 13/42, 9/14; 4/7, 6/7)");

}  // namespace

TEST_CASE("series coefficients") {
    CHECK(hpg_series(HpgParams::parse("(0, 1/2, 1/3; 1/4, 1/5)"), 10) == Series::constant(Scalar(1), q(10)));
    // single term-ratio: (-1/42)(13/42)(9/14) / ((4/7)(6/7))
    CHECK(hpg_series(rep3a, 4).coeff(q(1)) == Scalar(q(-13, 1344)));
    HpgParams embed({q(1, 3), q(2, 5), q(3, 7)}, {q(5, 4), q(3, 7)});
    CHECK(hpg_series(embed, 3).coeff(q(1)) == Scalar(q(1, 3) * q(2, 5) / q(5, 4)));
    CHECK_THROWS_AS(hpg_series(HpgParams::parse("(1/2, 1/3, 1/5; -2, 1/7)"), 6), HypergeomError);
}

TEST_CASE("coefficients agree with rising factorials") {
    for (const auto& c : class_catalog()) {
        Series s = hpg_series(c.representative, 12);
        for (long k = 0; k < 12; ++k) CHECK(s.coeff(q(k)) == Scalar(pochhammer_term(c.representative, k)));
    }
}

TEST_CASE("ode residual") {
    const long n = 24;
    CHECK(vanishes_below(ode_residual(hpg_series(rep3a, n), rep3a), q(n - 1)));
    Series not_solution = Series::from_coeffs(q(0), 1, {Scalar(1), Scalar(1)}, q(n));
    CHECK_FALSE(vanishes_below(ode_residual(not_solution, rep3a), q(n - 1)));
}

TEST_CASE("companion bases solve the equation at 0 and at infinity") {
    const long n = 20;
    for (const auto& c : class_catalog()) {
        CompanionBasis cb = companion_basis(c.representative);
        for (const auto& s : cb.at_zero) {
            Series f = local_solution_series(s, n);
            Series r = ode_residual(f, c.representative);
            INFO(c.label << " exponent " << s.exponent.get_str());
            CHECK(vanishes_below(r, s.exponent + n - 1));
        }
        for (const auto& s : cb.at_infinity) {
            Series g = local_solution_series(s, n);
            Series r = ode_residual_at_infinity(g, c.representative);
            INFO(c.label << " infinity exponent " << s.exponent.get_str());
            CHECK(vanishes_below(r, -s.exponent + n - 1));
        }
    }
}

TEST_CASE("local exponents of the representatives") {
    auto exps = [](const std::string& label) {
        CompanionBasis cb = companion_basis(find_class(label).representative);
        return sorted({cb.at_zero[0].exponent, cb.at_zero[1].exponent, cb.at_zero[2].exponent});
    };
    CHECK(exps("7B") == std::vector<Rational>{q(0), q(1, 7), q(5, 7)});
    CompanionBasis cb = companion_basis(rep3a);
    CHECK(sorted({cb.at_zero[0].exponent, cb.at_zero[1].exponent, cb.at_zero[2].exponent}) ==
          std::vector<Rational>{q(0), q(1, 7), q(3, 7)});
    // the basis display for 7B
    CompanionBasis b7 = companion_basis(find_class("7B").representative);
    CHECK(b7.at_zero[1].params == HpgParams::parse("(1/14, 3/14, 11/14; 8/7, 3/7)"));
    CHECK(b7.at_zero[2].params == HpgParams::parse("(9/14, 11/14, 19/14; 12/7, 11/7)"));
}

TEST_CASE("symmetric M-matrix of 7B gives the same triples at 0 and infinity") {
    for (const char* label : {"7B"}) {
        const HpgParams& p = find_class(label).representative;
        MMatrix m = m_matrix(p);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(m[i][j] == m[j][i]);
        CompanionBasis cb = companion_basis(p);
        for (int j = 0; j < 3; ++j) {
            bool found = false;
            for (int i = 0; i < 3; ++i)
                found = found || (sorted(cb.at_zero[i].params.upper) == sorted(cb.at_infinity[j].params.upper) &&
                                  sorted(cb.at_zero[i].params.lower) == sorted(cb.at_infinity[j].params.lower));
            CHECK(found);
        }
    }
}

TEST_CASE("resonant exponents are refused") {
    CHECK_THROWS_AS(companion_basis(HpgParams::parse("(1/3, 1/5, 1/7; 1/2, 3/2)")), HypergeomError);
    CHECK_THROWS_AS(companion_basis(HpgParams::parse("(1/3, 4/3, 1/7; 1/2, 1/4)")), HypergeomError);
}

TEST_CASE("contiguity operators") {
    const long n = 30;
    Series f = hpg_series(rep3a, n);
    auto direct = [&](const ShiftDescriptor& d) { return hpg_series(shifted_params(d, rep3a), n); };
    for (ShiftDescriptor d : {ShiftDescriptor{ShiftKind::AlphaUp, 0}, ShiftDescriptor{ShiftKind::AlphaUp, 2},
                              ShiftDescriptor{ShiftKind::BetaDown, 1}, ShiftDescriptor{ShiftKind::AlphaBetaDown, 0},
                              ShiftDescriptor{ShiftKind::Derivative, 0}}) {
        Series g = contiguous_apply(d, rep3a, f);
        Rational bound = q(n - 2);
        CHECK(first_mismatch(g, direct(d), bound) == std::nullopt);
    }
    CHECK(contiguous_apply({}, rep3a, f) == f);
    CHECK_THROWS_AS(contiguous_apply({ShiftKind::AlphaUp, 0}, HpgParams::parse("(0, 1/3, 1/5; 1/2, 1/7)"), f),
                    HypergeomError);
}

TEST_CASE("raising alpha and then the second order form lands on the beta shift") {
    const long n = 30;
    Series f = hpg_series(rep3a, n);
    ShiftDescriptor up{ShiftKind::AlphaUp, 0};
    Series g = contiguous_apply(up, rep3a, f);
    Series back = contiguous_apply({ShiftKind::AlphaBetaDown, 0}, shifted_params(up, rep3a), g);
    Series beta = contiguous_apply({ShiftKind::BetaDown, 0}, rep3a, f);
    CHECK(first_mismatch(back, beta, q(n - 4)) == std::nullopt);
}

TEST_CASE("interlacing") {
    CHECK(interlacing(rep3a));
    for (const auto& c : class_catalog()) CHECK(interlacing(c.representative));
    CHECK_FALSE(interlacing(HpgParams::parse("(1/2, 1/2, 1/2; 1/3, 2/3)")));
    CHECK_THROWS_AS(interlacing(HpgParams::parse("(1/3, 1/5, 2; 1/3, 1/7)")), HypergeomError);
}

TEST_CASE("class catalog") {
    CHECK(class_catalog().size() == 6);
    CHECK(find_class("4B").representative == HpgParams::parse("(-1/14, 3/14, 5/14; 1/4, 3/4)"));
    CHECK_THROWS_AS(find_class("5A"), HypergeomError);
}
