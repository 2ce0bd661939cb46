#include "darboux/belyi.hpp"
#include "darboux/verifier.hpp"

namespace darboux {

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

HpgParams hp(std::vector<Rational> up, std::vector<Rational> low) { return HpgParams(std::move(up), std::move(low)); }

UniPoly rpoly(std::vector<Rational> c) {
    std::vector<Scalar> s;
    for (auto& r : c) s.emplace_back(r);
    return UniPoly(std::move(s));
}

UniPoly spoly(std::vector<Scalar> c) { return UniPoly(std::move(c)); }

Expr prod(std::vector<Factor> f, const Scalar& c = Scalar(1)) { return Expr::product(std::move(f), c); }

Expr hpg_of(const HpgParams& p, const AtomPtr& arg) { return prod({pw(hpg_atom(p, prod({pw(arg)})))}); }

IdentitySpec spec(std::string id, std::string anchor, std::string suite, Chart chart, Expr left, Expr right,
                  long order = 64) {
    IdentitySpec s;
    s.id = std::move(id);
    s.anchor = std::move(anchor);
    s.suite = std::move(suite);
    s.chart = chart;
    s.left = std::move(left);
    s.right = std::move(right);
    s.order = order;
    return s;
}

const Scalar W = Scalar::omega();
const Scalar W2 = Scalar(Rational(-1), Rational(-1));

void genus0(std::vector<IdentitySpec>& out) {
    const char* suite = "genus0";
    auto omx = poly_atom("(1-x)", UniPoly{1, -1});
    auto f1 = poly_atom("F1", poly_F1());
    auto g0 = poly_atom("G0", poly_G0());
    auto g1 = poly_atom("G1", poly_G1());
    auto phi3 = map_atom("Phi3", phi3_map());
    auto lhs = [&](const HpgParams& p) { return hpg_of(p, phi3); };
    auto with_g = [&](std::vector<Factor> f, const Rational& e) {
        f.push_back(pw(g0, e));
        f.push_back(pw(g1, e));
        return prod(std::move(f));
    };
    Chart x = Chart::line();

    out.push_back(spec("thm-3A-1", R"(=&\; (1-x)^{1/7}\,G_0^{-1/14}\,G_1^{-1/14})", suite,
                       x, lhs(hp({q(-1, 42), q(13, 42), q(9, 14)}, {q(4, 7), q(6, 7)})),
                       with_g({pw(omx, q(1, 7))}, q(-1, 14))));
    out.push_back(spec("thm-3A-2", R"(=&\; (1-x)^{2/7}\,F_1^{-1}\,G_0^{5/14}\,G_1^{5/14})", suite, x,
                       lhs(hp({q(5, 42), q(19, 42), q(11, 14)}, {q(5, 7), q(8, 7)})),
                       with_g({pw(omx, q(2, 7)), pw(f1, q(-1))}, q(5, 14))));
    out.push_back(spec("thm-3A-3", R"(=&\; (1-x)^{-3/7}\,F_1^{-3}\,G_0^{17/14}\,G_1^{17/14})", suite, x,
                       lhs(hp({q(17, 42), q(31, 42), q(15, 14)}, {q(9, 7), q(10, 7)})),
                       with_g({pw(omx, q(-3, 7)), pw(f1, q(-3))}, q(17, 14))));
    out.push_back(spec("thm-3B-1", R"(=&\; (1-3x)\,(1-x)^{3/7}\,G_0^{-3/14}\,G_1^{-3/14})", suite, x,
                       lhs(hp({q(-1, 14), q(11, 42), q(25, 42)}, {q(4, 7), q(5, 7)})),
                       with_g({pw(poly_atom("(1-3x)", UniPoly{1, -3})), pw(omx, q(3, 7))}, q(-3, 14))));
    out.push_back(spec("thm-3B-2", R"(=&\; \left(1-\frac{2x}3\right) (1-x)^{-2/7}\,F_1^{-2}\,G_0^{9/14}\,G_1^{9/14})", suite, x,
                       lhs(hp({q(3, 14), q(23, 42), q(37, 42)}, {q(6, 7), q(9, 7)})),
                       with_g({pw(poly_atom("(1-2x/3)", rpoly({q(1), q(-2, 3)}))), pw(omx, q(-2, 7)), pw(f1, q(-2))},
                              q(9, 14))));
    out.push_back(spec("thm-3B-3", R"(=&\; \left(1+\frac{x}2\right) (1-x)^{-1/7}\,F_1^{-3}\,G_0^{15/14}\,G_1^{15/14})", suite, x,
                       lhs(hp({q(5, 14), q(29, 42), q(43, 42)}, {q(8, 7), q(10, 7)})),
                       with_g({pw(poly_atom("(1+x/2)", rpoly({q(1), q(1, 2)}))), pw(omx, q(-1, 7)), pw(f1, q(-3))},
                              q(15, 14))));
    auto quartic = poly_atom("(1-52x/9+43x^2/3-16x^3/3+x^4/9)", rpoly({q(1), q(-52, 9), q(43, 3), q(-16, 3), q(1, 9)}));
    out.push_back(spec("contig-3A", R"(\big(1-\frac{52}9x+\frac{43}3x^2-\frac{16}3x^3+\frac19x^4 \big).)",
                       suite, x, lhs(hp({q(1, 14), q(17, 42), q(31, 42)}, {q(3, 7), q(9, 7)})),
                       with_g({pw(omx, q(4, 7)), pw(f1, q(-2)), pw(quartic)}, q(3, 14))));
    out.push_back(spec("hpg21-phi3", R"(\hpg21{\frac27,\,\frac37}{\frac67}{x} = G_0^{-1/28}\,G_1^{-1/28})",
                       suite, x, prod({pw(hpg_atom(hp({q(2, 7), q(3, 7)}, {q(6, 7)}), Expr::variable()))}),
                       with_g({pw(hpg_atom(hp({q(1, 84), q(29, 84)}, {q(6, 7)}), prod({pw(phi3)})))}, q(-1, 28))));

    // rewritten forms with (-x), expanded in t = -x
    Chart s = Chart::line(Scalar(-1));
    auto mx = poly_atom("(-x)", UniPoly{0, -1});
    auto z = map_atom("(Phi3/1728)", phi3_map() * RationalMap(UniPoly::constant(Scalar(q(1, 1728)))));
    struct K {
        const char* id;
        const char* anchor;
        HpgParams p;
        Rational lam, e1;
    };
    std::vector<K> ks{
        {"dklein-1", R"(& = (-x)^{-1/42}\,(1-x)^{5/42}\,F_1^{-1/6},)",
         hp({q(-1, 42), q(13, 42), q(9, 14)}, {q(4, 7), q(6, 7)}), q(-1, 42), q(5, 42)},
        {"dklein-2", R"(& = (-x)^{5/42}\,(1-x)^{17/42}\,F_1^{-1/6},)",
         hp({q(5, 42), q(19, 42), q(11, 14)}, {q(5, 7), q(8, 7)}), q(5, 42), q(17, 42)},
        {"dklein-3", R"(& = (-x)^{17/42}\,(1-x)^{-1/42}\,F_1^{-1/6}.)",
         hp({q(17, 42), q(31, 42), q(15, 14)}, {q(9, 7), q(10, 7)}), q(17, 42), q(-1, 42)},
    };
    for (const auto& k : ks)
        out.push_back(spec(k.id, k.anchor, suite, s, prod({pw(z, k.lam), pw(hpg_atom(k.p, prod({pw(phi3)})))}),
                           prod({pw(mx, k.lam), pw(omx, k.e1), pw(f1, q(-1, 6))})));
}

void genus0_omega(std::vector<IdentitySpec>& out) {
    const char* suite = "genus0-omega";
    auto f2 = poly_atom("F2", poly_F2());
    auto g2 = poly_atom("G2", poly_G2());
    auto x = poly_atom("x", UniPoly::x());
    auto phis = map_atom("Phi3*", phi3_star_map());
    auto l0 = poly_atom("(1-x)", UniPoly{1, -1});
    auto l1 = poly_atom("(1-wx)", spoly({Scalar(1), -W}));
    auto l2 = poly_atom("(1-w^2x)", spoly({Scalar(1), -W2}));
    auto trip = [&](Rational a, Rational b, Rational c, const Scalar& w) {
        return prod({pw(l0, a), pw(l1, b), pw(l2, c)}, w * Scalar(q(1, 3)));
    };
    auto h = [&](const HpgParams& p) { return pw(hpg_atom(p, prod({pw(phis)}))); };
    Chart c = Chart::line();
    {
        Rational a = q(-1, 42), b = q(5, 42), d = q(17, 42);
        out.push_back(spec("thm-omega-1", R"(\hpg32{\!-\frac1{42},\,\frac{5}{42},\,\frac{17}{42}}{\frac13,\;\frac23}{\Phi^*_3})",
                           suite, c, prod({pw(f2, q(1, 6)), h(hp({a, b, d}, {q(1, 3), q(2, 3)}))}),
                           trip(a, b, d, 1) + trip(b, d, a, 1) + trip(d, a, b, 1), 48));
    }
    {
        Rational a = q(13, 42), b = q(19, 42), d = q(31, 42);
        out.push_back(spec("thm-omega-2", R"(\frac{x\,G_2}{1-2\omega}\,F_2^{-13/6}\,)",
                           suite, c,
                           prod({pw(x), pw(g2), pw(f2, q(-13, 6)), h(hp({a, b, d}, {q(2, 3), q(4, 3)}))},
                                (Scalar(1) - Scalar(2) * W).inverse()),
                           trip(a, b, d, 1) + trip(b, d, a, W) + trip(d, a, b, W2), 48));
    }
    {
        Rational a = q(9, 14), b = q(11, 14), d = q(15, 14);
        out.push_back(spec("thm-omega-3", R"(\frac{3x^2\,G_2^2}{21+7\omega}\,F_2^{-9/2}\,)",
                           suite, c,
                           prod({pw(x, q(2)), pw(g2, q(2)), pw(f2, q(-9, 2)), h(hp({a, b, d}, {q(4, 3), q(5, 3)}))},
                                Scalar(3) / (Scalar(21) + Scalar(7) * W)),
                           trip(a, b, d, 1) + trip(b, d, a, W2) + trip(d, a, b, W), 48));
    }
}

void genus1_e7(std::vector<IdentitySpec>& out) {
    const char* suite = "genus1-e7";
    const Curve& c = Curve::e7();
    auto t = [&](const char* name, const char* label) {
        return curve_atom(label, CurveFraction(table_function(c, name)));
    };
    auto om4 = t("1-4u", "(1-4u)"), om8 = t("1-8u", "(1-8u)"), u = t("u", "u"), vmu = t("v-u", "(v-u)"),
         vpu = t("v+u", "(v+u)"), f3 = t("F3", "F3"), tf3 = t("F3~", "F3~"), f4 = t("F4", "F4"), tf4 = t("F4~", "F4~"),
         g3 = t("G3", "G3"), g4 = t("G4", "G4"), hg4 = t("G4^", "G4^");
    auto b = curve_atom("(1+2v-2u+32uv)", CurveFraction(CurveFunction::from_terms(
                                              c, {{q(1), 0, 0}, {q(2), 0, 1}, {q(-2), 1, 0}, {q(32), 1, 1}})));
    auto phi = curve_atom("Phi7", phi7());
    Chart ch = Chart::on_curve(CurveId::E7);
    auto add = [&](const char* id, const char* anchor, HpgParams p, std::vector<Factor> r) {
        out.push_back(spec(id, anchor, suite, ch, hpg_of(p, phi), prod(std::move(r))));
    };
    add("thm-7A-1", R"(= & \, \frac{F_3^{\,1/14}\,F_4^{\,1/7}\,\widetilde{F}_4^{\,3/7}}{\sqrt{G_4}},)",
        hp({q(-1, 14), q(1, 14), q(5, 14)}, {q(1, 7), q(5, 7)}),
        {pw(f3, q(1, 14)), pw(f4, q(1, 7)), pw(tf4, q(3, 7)), pw(g4, q(-1, 2))});
    add("thm-7A-2", R"(= & \, \frac{(1-4u)^{4/7}\,F_3^{\,1/14}\,\widetilde{F}_4^{\,4/7}\,G_4^{\,3/2}})",
        hp({q(3, 14), q(5, 14), q(9, 14)}, {q(3, 7), q(9, 7)}),
        {pw(om4, q(4, 7)), pw(f3, q(1, 14)), pw(tf4, q(4, 7)), pw(g4, q(3, 2)), pw(tf3, q(-4, 7)), pw(g3, q(-2))});
    add("thm-7A-3", R"(= & \, \frac{(1-8u)\,\widetilde{F}_3^{\,5/14}\,\widehat{G}_4^{\,11/2}})",
        hp({q(11, 14), q(13, 14), q(17, 14)}, {q(11, 7), q(13, 7)}),
        {pw(om8), pw(tf3, q(5, 14)), pw(hg4, q(11, 2)), pw(u, q(-16, 7)), pw(vmu, q(-1, 14)), pw(vpu, q(-6, 7)),
         pw(g3, q(-6))});
    add("thm-7C-1", R"(= & \, \frac{(1-4u)^{1/7}\,\widetilde{F}_3^{\,3/14}\,\widetilde{F}_4^{\,1/7}}{(1-8u)^{1/14}\;\sqrt{G_4}},)",
        hp({q(-1, 14), q(3, 14), q(11, 14)}, {q(4, 7), q(6, 7)}),
        {pw(om4, q(1, 7)), pw(tf3, q(3, 14)), pw(tf4, q(1, 7)), pw(om8, q(-1, 14)), pw(g4, q(-1, 2))});
    add("thm-7C-2", R"(= & \, \frac{(1-4u)^{2/7}(1-8u)^{1/7}\,F_3^{\,1/14}\,\widetilde{F}_4^{\,2/7}\sqrt{G_4}}{G_3},)",
        hp({q(1, 14), q(5, 14), q(13, 14)}, {q(5, 7), q(8, 7)}),
        {pw(om4, q(2, 7)), pw(om8, q(1, 7)), pw(f3, q(1, 14)), pw(tf4, q(2, 7)), pw(g4, q(1, 2)), pw(g3, q(-1))});
    add("thm-7C-3", R"(= & \, \frac{(1-8u)\,(v-u)^{3/14}\,\widehat{G}_4^{\,5/2}})",
        hp({q(5, 14), q(9, 14), q(17, 14)}, {q(9, 7), q(10, 7)}),
        {pw(om8), pw(vmu, q(3, 14)), pw(hg4, q(5, 2)), pw(u, q(-8, 7)), pw(vpu, q(-3, 7)), pw(tf3, q(-1, 14)),
         pw(g3, q(-3))});
    add("thm-7B-extra", R"(= & \, \frac{(1-4u)^{4/7}\,F_4^{\,1/7}\,(1+2v-2u+32uv)}{(1-8u)^{1/14}\,\widetilde{F}_3^{\,3/14}\,G_4^{3/2}},)",
        hp({q(-3, 14), q(1, 14), q(3, 14)}, {q(1, 7), q(3, 7)}),
        {pw(om4, q(4, 7)), pw(f4, q(1, 7)), pw(b), pw(om8, q(-1, 14)), pw(tf3, q(-3, 14)), pw(g4, q(-3, 2))});
    add("thm-7B-1", R"(= & \, \frac{(1-4u)^{1/7}\,1-8u)^{4/7}\,F_4^{\,2/7}}{F_3^{\,1/14}\;\sqrt{G_4}},)",
        hp({q(-1, 14), q(1, 14), q(9, 14)}, {q(2, 7), q(6, 7)}),
        {pw(om4, q(1, 7)), pw(om8, q(4, 7)), pw(f4, q(2, 7)), pw(f3, q(-1, 14)), pw(g4, q(-1, 2))});
    add("thm-7B-2", R"(= & \, \frac{(1-8u)^{1/14}\,\widetilde{F}_4^{\,6/7}\sqrt{G_4}}{(1-4u)^{1/7}\,\widetilde{F}_3^{\,3/14}\,G_3},)",
        hp({q(1, 14), q(3, 14), q(11, 14)}, {q(3, 7), q(8, 7)}),
        {pw(om8, q(1, 14)), pw(tf4, q(6, 7)), pw(g4, q(1, 2)), pw(om4, q(-1, 7)), pw(tf3, q(-3, 14)), pw(g3, q(-1))});
    add("thm-7B-3", R"(= & \, \frac{(1-8u)\,\widetilde{F}_3^{\,1/14}\,\widehat{G}_4^{\,9/2}})",
        hp({q(9, 14), q(11, 14), q(19, 14)}, {q(11, 7), q(12, 7)}),
        {pw(om8), pw(tf3, q(1, 14)), pw(hg4, q(9, 2)), pw(u, q(-13, 7)), pw(vmu, q(-3, 14)), pw(vpu, q(-4, 7)),
         pw(g3, q(-5))});
}

void genus1_e4(std::vector<IdentitySpec>& out) {
    const char* suite = "genus1-e4";
    const Curve& c = Curve::e4();
    auto t = [&](const char* name, const char* label) {
        return curve_atom(label, CurveFraction(table_function(c, name)));
    };
    auto from = [&](const char* label, std::vector<std::tuple<Rational, int, int>> terms) {
        return curve_atom(label, CurveFraction(CurveFunction::from_terms(c, terms)));
    };
    auto p = t("p", "p"), omp = t("1-p", "(1-p)"), wm4p = t("w-4p", "(w-4p)"), omwp3 = t("1-w+3p", "(1-w+3p)"),
         f5 = t("F5", "F5"), f6 = t("F6", "F6"), tf6 = t("F6~", "F6~"), g5 = t("G5", "G5");
    auto a1 = from("(1-7w-21p)", {{q(1), 0, 0}, {q(-7), 0, 1}, {q(-21), 1, 0}});
    auto a3 = from("(1+7w-21p)", {{q(1), 0, 0}, {q(7), 0, 1}, {q(-21), 1, 0}});
    auto a2 = from("(1-7p/3)", {{q(1), 0, 0}, {q(-7, 3), 1, 0}});
    auto phi = curve_atom("Phi4", phi4());
    Chart ch = Chart::on_curve(CurveId::E4);
    auto add = [&](const char* id, const char* anchor, HpgParams hpar, std::vector<Factor> r) {
        out.push_back(spec(id, anchor, suite, ch, hpg_of(hpar, phi), prod(std::move(r))));
    };
    add("thm-4B-1", R"(= & \, \frac{(1-p)^{2/7}\,F_6^{\,1/14}}{G_5^{\,1/7}},)",
        hp({q(-1, 28), q(3, 14), q(13, 28)}, {q(2, 7), q(6, 7)}), {pw(omp, q(2, 7)), pw(f6, q(1, 14)), pw(g5, q(-1, 7))});
    add("thm-4B-2", R"(= & \, \frac{\widetilde{F}_6^{\,3/14}\,G_5^{\,3/7}})",
        hp({q(3, 28), q(5, 14), q(17, 28)}, {q(3, 7), q(8, 7)}),
        {pw(tf6, q(3, 14)), pw(g5, q(3, 7)), pw(omp, q(-1, 7)), pw(f5, q(-1))});
    add("thm-4B-3", R"(= & \, \frac{\widetilde{F}_6^{\,5/14}\,G_5^{\,19/7}})",
        hp({q(19, 28), q(13, 14), q(33, 28)}, {q(11, 7), q(12, 7)}),
        {pw(tf6, q(5, 14)), pw(g5, q(19, 7)), pw(omp, q(-4, 7)), pw(f5, q(-5))});
    add("thm-4A-1", R"(= & \, \frac{(1-7w-21p)\,(1-p)^{6/7}\,F_6^{\,3/14}}{(1-w+3p)\,G_5^{\,3/7}},)",
        hp({q(-3, 28), q(11, 28), q(9, 14)}, {q(4, 7), q(6, 7)}),
        {pw(a1), pw(omp, q(6, 7)), pw(f6, q(3, 14)), pw(omwp3, q(-1)), pw(g5, q(-3, 7))});
    add("thm-4A-2", R"(= & \, \frac{\big(1-\frac73p\big)\,(1-p)^{2/7}\;\widetilde{F}_6^{\,1/14}\,G_5^{\,1/7}})",
        hp({q(1, 28), q(15, 28), q(11, 14)}, {q(5, 7), q(8, 7)}),
        {pw(a2), pw(omp, q(2, 7)), pw(tf6, q(1, 14)), pw(g5, q(1, 7)), pw(f5, q(-1))});
    add("thm-4A-3", R"(= & \, \frac{(1+7w-21p)\,\sqrt{p}\;(1-p)^{4/7}\,\widetilde{F}_6^{\,1/7}\,G_5^{\,9/7}})",
        hp({q(9, 28), q(23, 28), q(15, 14)}, {q(9, 7), q(10, 7)}),
        {pw(a3), pw(p, q(1, 2)), pw(omp, q(4, 7)), pw(tf6, q(1, 7)), pw(g5, q(9, 7)), pw(wm4p, q(-1)), pw(f5, q(-3))});
}

void transformations(std::vector<IdentitySpec>& out) {
    const char* suite = "transformations";
    Chart x = Chart::line();
    auto var = Expr::variable();
    auto h = [](const HpgParams& p, Expr arg) { return pw(hpg_atom(p, std::move(arg))); };
    auto mapx = [](const char* label, UniPoly num, UniPoly den) { return prod({pw(map_atom(label, RationalMap(num, den)))}); };

    struct AB {
        Rational a, b;
    };
    std::vector<AB> abs{{q(-1, 28), q(1, 28)}, {q(1, 5), q(2, 7)}, {q(-1, 42), q(1, 14)}};
    for (std::size_t i = 0; i < abs.size(); ++i) {
        Rational a = abs[i].a, b = abs[i].b;
        std::string n = std::to_string(i + 1);
        HpgParams quad_l = hp({a, a + q(1, 4), a + q(1, 2)}, {b + q(1, 4), 3 * a - b + 1});
        HpgParams quad_r = hp({2 * a, 2 * a - b + q(3, 4), b - a}, {b + q(1, 4), 3 * a - b + 1});
        out.push_back(spec("t32a-" + n, R"(\hpg32{a,a+\frac14,a+\frac12}{b+\frac14,3a-b+1}{-\frac{4z}{(z-1)^2}})",
                           suite, x, prod({h(quad_l, mapx("-4x/(x-1)^2", UniPoly{0, -4}, UniPoly{1, -2, 1}))}),
                           prod({pw(poly_atom("(1-x)", UniPoly{1, -1}), 2 * a), h(quad_r, var)})));
        HpgParams cub_l = hp({a, a + q(1, 3), a + q(2, 3)}, {b + q(1, 2), 3 * a - b + 1});
        HpgParams cub_r = hp({3 * a, 2 * b - 3 * a, 3 * a - 2 * b + 1}, {b + q(1, 2), 3 * a - b + 1});
        out.push_back(spec("t32b-" + n, R"(\hpg32{a,a+\frac13,a+\frac23}{b+\frac12,3a-b+1}{\frac{27z}{(4z-1)^3}\!})",
                           suite, x, prod({h(cub_l, mapx("27x/(4x-1)^3", UniPoly{0, 27}, UniPoly{-1, 12, -48, 64}))}),
                           prod({pw(poly_atom("(1-4x)", UniPoly{1, -4}), 3 * a), h(cub_r, var)})));
        HpgParams cub2_r = hp({3 * a, b, 3 * a - b + q(1, 2)}, {2 * b, 6 * a - 2 * b + 1});
        out.push_back(spec("t32c-" + n, R"(\hpg32{a,a+\frac13,a+\frac23}{b+\frac12,3a-b+1}{\frac{27z^2}{(4-z)^3}\!})",
                           suite, x, prod({h(cub_l, mapx("27x^2/(4-x)^3", UniPoly{0, 0, 27}, UniPoly{64, -48, 12, -1}))}),
                           prod({pw(poly_atom("(1-x/4)", rpoly({q(1), q(-1, 4)})), 3 * a), h(cub2_r, var)})));
    }

    out.push_back(spec("tetra-1", R"(& =  \frac{1}{1+\frac14x}\,\left(1-2x\right)^{3/4},)", suite, x,
                       prod({h(hp({q(1, 4), q(7, 12)}, {q(4, 3)}),
                               mapx("x(x+4)^3/(4(2x-1)^3)", UniPoly{0, 64, 48, 12, 1}, UniPoly{-4, 24, -48, 32}))}),
                       prod({pw(poly_atom("(1+x/4)", rpoly({q(1), q(1, 4)})), q(-1)),
                             pw(poly_atom("(1-2x)", UniPoly{1, -2}), q(3, 4))})));
    out.push_back(spec("tetra-2", R"(& = \frac{1}{(1-x)^2}\;\big(1+2x\big)^{3/2})", suite, x,
                       prod({h(hp({q(1, 2), q(5, 6)}, {q(2, 3)}),
                               mapx("x(x+2)^3/(2x+1)^3", UniPoly{0, 8, 12, 6, 1}, UniPoly{1, 6, 12, 8}))}),
                       prod({pw(poly_atom("(1-x)", UniPoly{1, -1}), q(-2)),
                             pw(poly_atom("(1+2x)", UniPoly{1, 2}), q(3, 2))})));

    // dihedral, a = 2/7
    Rational a = q(2, 7);
    auto omx = poly_atom("(1-x)", UniPoly{1, -1});
    auto opx = poly_atom("(1+x)", UniPoly{1, 1});
    auto ratio = map_atom("((1+x)/(1-x))", RationalMap(UniPoly{1, 1}, UniPoly{1, -1}));
    auto root = poly_atom("(1-x^2)", UniPoly{1, 0, -1});
    Expr arg = mapx("x^2/(x^2-1)", UniPoly{0, 0, 1}, UniPoly{-1, 0, 1});
    out.push_back(spec("dih-1", R"(& =\frac{(1-\sqrt{z})^{-2a}+(1+\sqrt{z})^{-2a}}2.)", suite, x,
                       prod({h(hp({a, a + q(1, 2)}, {q(1, 2)}), prod({pw(poly_atom("x^2", UniPoly{0, 0, 1}))}))}),
                       prod({pw(omx, -2 * a)}, q(1, 2)) + prod({pw(opx, -2 * a)}, q(1, 2))));
    out.push_back(spec("dihe-1", R"(\hpg{2}{1}{a,\,-a}{\frac{1}{2}}{\frac{x^2}{x^2-1}} & = \frac12)", suite, x,
                       prod({h(hp({a, -a}, {q(1, 2)}), arg)}),
                       prod({pw(ratio, a)}, q(1, 2)) + prod({pw(ratio, -a)}, q(1, 2))));
    out.push_back(spec("dihe-2", R"(\hpg{2}{1}{\!\frac12+a,\frac12-a}{\frac{1}{2}}{\frac{x^2}{x^2-1}} & = \frac{\sqrt{1-x^2}}2)", suite, x,
                       prod({h(hp({q(1, 2) + a, q(1, 2) - a}, {q(1, 2)}), arg)}),
                       prod({pw(root, q(1, 2)), pw(ratio, a)}, q(1, 2)) +
                           prod({pw(root, q(1, 2)), pw(ratio, -a)}, q(1, 2))));
    auto xa = poly_atom("x", UniPoly::x());
    out.push_back(spec("dihe-3", R"(\hpg{2}{1}{\!\frac12+a,\frac12-a}{\frac{3}{2}}{\frac{x^2}{x^2-1}} & = \frac{\sqrt{1-x^2}}{4ax})", suite, x,
                       prod({h(hp({q(1, 2) + a, q(1, 2) - a}, {q(3, 2)}), arg)}),
                       prod({pw(root, q(1, 2)), pw(xa, q(-1)), pw(ratio, a)}, Rational(1 / (4 * a))) +
                           prod({pw(root, q(1, 2)), pw(xa, q(-1)), pw(ratio, -a)}, Rational(-1 / (4 * a)))));

    // phi_N / 1728 pairs, each in the chart where the power base is t
    struct Pair {
        const char* id;
        const char* anchor;
        Scalar scale;
        RationalMap phi;
        HpgParams p;
        Rational lam;
        const char* base_label;
        UniPoly base;  // the power base, equal to t in this chart
        const char* tail_label;
        UniPoly tail;
        Rational tail_e;
    };
    RationalMap phi5(UniPoly{0, 1728} * UniPoly{1, -11, -1}.pow(5), UniPoly{1, 228, 494, -228, 1}.pow(3));
    RationalMap phi3l(UniPoly{0, 64, 48, 12, 1}, UniPoly{-4, 24, -48, 32});
    RationalMap phi4l(UniPoly{0, 108} * UniPoly{-1, 1}.pow(4), UniPoly{1, 14, 1}.pow(3));
    RationalMap phi2l(UniPoly{0, 27} * UniPoly{1, -1}.pow(2), UniPoly{1, 3}.pow(3));
    std::vector<Pair> pairs{
        {"icosa-1", R"(& = x^{-1/60}\,(1-11x-x^2)^{-1/12},)", Scalar(1), phi5,
         hp({q(-1, 60), q(19, 60)}, {q(4, 5)}), q(-1, 60), "x", UniPoly::x(), "(1-11x-x^2)", UniPoly{1, -11, -1}, q(-1, 12)},
        {"icosa-2", R"(& = x^{11/60}\,(1-11x-x^2)^{-1/12}.)", Scalar(1), phi5,
         hp({q(11, 60), q(31, 60)}, {q(6, 5)}), q(11, 60), "x", UniPoly::x(), "(1-11x-x^2)", UniPoly{1, -11, -1}, q(-1, 12)},
        {"tetr-1", R"(\left(-\frac{x}{108}\right)^{-1/12}\,\left(1+\frac{x}4\right)^{-1/4},)",
         Scalar(-108), phi3l, hp({q(-1, 12), q(1, 4)}, {q(2, 3)}), q(-1, 12), "(-x/108)", rpoly({q(0), q(-1, 108)}),
         "(1+x/4)", rpoly({q(1), q(1, 4)}), q(-1, 4)},
        {"tetr-2", R"(\left(-\frac{x}{108}\right)^{1/4}\,\left(1+\frac{x}4\right)^{-1/4},)",
         Scalar(-108), phi3l, hp({q(1, 4), q(7, 12)}, {q(4, 3)}), q(1, 4), "(-x/108)", rpoly({q(0), q(-1, 108)}),
         "(1+x/4)", rpoly({q(1), q(1, 4)}), q(-1, 4)},
        {"octa-1", R"(\left(\frac{x}{16}\right)^{-1/24}\,(1-x)^{-1/6},)",
         Scalar(16), phi4l, hp({q(-1, 24), q(7, 24)}, {q(3, 4)}), q(-1, 24), "(x/16)", rpoly({q(0), q(1, 16)}), "(1-x)",
         UniPoly{1, -1}, q(-1, 6)},
        {"octa-2", R"(\left(\frac{x}{16}\right)^{5/24}\,(1-x)^{-1/6}.)",
         Scalar(16), phi4l, hp({q(5, 24), q(13, 24)}, {q(5, 4)}), q(5, 24), "(x/16)", rpoly({q(0), q(1, 16)}), "(1-x)",
         UniPoly{1, -1}, q(-1, 6)},
        {"dihb-1", R"(\left(\frac{x}{64}\right)^{-1/6}\,\left(1-x\right)^{-1/3},)", Scalar(64), phi2l,
         hp({q(-1, 6), q(1, 6)}, {q(1, 2)}), q(-1, 6), "(x/64)", rpoly({q(0), q(1, 64)}), "(1-x)", UniPoly{1, -1}, q(-1, 3)},
        {"dihb-2", R"(\left(\frac{x}{64}\right)^{1/3}\,\left(1-x\right)^{-1/3},)", Scalar(64), phi2l,
         hp({q(1, 3), q(2, 3)}, {q(3, 2)}), q(1, 3), "(x/64)", rpoly({q(0), q(1, 64)}), "(1-x)", UniPoly{1, -1}, q(-1, 3)},
    };
    RationalMap scale1728(UniPoly::constant(Scalar(q(1, 1728))));
    for (const auto& pr : pairs) {
        auto phi = map_atom("phi", pr.phi);
        auto z = map_atom("(phi/1728)", pr.phi * scale1728);
        out.push_back(spec(pr.id, pr.anchor, suite, Chart::line(pr.scale),
                           prod({pw(z, pr.lam), h(pr.p, prod({pw(phi)}))}),
                           prod({pw(poly_atom(pr.base_label, pr.base), pr.lam),
                                 pw(poly_atom(pr.tail_label, pr.tail), pr.tail_e)})));
    }
}

void klein_relation(std::vector<IdentitySpec>& out) {
    auto var = Expr::variable();
    auto a = hpg_atom(hp({q(-1, 42), q(13, 42), q(9, 14)}, {q(4, 7), q(6, 7)}), var);
    auto b = hpg_atom(hp({q(5, 42), q(19, 42), q(11, 14)}, {q(5, 7), q(8, 7)}), var);
    auto c = hpg_atom(hp({q(17, 42), q(31, 42), q(15, 14)}, {q(9, 7), q(10, 7)}), var);
    auto x = poly_atom("x", UniPoly::x());
    out.push_back(spec("klein-hpg-parametrization",
                       R"(& +\frac{x}{1728}\,\hpg32{\frac{17}{42},\,\frac{31}{42},\,\frac{15}{14}}{\frac97,\;\frac{10}7}{x}^{\!3})",
                       "klein-invariants", Chart::line(), prod({pw(b, q(3)), pw(a)}),
                       prod({pw(a, q(3)), pw(c)}) + prod({pw(x), pw(c, q(3)), pw(b)}, q(1, 1728))));
}

}  // namespace

const std::vector<IdentitySpec>& identity_catalog() {
    static const std::vector<IdentitySpec> catalog = [] {
        std::vector<IdentitySpec> v;
        genus0(v);
        genus0_omega(v);
        genus1_e7(v);
        genus1_e4(v);
        transformations(v);
        klein_relation(v);
        return v;
    }();
    return catalog;
}

}  // namespace darboux
