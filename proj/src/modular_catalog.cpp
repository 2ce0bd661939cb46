#include "darboux/belyi.hpp"
#include "darboux/modular.hpp"

namespace darboux {

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

AtomPtr n(const std::string& name) { return named_atom(name); }

Expr prod(std::vector<Factor> f, const Scalar& c = Scalar(1)) { return Expr::product(std::move(f), c); }

Expr one(const Scalar& c) { return Expr::one() * c; }

// 1728 / j as the argument of a hypergeometric atom
Expr inv_j() { return prod({pw(n("j"), q(-1))}, Scalar(1728)); }

Factor hpg(std::vector<Rational> up, std::vector<Rational> low) {
    return pw(hpg_atom(HpgParams(std::move(up), std::move(low)), inv_j()));
}

// r(f), with f an expression in the named series
AtomPtr at(const std::string& label, const RationalMap& r, Expr f) { return map_atom(label, r, std::move(f)); }

// r / 1728, so that Belyi maps enter with lead coefficient 1
RationalMap over1728(const RationalMap& r) { return r * RationalMap(UniPoly::constant(Scalar(q(1, 1728)))); }

class Builder {
public:
    explicit Builder(std::vector<IdentitySpec>& out) : out_(out) {}

    void add(std::string suite, std::string id, std::string anchor, Expr left, Expr right, long order,
             std::optional<long> max_order = std::nullopt) {
        IdentitySpec s;
        s.id = std::move(id);
        s.anchor = std::move(anchor);
        s.suite = std::move(suite);
        s.chart = Chart::q();
        s.left = std::move(left);
        s.right = std::move(right);
        s.order = order;
        s.max_order = max_order;
        s.resolver = qseries_resolver();
        out_.push_back(std::move(s));
    }

private:
    std::vector<IdentitySpec>& out_;
};

void level5(Builder& b) {
    const char* s = "modular-level5";
    const long N = 60;
    b.add(s, "rr1-product", R"(\prod_{n=0}^{\infty} \frac1{(1-q^{5n+1})(1-q^{5n+4})})",
          prod({pw(n("j"), q(1, 60)), hpg({q(-1, 60), q(19, 60)}, {q(4, 5)})}), prod({pw(n("rr1"))}), N);
    b.add(s, "rr2-product", R"(& =  q^{11/60} \prod_{n=0}^{\infty} \frac1{(1-q^{5n+2})(1-q^{5n+3})})",
          prod({pw(n("j"), q(-11, 60)), hpg({q(11, 60), q(31, 60)}, {q(6, 5)})}), prod({pw(n("rr2"))}), N);
    b.add(s, "rr1-sum", R"(\, \sum_{n=0}^{\infty} \frac{q^{n^2}}{(1-q)\cdots(1-q^n)},)", prod({pw(n("rr1"))}), prod({pw(n("rr1_sum"))}), N);
    b.add(s, "rr2-sum", R"(\, \sum_{n=0}^{\infty} \frac{q^{n^2+n}}{(1-q)\cdots(1-q^n)}.)", prod({pw(n("rr2"))}), prod({pw(n("rr2_sum"))}), N);
    b.add(s, "h5-x5", R"(h_5(\tau)=\frac1{x_5(\tau)}-11-x_5(\tau).)", prod({pw(n("h5"))}),
          prod({pw(n("x5"), q(-1))}) + one(-11) + prod({pw(n("x5"))}, -1), N);
    UniPoly p5{1, -11, -1};
    RationalMap phi5(UniPoly{0, 1728} * p5.pow(5), UniPoly{1, 228, 494, -228, 1}.pow(3));
    b.add(s, "j-phi5", R"(j(\tau)=\frac{1728}{\varphi_5(x_5(\tau))},)", prod({pw(n("j"))}),
          prod({pw(at("phi5(x5)/1728", over1728(phi5), prod({pw(n("x5"))})), q(-1))}), N);
    b.add(s, "x5-h5-substitution", R"(1-11x-x^2=x_5(\tau)h_5(\tau).)",
          prod({pw(at("(1-11x5-x5^2)", p5, prod({pw(n("x5"))})))}), prod({pw(n("x5")), pw(n("h5"))}), N);
    b.add(s, "icosa-x5-1", R"(x_5(\tau)^{-1/10}\,h_5(\tau)^{-1/12})",
          prod({pw(n("x5"), q(-1, 60)), pw(at("(1-11x5-x5^2)", p5, prod({pw(n("x5"))})), q(-1, 12))}),
          prod({pw(n("x5"), q(-1, 10)), pw(n("h5"), q(-1, 12))}), N);
    b.add(s, "icosa-x5-2", R"(x_5(\tau)^{1/10}\,h_5(\tau)^{-1/12}.)",
          prod({pw(n("x5"), q(11, 60)), pw(at("(1-11x5-x5^2)", p5, prod({pw(n("x5"))})), q(-1, 12))}),
          prod({pw(n("x5"), q(1, 10)), pw(n("h5"), q(-1, 12))}), N);
    b.add(s, "rr1-x5-h5", R"(x_5(\tau) = q\; \prod_{n=0}^{\infty} \frac{(1-q^{5n+1})^5\,(1-q^{5n+4})^5}{(1-q^{5n+2})^5\,(1-q^{5n+3})^5}.)",
          prod({pw(n("rr1"))}), prod({pw(n("x5"), q(-1, 10)), pw(n("h5"), q(-1, 12))}), N);
    b.add(s, "rr2-x5-h5", R"(x_5(\tau) = q\; \prod_{n=0}^{\infty} \frac{(1-q^{5n+1})^5\,(1-q^{5n+4})^5}{(1-q^{5n+2})^5\,(1-q^{5n+3})^5}.)",
          prod({pw(n("rr2"))}), prod({pw(n("x5"), q(1, 10)), pw(n("h5"), q(-1, 12))}), N);
}

void level7(Builder& b) {
    const char* s = "modular-level7";
    const long N = 50, M = 60;
    auto mx7 = [] { return prod({pw(n("mx7"))}); };
    Expr x7 = prod({pw(n("mx7"))}, -1);
    b.add(s, "x7-coefficients", R"(-q+2q^2-5q^4+4q^5+O(q^6),)", prod({pw(n("mx7"))}),
          prod({pw(poly_atom("q-2q^2+5q^4-4q^5", UniPoly{0, 1, -2, 0, 5, -4}))}), N, 5);
    b.add(s, "x7-xyz", R"(x_7(\tau)= & -\frac{X^2 Y}{Z^3})", mx7(),
          prod({pw(n("mX"), q(2)), pw(n("Y")), pw(n("Z"), q(-3))}), N);
    b.add(s, "h7-x7", R"(h_7(\tau)=\frac{x_7^{\,3}-8x_7^{\,2}+5x_7+1}{x_7^{\,2}-x_7}.)", prod({pw(n("h7"))}),
          prod({pw(at("F1(x7)/(x7^2-x7)", RationalMap(UniPoly{1, 5, -8, 1}, UniPoly{0, -1, 1}), x7))}), N);
    RationalMap j7(UniPoly{49, 13, 1} * UniPoly{2401, 245, 1}.pow(3), UniPoly{0, 0, 0, 0, 0, 0, 0, 1});
    b.add(s, "j-h7", R"(j(\tau)=\frac{(h_7^{\,2}+13h_7+49)(h_7^{\,2}+245h_7+7^4)^3}{h_7^{\,7}}.)",
          prod({pw(n("j"))}), prod({pw(at("j(h7)", j7, prod({pw(n("h7"))})))}), N);
    b.add(s, "j-phi3", R"(j(\tau)=\frac{1728}{\Phi_3(x_7)}.)", prod({pw(n("j"))}),
          prod({pw(at("Phi3(x7)/1728", over1728(phi3_map()), x7), q(-1))}), N);
    b.add(s, "f1-substitution", R"(F_1=(-x)(1-x)h_7(\tau),)",
          prod({pw(at("F1(x7)", RationalMap(poly_F1()), x7))}),
          prod({pw(n("mx7")), pw(at("(1-x7)", RationalMap(UniPoly{1, 1}), mx7())), pw(n("h7"))}), N);
    b.add(s, "minus-x-xyz", R"(-x=\frac{(-X)^2\,Y}{Z^3},)", mx7(), prod({pw(n("mX"), q(2)), pw(n("Y")), pw(n("Z"), q(-3))}), N);
    b.add(s, "one-minus-x-xyz", R"(1-x=\frac{Y^3}{(-X)\,Z^2}.)", prod({pw(at("(1-x7)", RationalMap(UniPoly{1, 1}), mx7()))}),
          prod({pw(n("Y"), q(3)), pw(n("mX"), q(-1)), pw(n("Z"), q(-2))}), N);
    // R6/(X^2Y^2Z^2) with X = -mX
    b.add(s, "h7-r6", R"(h_7(\tau)=\frac{R_6(X,Y,Z)}{X^2Y^2Z^2},)", prod({pw(n("h7"))}),
          prod({pw(n("mX"), q(-1)), pw(n("Y"), q(3)), pw(n("Z"), q(-2))}, -1) +
              prod({pw(n("mX"), q(-2)), pw(n("Y"), q(-1)), pw(n("Z"), q(3))}) +
              prod({pw(n("mX"), q(3)), pw(n("Y"), q(-2)), pw(n("Z"), q(-1))}, -1) + one(-5),
          N);
    b.add(s, "r4-vanishes", R"(R_4 = & \, X^3Y+Y^3Z+Z^3X,)",
          prod({pw(n("mX"), q(3)), pw(n("Y"))}, -1) + prod({pw(n("Y"), q(3)), pw(n("Z"))}) +
              prod({pw(n("Z"), q(3)), pw(n("mX"))}, -1),
          Expr(), N);
    struct K {
        const char* id;
        const char* anchor;
        Rational lam;
        std::vector<Rational> up, low;
        const char* name;
        Rational ex, ey, ez;
        const char* xyz;
    };
    std::vector<K> ks{
        {"K1-product", R"(= & \; q^{-1/42} \prod_{n=0}^{\infty} \frac1{(1-q^{7n+1})(1-q^{7n+2})(1-q^{7n+5})(1-q^{7n+6})},)", q(1, 42),
         {q(-1, 42), q(13, 42), q(9, 14)}, {q(4, 7), q(6, 7)}, "K1", q(-1, 3), q(-1, 3), q(2, 3), R"((-X)^{-1/3}\,Y^{-1/3}\,Z^{2/3}\,h_7(\tau)^{-1/6},)"},
        {"K2-product", R"(= & \; q^{5/42} \, \prod_{n=0}^{\infty} \frac1{(1-q^{7n+1})(1-q^{7n+3})(1-q^{7n+4})(1-q^{7n+6})},)", q(-5, 42),
         {q(5, 42), q(19, 42), q(11, 14)}, {q(5, 7), q(8, 7)}, "K2", q(-1, 3), q(2, 3), q(-1, 3), R"((-X)^{-1/3}\,Y^{2/3}\,Z^{-1/3}\,h_7(\tau)^{-1/6},)"},
        {"K3-product", R"(= & \; q^{17/42} \prod_{n=0}^{\infty} \frac1{(1-q^{7n+2})(1-q^{7n+3})(1-q^{7n+4})(1-q^{7n+5})}.)", q(-17, 42),
         {q(17, 42), q(31, 42), q(15, 14)}, {q(9, 7), q(10, 7)}, "K3", q(2, 3), q(-1, 3), q(-1, 3), R"((-X)^{2/3}\,Y^{-1/3}\,Z^{-1/3}\,h_7(\tau)^{-1/6}.)"},
    };
    for (const auto& k : ks) {
        b.add(s, k.id, k.anchor, prod({pw(n("j"), k.lam), hpg(k.up, k.low)}), prod({pw(n(k.name))}), N);
        b.add(s, std::string(k.name) + "-xyz", k.xyz,
              prod({pw(n(k.name))}),
              prod({pw(n("mX"), k.ex), pw(n("Y"), k.ey), pw(n("Z"), k.ez), pw(n("h7"), q(-1, 6))}), N);
    }
    b.add(s, "klein-form-X", R"(Specifically, $X=-\eta(\tau)^4\,K_3(\tau)$)", prod({pw(n("mX"))}), prod({pw(n("eta"), q(4)), pw(n("K3"))}), N);
    b.add(s, "klein-form-Y", R"($Y=\eta(\tau)^4\,K_2(\tau)$)", prod({pw(n("Y"))}), prod({pw(n("eta"), q(4)), pw(n("K2"))}), N);
    b.add(s, "klein-form-Z", R"($Z=\eta(\tau)^4\,K_1(\tau)$.)", prod({pw(n("Z"))}), prod({pw(n("eta"), q(4)), pw(n("K1"))}), N);
    b.add(s, "K1-selberg", R"(K_1(\tau)= &\, \frac{q^{-1/42}}{(1-q)(1-q^2)\cdots\;}\sum_{n=0}^{\infty} (-1)^n\,q^{\frac{7n^2+n}2}\,(1-q^{6n+3}),)",
          prod({pw(n("K1"))}), prod({pw(n("K1_selberg"))}), M);
    b.add(s, "K3-selberg", R"(K_3(\tau)= &\, \frac{q^{17/42}}{(1-q)(1-q^2)\cdots\;}\sum_{n=0}^{\infty} (-1)^n\,q^{\frac{7n^2+7n}2})",
          prod({pw(n("K3"))}), prod({pw(n("K3_selberg"))}), M);
    b.add(s, "K-ratio-32", R"(\frac{K_3(\tau)}{K_2(\tau)}=& \frac{q^{2/7}\,\sum_{-\infty}^{\infty} (-1)^n q^{\frac{21n^2+7n}2}})",
          prod({pw(n("K3")), pw(n("K2"), q(-1))}),
          prod({pw(n("q^(2/7)")), pw(n("theta_num")), pw(n("theta_d1"), q(-1))}), M);
    b.add(s, "K-ratio-21", R"(\frac{K_2(\tau)}{K_1(\tau)}=& \frac{q^{1/7}\,\sum_{-\infty}^{\infty} (-1)^n q^{\frac{21n^2+7n}2}})",
          prod({pw(n("K2")), pw(n("K1"), q(-1))}),
          prod({pw(n("q^(1/7)")), pw(n("theta_num")), pw(n("theta_d2"), q(-1))}), M);
    b.add(s, "K-ratio-13", R"(\frac{K_1(\tau)}{K_3(\tau)}=& \frac{q^{-3/7}\,\sum_{-\infty}^{\infty} (-1)^n q^{\frac{21n^2+7n}2}})",
          prod({pw(n("K1")), pw(n("K3"), q(-1))}),
          prod({pw(n("q^(-3/7)")), pw(n("theta_num")), pw(n("theta_d3"), q(-1))}), M);
    b.add(s, "theta-numerator", R"(The numerator sums are equal to $\prod_{n=1}^{\infty}(1-q^{7n})$)", prod({pw(n("theta_num"))}),
          prod({pw(n("eta7_prod"))}), M);
    for (int k = 1; k <= 3; ++k) {
        std::string i = std::to_string(k);
        b.add(s, "quintuple-y" + i,
              R"(\prod_{n=1}^{\infty} \frac{(1-s^n)(1-y^2s^n)(1-y^{-2}s^{n-1})}{(1-ys^n)\,(1-y^{-1}s^{n-1})}=)",
              prod({pw(n("quint_prod_" + i))}), prod({pw(n("quint_sum_" + i))}), M);
    }
    b.add(s, "quintuple-denominators", R"(Consequently, the denominators can be expressed as nice $q$-products as well.)",
          prod({pw(n("theta_d1")), pw(n("theta_d2")), pw(n("theta_d3"))}),
          prod({pw(n("quint_prod_1")), pw(n("quint_prod_2")), pw(n("quint_prod_3"))}), M);
    UniPoly one_plus{1, 1};
    b.add(s, "quotient-curve-q", R"(y^7=x\,(x-1)^2.)",
          prod({pw(n("Y"), q(7)), pw(n("Z"), q(-7))}, -1),
          prod({pw(n("mx7")), pw(at("(1-x7)", RationalMap(one_plus), mx7()), q(2))}, -1), 40);
}

void low_levels(Builder& b) {
    const char* s = "modular-low-levels";
    const long N = 50;
    auto nm = [](const char* x) { return prod({pw(n(x))}); };
    b.add(s, "j-h2", R"(j(\tau)=\frac{(h_2(\tau)+256)^3}{h_2(\tau)^2}.)", nm("j"),
          prod({pw(at("(h2+256)^3/h2^2", RationalMap(UniPoly{256, 1}.pow(3), UniPoly{0, 0, 1}), nm("h2")))}), N);
    b.add(s, "j-h3", R"(j(\tau)=\frac{(h_3(\tau)+27)\,(h_3(\tau)+243)^3}{h_3(\tau)^3}.)", nm("j"),
          prod({pw(at("(h3+27)(h3+243)^3/h3^3", RationalMap(UniPoly{27, 1} * UniPoly{243, 1}.pow(3), UniPoly{0, 0, 0, 1}),
                      nm("h3")))}),
          N);
    b.add(s, "j-h4", R"(j(\tau)=\frac{(h_4(\tau)^2+256h_4(\tau)+4096)^3}{h_4(\tau)^4\,(h_4(\tau)+16)}.)", nm("j"),
          prod({pw(at("(h4^2+256h4+4096)^3/(h4^4(h4+16))",
                      RationalMap(UniPoly{4096, 256, 1}.pow(3), UniPoly{0, 0, 0, 0, 16, 1}), nm("h4")))}),
          N);
    b.add(s, "h2-product", R"(= \frac1{q}\,\prod_{n=1}^{\infty} \big(1+q^n\big)^{-24},)", nm("h2"), nm("h2_prod"), N);
    b.add(s, "h3-product", R"(=\frac1{q}\,\prod_{n=0}^{\infty} \big(1-q^{3n+1}\big)^{\!12} \, \big(1-q^{3n+2}\big)^{\!12},)", nm("h3"),
          nm("h3_prod"), N);
    b.add(s, "h4-product", R"(= \frac1{q}\,\prod_{n=1}^{\infty} \big(1+q^{2n-1}\big)^{-8} \,\big(1+q^{2n}\big)^{-16},)", nm("h4"),
          nm("h4_prod"), N);
    b.add(s, "lambda-eta", R"(\lambda(\tau)=\frac{16\,\eta(\tau/2)^8\,\eta(2\tau)^{16}}{\eta(\tau)^{24}} =)",
          nm("lam16"), nm("lam16_eta"), N);
    // lambda = 16 L
    b.add(s, "h2-lambda", R"(h_2(\tau)=256\,\frac{1-\lambda(\tau)}{\lambda(\tau)^2},)", nm("h2"),
          prod({pw(at("(1-16L)/L^2", RationalMap(UniPoly{1, -16}, UniPoly{0, 0, 1}), nm("lam16")))}), N);
    b.add(s, "sqrt-h2-lambda", R"(\sqrt{h_2(\tau)+64}=8\left(\frac{2}{\lambda(\tau)}-1\right).)",
          prod({pw(at("(h2+64)", RationalMap(UniPoly{64, 1}), nm("h2")), q(1, 2))}),
          prod({pw(n("lam16"), q(-1))}) + one(-8), N);
    b.add(s, "dihj-1", R"(& = h_2(\tau)^{-1/3}\;\sqrt{h_2(\tau)+64},)",
          prod({pw(n("j"), q(1, 6)), hpg({q(-1, 6), q(1, 6)}, {q(1, 2)})}),
          prod({pw(n("h2"), q(-1, 3)), pw(at("(h2+64)", RationalMap(UniPoly{64, 1}), nm("h2")), q(1, 2))}), N);
    b.add(s, "dihj-2", R"(j(\tau)^{-1/3}\,\hpg21{\frac1{3},\,\frac{2}{3}}{\frac32}{\frac{1728}{j(\tau)}})",
          prod({pw(n("j"), q(-1, 3)), hpg({q(1, 3), q(2, 3)}, {q(3, 2)})}), prod({pw(n("h2"), q(-1, 3))}), N);
    b.add(s, "teh-1", R"(& = h_3(\tau)^{-1/4}\,\big(h_3(\tau)+27\big)^{1/3},)",
          prod({pw(n("j"), q(1, 12)), hpg({q(-1, 12), q(1, 4)}, {q(2, 3)})}),
          prod({pw(n("h3"), q(-1, 4)), pw(at("(h3+27)", RationalMap(UniPoly{27, 1}), nm("h3")), q(1, 3))}), N);
    b.add(s, "teh-2", R"(j(\tau)^{-1/4}\,\hpg21{\frac1{4},\,\frac{7}{12}}{\frac43}{\frac{1728}{j(\tau)}})",
          prod({pw(n("j"), q(-1, 4)), hpg({q(1, 4), q(7, 12)}, {q(4, 3)})}), prod({pw(n("h3"), q(-1, 4))}), N);
    // identifications matching 1728/j with phi_N(x)
    RationalMap phi2(UniPoly{0, 27} * UniPoly{1, -1}.pow(2), UniPoly{1, 3}.pow(3));
    RationalMap phi3(UniPoly{0, 64, 48, 12, 1}, UniPoly{-4, 24, -48, 32});
    RationalMap phi4(UniPoly{0, 108} * UniPoly{-1, 1}.pow(4), UniPoly{1, 14, 1}.pow(3));
    auto ident = [&](const char* id, const char* anchor, const RationalMap& phi, const char* h, long shift, long num) {
        Expr x = prod({pw(at("(h+c)", RationalMap(UniPoly{shift, 1}), nm(h)), q(-1))}, Scalar(num));
        b.add(s, id, anchor, prod({pw(at("phi(x)/1728", over1728(phi), x))}), prod({pw(n("j"), q(-1))}), N);
    };
    ident("match-x2", R"(x=\frac{64}{h_2(\tau)+64}.)", phi2, "h2", 64, 64);
    ident("match-x3", R"(x=-\frac{108}{h_3(\tau)+27}.)", phi3, "h3", 27, -108);
    ident("match-x4", R"(x=\frac{16}{h_4(\tau)+16}.)", phi4, "h4", 16, 16);
    b.add(s, "h4p16-eta", R"(h_4(\tau)+16=\frac{\eta(2\tau)^{24}}{\eta(4\tau)^{16}\eta(\tau)^8})",
          prod({pw(at("(h4+16)", RationalMap(UniPoly{16, 1}), nm("h4")))}), nm("h4p16_eta"), N);
    b.add(s, "h4p16-product", R"(=\frac1q \, \prod_{n=1}^{\infty} \big(1+q^{n}\big)^{-8(-1)^{n}}.)",
          prod({pw(at("(h4+16)", RationalMap(UniPoly{16, 1}), nm("h4")))}), nm("h4p16_prod"), N);
    b.add(s, "octaj-1-eta", R"(& =\frac{\eta(2\tau)^5}{\eta(4\tau)^2\,\eta(\tau)^3},)",
          prod({pw(n("j"), q(1, 24)), hpg({q(-1, 24), q(7, 24)}, {q(3, 4)})}), nm("octa1_eta"), N);
    b.add(s, "octaj-1-product", R"(& = q^{-1/24} \, \prod_{n=1}^{\infty} \big(1+q^{2n-1}\big)^{\!3}\,\big(1+q^{2n}\big),)",
          prod({pw(n("j"), q(1, 24)), hpg({q(-1, 24), q(7, 24)}, {q(3, 4)})}), nm("octa1_prod"), N);
    b.add(s, "octaj-2-eta", R"(& =\frac{\eta(4\tau)^2}{\eta(2\tau)\,\eta(\tau)})",
          prod({pw(n("j"), q(-5, 24)), hpg({q(5, 24), q(13, 24)}, {q(5, 4)})}), nm("octa2_eta"), N);
    b.add(s, "octaj-2-product", R"(& = q^{5/24} \;\prod_{n=1}^{\infty} \big(1+q^{2n-1}\big)\,\big(1+q^{2n}\big)^{\!3}.)",
          prod({pw(n("j"), q(-5, 24)), hpg({q(5, 24), q(13, 24)}, {q(5, 4)})}), nm("octa2_prod"), N);
    b.add(s, "e4-hypergeometric", R"(\hpg21{\frac1{12},\,\frac{5}{12}}{1}{\frac{1728}{j(\tau)}})",
          prod({hpg({q(1, 12), q(5, 12)}, {q(1)})}), prod({pw(n("E4"), q(1, 4))}), N);
    b.add(s, "e4-eta", R"(= E_4(\tau)^{1/4} = j(\tau)^{1/12}\,\eta(\tau)^2,)", prod({pw(n("E4"), q(1, 4))}),
          prod({pw(n("j"), q(1, 12)), pw(n("eta"), q(2))}), N);
    b.add(s, "e4-coefficients", R"(where $E_4(\tau)=1+240q+2160q^2+\ldots$ is)", nm("E4"),
          prod({pw(poly_atom("1+240q+2160q^2", UniPoly{1, 240, 2160}))}), N, 3);
    b.add(s, "j-coefficients", R"(j(\tau)=\frac1q+744+196884q+21493760q^2+\ldots)", prod({pw(n("q^(1)")), pw(n("j"))}),
          prod({pw(poly_atom("1+744q+196884q^2+21493760q^3", UniPoly{1, 744, 196884, 21493760}))}), N, 4);
    b.add(s, "eta-pentagonal", R"(\eta(\tau) = q^{1/24}\,\prod_{n=1}^{\infty} (1-q^n)=\sum_{n=-\infty}^{\infty} q^{\frac1{24}{(6n+1)^2}},)", nm("eta"), nm("eta_theta"),
          N);
}

}  // namespace

const std::vector<IdentitySpec>& modular_catalog() {
    static const std::vector<IdentitySpec> catalog = [] {
        std::vector<IdentitySpec> v;
        Builder b(v);
        level5(b);
        level7(b);
        low_levels(b);
        return v;
    }();
    return catalog;
}

const IdentitySpec& find_modular_spec(const std::string& id) {
    for (const auto& s : modular_catalog())
        if (s.id == id) return s;
    throw ModularError("unknown modular identity " + id);
}

VerificationReport verify_modular_identity(const std::string& id, std::optional<long> order) {
    return verify_identity(find_modular_spec(id), order);
}

}  // namespace darboux
