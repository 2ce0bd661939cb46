#include "doctest.h"

#include "darboux/poly.hpp"

using namespace darboux;

namespace {

// Sylvester matrix determinant by fraction-exact Gaussian elimination
Rational sylvester(const std::vector<long>& p, const std::vector<long>& q) {
    const int m = int(p.size()) - 1, n = int(q.size()) - 1, s = m + n;
    std::vector<std::vector<Rational>> a(s, std::vector<Rational>(s));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) a[i][i + k] = p[m - k];
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) a[n + i][i + k] = q[n - k];
    Rational det = 1;
    for (int c = 0; c < s; ++c) {
        int piv = c;
        while (piv < s && sgn(a[piv][c]) == 0) ++piv;
        if (piv == s) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (int r = c + 1; r < s; ++r) {
            Rational f = a[r][c] / a[c][c];
            for (int k = c; k < s; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

MultiPoly X() { return MultiPoly::var(0); }
MultiPoly Y() { return MultiPoly::var(1); }
MultiPoly Z() { return MultiPoly::var(2); }

}  // namespace

TEST_CASE("squarefree decomposition of a planted square") {
    UniPoly p{4, 40, 96, -20, 1};
    auto f = squarefree_decomposition(p);
    REQUIRE(f.size() == 1);
    CHECK(f[0].first == UniPoly{-2, -10, 1});
    CHECK(f[0].second == 2);
    // it is x(x+4)^3 - 4(2x-1)^3
    CHECK(p == UniPoly::x() * UniPoly{4, 1}.pow(3) - UniPoly{-1, 2}.pow(3) * Scalar(4));
}

TEST_CASE("squarefree decomposition of small products") {
    auto f = squarefree_decomposition(UniPoly::x() * UniPoly{-1, 1}.pow(2));
    REQUIRE(f.size() == 2);
    CHECK(f[0] == std::pair<UniPoly, int>(UniPoly{0, 1}, 1));
    CHECK(f[1] == std::pair<UniPoly, int>(UniPoly{-1, 1}, 2));
    UniPoly F1{1, 5, -8, 1};
    auto g = squarefree_decomposition(F1.pow(7) * UniPoly{0, -1, 1});
    REQUIRE(g.size() == 2);
    CHECK(g[0].first == UniPoly{0, -1, 1});
    CHECK(g[1].first == F1);
    CHECK(g[1].second == 7);
    CHECK_THROWS_AS(squarefree_decomposition(UniPoly()), PolyError);
}

TEST_CASE("resultants") {
    CHECK(resultant(UniPoly{-2, 1}, UniPoly{-3, 1}) == Scalar(sylvester({-2, 1}, {-3, 1})));
    CHECK(resultant(UniPoly{-2, 1}, UniPoly{-3, 1}) == Scalar(-1));
    CHECK(resultant(UniPoly{0, 0, 1}, UniPoly{1, 1}) == Scalar(1));
    std::vector<long> mu{-1, 20, -96, 64}, mv{-1, 48, -320, 512};
    Scalar r = resultant(UniPoly{-1, 20, -96, 64}, UniPoly{-1, 48, -320, 512});
    CHECK(r == Scalar(sylvester(mu, mv)));
    CHECK_FALSE(r.is_zero());
}

TEST_CASE("resultant vanishes on a planted common factor") {
    UniPoly common{3, -1, 2};
    UniPoly a = common * UniPoly{1, 5}, b = common * UniPoly{-7, 0, 1};
    CHECK(resultant(a, b).is_zero());
    CHECK(gcd(a, b) == common.monic());
}

TEST_CASE("rational maps stay reduced") {
    RationalMap f(UniPoly{-1, 0, 1}, UniPoly{-1, 1});
    CHECK(f.num() == UniPoly{1, 1});
    CHECK(f.den() == UniPoly{1});
    RationalMap g(UniPoly{0, 2}, UniPoly{1, 3});
    CHECK(g.compose(RationalMap::identity()) == g);
    CHECK(g.degree() == 1);
}

TEST_CASE("invmod") {
    UniPoly m{-1, 20, -96, 64};
    UniPoly a{1, 2};
    UniPoly inv = invmod(a, m);
    CHECK(divmod(a * inv, m).second == UniPoly{1});
    CHECK_THROWS_AS(invmod(m, m), PolyError);
}

TEST_CASE("multivariate reduction") {
    MultiPoly r4 = X().pow(3) * Y() + Y().pow(3) * Z() + Z().pow(3) * X();
    CHECK(reduce_mod(r4, r4).is_zero());
    CHECK(reduce_mod(X() * r4 + Y(), r4) == Y());
    CHECK(r4.is_homogeneous());
    CHECK(r4.pow(2).total_degree() == 8);
}

TEST_CASE("determinant") {
    std::vector<std::vector<MultiPoly>> m{{X(), Y()}, {Z(), X()}};
    CHECK(determinant(m) == X() * X() - Y() * Z());
}
