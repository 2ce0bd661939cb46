#pragma once

#include "darboux/curve.hpp"
#include "darboux/series.hpp"

#include <random>

namespace darboux::props {

inline constexpr int kCases = 200;

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(unsigned long seed) : rng(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
    Rational rational() { return make_rational(integer(-9, 9), integer(1, 5)); }
    Scalar scalar(bool omega = true) { return omega ? Scalar(rational(), rational()) : Scalar(rational()); }
    Scalar nonzero() {
        Scalar s = scalar();
        return s.is_zero() ? Scalar(1) : s;
    }

    // random Puiseux series on grid 1/grid, lead in [lo, lo + 2], order lead + len/grid
    Series series(int grid, long lo = -1, long len = 12) {
        Rational lead = make_rational(integer(lo * grid, (lo + 2) * grid), grid);
        std::vector<Scalar> c;
        c.push_back(nonzero());
        for (long k = 1; k < len; ++k) c.push_back(integer(0, 3) == 0 ? Scalar(0) : scalar());
        return Series::from_coeffs(lead, grid, c, lead + make_rational(len, grid));
    }
    // 1 + higher terms, for fractional powers
    Series unit(int grid, long len = 12) {
        std::vector<Scalar> c{Scalar(1)};
        for (long k = 1; k < len; ++k) c.push_back(scalar());
        return Series::from_coeffs(Rational(0), grid, c, make_rational(len, grid));
    }
    // integral exponents, lead > 0
    Series inner(long len = 10) {
        std::vector<Scalar> c{nonzero()};
        for (long k = 1; k < len; ++k) c.push_back(scalar());
        return Series::from_coeffs(Rational(integer(1, 2)), 1, c);
    }
    Series outer(long len = 10) {
        std::vector<Scalar> c;
        for (long k = 0; k < len; ++k) c.push_back(scalar());
        c[0] = nonzero();
        return Series::from_coeffs(Rational(0), 1, c);
    }
    UniPoly poly(int max_degree) {
        std::vector<Scalar> c;
        for (int k = 0, d = int(integer(0, max_degree)); k <= d; ++k) c.push_back(Scalar(rational()));
        return UniPoly(c);
    }
    CurveFunction function(const Curve& curve) {
        CurveFunction f(curve, poly(3), poly(2), UniPoly::constant(1));
        return f.is_zero() ? CurveFunction::constant(curve, nonzero()) : f;
    }
};

// equality below the smaller of the two orders
inline bool agree(const Series& a, const Series& b) {
    Rational n = std::min(a.order(), b.order());
    return !first_mismatch(a, b, n).has_value();
}

inline bool same_map(const RationalMap& a, const RationalMap& b) { return (a.num() * b.den() - b.num() * a.den()).is_zero(); }


struct Outcome {
    int cases = 0;
    int failures = 0;
    void check(bool ok) { failures += !ok; }
};

inline Outcome ring_laws(unsigned long seed = 1, int cases = kCases) {
    Gen g(seed);
    Outcome o{cases};
    for (int i = 0; i < cases; ++i) {
        int grid = int(g.integer(1, 3));
        Series a = g.series(grid), b = g.series(int(g.integer(1, 3))), c = g.series(grid);
        o.check(agree(a + b, b + a));
        o.check(agree((a + b) + c, a + (b + c)));
        o.check(agree(a * b, b * a));
        o.check(agree((a * b) * c, a * (b * c)));
        o.check(agree(a * (b + c), a * b + a * c));
        o.check((a - a).is_zero());
        o.check(agree(a * a.inverse(), Series::constant(Scalar(1), Rational(100))));
        Scalar s = g.scalar();
        o.check(agree(s * (a + b), s * a + s * b));
    }
    return o;
}

inline Outcome pow_additivity(unsigned long seed = 2, int cases = kCases) {
    Gen g(seed);
    Outcome o{cases};
    for (int i = 0; i < cases; ++i) {
        Series u = g.unit(int(g.integer(1, 3)));
        Rational r = g.rational(), s = g.rational();
        o.check(agree(pow(u, r) * pow(u, s), pow(u, r + s)));
        o.check(agree(pow(pow(u, r), s), pow(u, r * s)));
        // integer powers of a general series
        Series a = g.series(int(g.integer(1, 2)), 0, 8);
        long m = g.integer(-2, 3), n = g.integer(-2, 3);
        o.check(agree(pow(a, Rational(m)) * pow(a, Rational(n)), pow(a, Rational(m + n))));
    }
    return o;
}

inline Outcome composition_associativity(unsigned long seed = 3, int cases = kCases) {
    Gen g(seed);
    Outcome o{cases};
    for (int i = 0; i < cases; ++i) {
        Series f = g.outer(), h = g.inner(8), k = g.inner(8);
        o.check(agree(compose(compose(f, h), k), compose(f, compose(h, k))));
        // composition is a ring map in the outer argument
        Series f2 = g.outer();
        o.check(agree(compose(f * f2, h), compose(f, h) * compose(f2, h)));
    }
    return o;
}

inline Outcome norm_multiplicativity(unsigned long seed = 4, int cases = kCases) {
    Gen g(seed);
    Outcome o{cases};
    const Curve* curves[] = {&Curve::e7(), &Curve::e4()};
    for (int i = 0; i < cases; ++i) {
        Scalar a = g.scalar(), b = g.scalar();
        o.check((a * b).norm() == a.norm() * b.norm());
        o.check((a * a.conj()).is_rational());
        const Curve& c = *curves[i % 2];
        CurveFunction f = g.function(c), h = g.function(c);
        o.check(same_map((f * h).norm(), f.norm() * h.norm()));
    }
    return o;
}

inline Outcome truncation_soundness(unsigned long seed = 5, int cases = kCases) {
    Gen g(seed);
    Outcome o{cases};
    for (int i = 0; i < cases; ++i) {
        int grid = int(g.integer(1, 3));
        Series a = g.series(grid), b = g.series(grid);
        Rational n = std::min(a.order(), b.order()) - make_rational(g.integer(0, 6), grid);
        // truncating the inputs never changes the product below the shared precision
        Series full = a * b;
        Series cut = a.truncated(n) * b.truncated(n);
        o.check(cut.order() <= full.order());
        o.check(agree(cut, full));
        o.check(a.truncated(n).order() <= n);
        o.check(agree(a.truncated(n), a));
        o.check(agree((a + b).truncated(n), a.truncated(n) + b.truncated(n)));
        Series u = g.unit(grid);
        Rational r = g.rational();
        Rational m = u.order() - make_rational(g.integer(0, 6), grid);
        o.check(agree(pow(u.truncated(m), r), pow(u, r)));
    }
    return o;
}

}  // namespace darboux::props
