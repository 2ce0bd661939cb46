#include "darboux/curve.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace darboux {

namespace {

long deg_or_neg_inf(const UniPoly& p, long scale, long shift) {
    return p.is_zero() ? std::numeric_limits<long>::min() / 4 : scale * p.degree() + shift;
}

// p(r) = num / den with den = r.den^deg p
std::pair<UniPoly, UniPoly> substitute(const UniPoly& p, const RationalMap& r) {
    if (p.is_zero()) return {UniPoly(), UniPoly::constant(1)};
    const int n = p.degree();
    UniPoly num, nk = UniPoly::constant(1);
    std::vector<UniPoly> dpow(n + 1, UniPoly::constant(1));
    for (int k = 1; k <= n; ++k) dpow[k] = dpow[k - 1] * r.den();
    for (int k = 0; k <= n; ++k) {
        if (!p.coeff(k).is_zero()) num += p.coeff(k) * (nk * dpow[n - k]);
        nk *= r.num();
    }
    return {num, dpow[n]};
}

CurveFunction pullback(const CurveFunction& f, const Curve& target, const RationalMap& xmap, const RationalMap& ycoef) {
    auto [an, ad] = substitute(f.A(), xmap);
    auto [bn, bd] = substitute(f.B(), xmap);
    auto [dn, dd] = substitute(f.d(), xmap);
    RationalMap a(an, ad), b = RationalMap(bn, bd) * ycoef, d(dn, dd);
    return CurveFunction(target, a / d, b / d);
}

std::string place_x(const Rational& x) { return x.get_str(); }

}  // namespace

// ---------------------------------------------------------------- curves

const Curve& Curve::e7() {
    static const Curve c{CurveId::E7, "E7", "u", "v", UniPoly{1, -11, 32}};
    return c;
}

const Curve& Curve::e4() {
    static const Curve c{CurveId::E4, "E4", "p", "w", UniPoly{1, 22, -7}};
    return c;
}

const Curve& Curve::get(CurveId id) { return id == CurveId::E7 ? e7() : e4(); }

bool on_curve(const Curve& c, const Point& p) { return Scalar(p.y * p.y) == c.rhs()(Scalar(p.x)); }

// ---------------------------------------------------------------- functions

CurveFunction::CurveFunction(const Curve& c, UniPoly a, UniPoly b, UniPoly d)
    : curve_(&c), a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (d_.is_zero()) throw CurveError("curve function with zero denominator");
}

CurveFunction::CurveFunction(const Curve& c, const RationalMap& a, const RationalMap& b) : curve_(&c) {
    UniPoly l = a.den() * b.den();
    UniPoly g = gcd(a.den(), b.den());
    if (g.degree() > 0) l = exact_div(l, g);
    a_ = a.num() * exact_div(l, a.den());
    b_ = b.num() * exact_div(l, b.den());
    d_ = l;
}

CurveFunction CurveFunction::constant(const Curve& c, const Scalar& s) { return CurveFunction(c, UniPoly::constant(s)); }
CurveFunction CurveFunction::x(const Curve& c) { return CurveFunction(c, UniPoly::x()); }
CurveFunction CurveFunction::y(const Curve& c) { return CurveFunction(c, UniPoly(), UniPoly::constant(1)); }

CurveFunction CurveFunction::from_terms(const Curve& c, const std::vector<std::tuple<Rational, int, int>>& terms) {
    UniPoly a, b;
    for (const auto& [coef, i, j] : terms) {
        UniPoly m = UniPoly::monomial(Scalar(coef), i);
        if (j == 0) a += m;
        else if (j == 1) b += m;
        else throw CurveError("terms must be linear in y");
    }
    return CurveFunction(c, a, b);
}

void CurveFunction::check_same(const CurveFunction& o) const {
    if (curve_ != o.curve_) throw CurveError("functions live on different curves");
}

CurveFunction CurveFunction::conj() const { return CurveFunction(*curve_, a_, -b_, d_); }

RationalMap CurveFunction::norm() const {
    if (is_zero()) throw CurveError("norm of the zero function");
    return RationalMap(a_ * a_ - b_ * b_ * curve_->rhs(), d_ * d_);
}

CurveFunction CurveFunction::inverse() const {
    if (is_zero()) throw CurveError("inverse of the zero function");
    // d / (A + By) = d (A - By) / (A^2 - B^2 F)
    UniPoly n = a_ * a_ - b_ * b_ * curve_->rhs();
    return CurveFunction(*curve_, d_ * a_, -(d_ * b_), n);
}

CurveFunction CurveFunction::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CurveFunction r = constant(*curve_, Scalar(1)), base = *this;
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

CurveFunction CurveFunction::reduced() const {
    UniPoly g = gcd(gcd(a_, b_), d_);
    UniPoly a = a_, b = b_, d = d_;
    if (g.degree() > 0) {
        a = exact_div(a, g);
        b = exact_div(b, g);
        d = exact_div(d, g);
    }
    Scalar s = d.lc().inverse();
    return CurveFunction(*curve_, a * s, b * s, d * s);
}

CurveFunction& CurveFunction::operator+=(const CurveFunction& o) {
    if (!curve_) return *this = o;
    check_same(o);
    if (d_ == o.d_) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    a_ = a_ * o.d_ + o.a_ * d_;
    b_ = b_ * o.d_ + o.b_ * d_;
    d_ = d_ * o.d_;
    return *this;
}

CurveFunction& CurveFunction::operator-=(const CurveFunction& o) { return *this += -o; }

CurveFunction& CurveFunction::operator*=(const CurveFunction& o) {
    check_same(o);
    UniPoly bb = b_ * o.b_;
    UniPoly a = a_ * o.a_;
    if (!bb.is_zero()) a += bb * curve_->rhs();
    UniPoly b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    if (o.d_.degree() > 0 || !o.d_.lc().is_one()) d_ = d_ * o.d_;
    return *this;
}

CurveFunction CurveFunction::operator-() const { return CurveFunction(*curve_, -a_, -b_, d_); }

CurveFunction operator*(CurveFunction a, const Scalar& s) {
    a.a_ *= s;
    a.b_ *= s;
    return a;
}

bool operator==(const CurveFunction& f, const CurveFunction& g) {
    f.check_same(g);
    return f.a_ * g.d_ == g.a_ * f.d_ && f.b_ * g.d_ == g.b_ * f.d_;
}

std::string CurveFunction::str() const {
    const std::string& x = curve_->xname;
    std::string s = "(" + a_.str(x) + ") + (" + b_.str(x) + ")*" + curve_->yname;
    if (d_.degree() > 0 || !d_.lc().is_one()) s = "[" + s + "] / (" + d_.str(x) + ")";
    return s;
}

CurveFraction::CurveFraction(const CurveFunction& f) : num(f), den(CurveFunction::constant(f.curve(), Scalar(1))) {}

CurveFraction::CurveFraction(CurveFunction n, CurveFunction d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw CurveError("fraction with zero denominator");
}

CurveFraction CurveFraction::pow(long e) const {
    if (e < 0) return CurveFraction(den.pow(-e), num.pow(-e));
    return CurveFraction(num.pow(e), den.pow(e));
}

CurveFraction& CurveFraction::operator*=(const CurveFraction& o) {
    num *= o.num;
    den *= o.den;
    return *this;
}

CurveFraction& CurveFraction::operator/=(const CurveFraction& o) {
    if (o.num.is_zero()) throw CurveError("division by the zero function");
    num *= o.den;
    den *= o.num;
    return *this;
}

CurveFraction evaluate(const RationalMap& r, const CurveFraction& f) {
    const Curve& c = f.num.curve();
    // Factor by factor: evaluating each squarefree part homogeneously and
    // raising it keeps the intermediate polynomials far smaller than a
    // single homogeneous sum of degree deg r.
    auto homogeneous = [&](const UniPoly& p) {
        const int n = p.degree();
        std::vector<CurveFunction> npow(n + 1), dpow(n + 1);
        npow[0] = dpow[0] = CurveFunction::constant(c, Scalar(1));
        for (int k = 1; k <= n; ++k) {
            npow[k] = npow[k - 1] * f.num;
            dpow[k] = dpow[k - 1] * f.den;
        }
        CurveFunction s = CurveFunction::constant(c, Scalar(0));
        for (int k = 0; k <= n; ++k)
            if (!p.coeff(k).is_zero()) s += (npow[k] * dpow[n - k]) * p.coeff(k);
        return s;
    };
    auto side = [&](const UniPoly& p) {
        CurveFunction acc = CurveFunction::constant(c, p.lc());
        for (const auto& [g, e] : squarefree_decomposition(p)) acc *= homogeneous(g).pow(e);
        return acc;
    };
    CurveFunction num = side(r.num()), den = side(r.den());
    int gap = r.num().degree() - r.den().degree();
    if (gap > 0) den *= f.den.pow(gap);
    if (gap < 0) num *= f.den.pow(-gap);
    return CurveFraction(num, den);
}

// ---------------------------------------------------------------- local data

LocalExpansion local_expansion(const Curve& c, const Point& p, const Rational& order) {
    if (!on_curve(c, p)) throw CurveError("point (" + p.x.get_str() + ", " + p.y.get_str() + ") is not on " + c.name);
    const UniPoly shift{0, 1};
    UniPoly moved = c.rhs().compose(UniPoly::constant(Scalar(p.x)) + shift);  // F(x0 + s)
    if (sgn(p.y) != 0) {
        // t = x - x0, y = y0 sqrt(F(x0 + t) / y0^2)
        Series x = Series::constant(Scalar(p.x), order) + Series::monomial(Scalar(1), Rational(1), order);
        Rational inv = 1 / (p.y * p.y);
        Series ratio = to_series(moved, order) * Scalar(inv);
        Series y = pow(ratio, Rational(1, 2)) * Scalar(p.y);
        return {x, y};
    }
    // 2-torsion point: t = y, x - x0 = t^2 / g(x) with F = (x - x0) g
    UniPoly g = exact_div(moved, shift);
    if (g.coeff(0).is_zero()) throw CurveError("singular point on " + c.name);
    Series t2 = Series::monomial(Scalar(1), Rational(2), order);
    Series s = Series::monomial(g.coeff(0).inverse(), Rational(2), std::min(order, Rational(4)));
    while (s.order() < order) {
        Series gs = evaluate(g, s);
        s = multiply_truncated(t2, gs.inverse(), std::min(order, Rational(s.order() + 2)));
    }
    Series x = s + Series::constant(Scalar(p.x), order);
    return {x, Series::monomial(Scalar(1), Rational(1), order)};
}

Series expand_at(const CurveFunction& f, const Point& p, const Rational& order) {
    Rational work = order + 4;
    for (int attempt = 0; attempt < 8; ++attempt) {
        auto le = local_expansion(f.curve(), p, work);
        Series num = evaluate(f.A(), le.x) + evaluate(f.B(), le.x) * le.y;
        Series r = num / evaluate(f.d(), le.x);
        if (r.order() >= order) return r.truncated(order);
        work += order - r.order() + 2;
    }
    throw CurveError("expansion did not reach the requested order");
}

long valuation(const CurveFunction& f, const Point& p) {
    if (f.is_zero()) throw CurveError("valuation of the zero function");
    const Curve& c = f.curve();
    if (!on_curve(c, p)) throw CurveError("point (" + p.x.get_str() + ", " + p.y.get_str() + ") is not on " + c.name);
    // A + By has exactly max(2 deg A, 3 + 2 deg B) zeros, so that order suffices
    long bound = std::max(deg_or_neg_inf(f.A(), 2, 0), deg_or_neg_inf(f.B(), 2, 3));
    auto le = local_expansion(c, p, Rational(bound + 1));
    Series num = evaluate(f.A(), le.x) + evaluate(f.B(), le.x) * le.y;
    if (num.is_zero()) throw CurveError("numerator vanished to its full zero count");
    long v = num.lead().get_num().get_si();
    int m = multiplicity(f.d(), UniPoly::linear_root(Scalar(p.x)));
    return v - m * (sgn(p.y) == 0 ? 2 : 1);
}

long valuation(const CurveFraction& f, const Point& p) { return valuation(f.num, p) - valuation(f.den, p); }

long valuation_at_infinity(const CurveFunction& f) {
    if (f.is_zero()) throw CurveError("valuation of the zero function");
    long poles = std::max(deg_or_neg_inf(f.A(), 2, 0), deg_or_neg_inf(f.B(), 2, 3));
    return 2 * f.d().degree() - poles;
}

long valuation_at_infinity(const CurveFraction& f) {
    return valuation_at_infinity(f.num) - valuation_at_infinity(f.den);
}

// ---------------------------------------------------------------- clusters

PlaceCluster make_cluster(const std::string& name, const UniPoly& minpoly, const CurveFunction& defining) {
    const Curve& c = defining.curve();
    if (gcd(minpoly, c.rhs()).degree() > 0) throw CurveError("cluster " + name + " meets the 2-torsion");
    UniPoly b = divmod(defining.B(), minpoly).second;
    UniPoly s = divmod(-(defining.A() * invmod(b, minpoly)), minpoly).second;
    if (!divmod(s * s - c.rhs(), minpoly).second.is_zero())
        throw CurveError("cluster " + name + ": branch does not lie on " + c.name);
    return {name, minpoly, s};
}

std::optional<long> cluster_valuation(const CurveFunction& f, const PlaceCluster& cl, std::string* why) {
    const UniPoly& m = cl.minpoly;
    UniPoly bs = f.B() * cl.branch;
    UniPoly plus = divmod(f.A() + bs, m).second;
    UniPoly minus = divmod(f.A() - bs, m).second;
    long dpart = multiplicity(f.d(), m);
    if (gcd(plus, m).degree() == 0) return -dpart;
    if (plus.is_zero() && gcd(minus, m).degree() == 0) {
        UniPoly n = f.A() * f.A() - f.B() * f.B() * f.curve().rhs();
        return multiplicity(n, m) - dpart;
    }
    if (why) *why = "cluster " + cl.name + ": both branches meet the function; residue test inconclusive";
    return std::nullopt;
}

std::optional<long> cluster_valuation(const CurveFraction& f, const PlaceCluster& cl, std::string* why) {
    auto a = cluster_valuation(f.num, cl, why);
    auto b = cluster_valuation(f.den, cl, why);
    if (!a || !b) return std::nullopt;
    return *a - *b;
}

const std::vector<PlaceCluster>& clusters(const Curve& c) {
    static const std::vector<PlaceCluster> e7 = [] {
        const Curve& k = Curve::e7();
        return std::vector<PlaceCluster>{
            make_cluster("U", UniPoly{-1, 20, -96, 64}, table_function(k, "G3")),
            make_cluster("V", UniPoly{-1, 48, -320, 512}, table_function(k, "G4")),
        };
    }();
    static const std::vector<PlaceCluster> e4 = [] {
        const Curve& k = Curve::e4();
        return std::vector<PlaceCluster>{
            make_cluster("S", UniPoly{-1, 35, -147, 49}, table_function(k, "F5")),
            make_cluster("T", UniPoly{-1, 2030, 41209, -23324, -74431, 33614, 16807}, table_function(k, "G5")),
        };
    }();
    return c.id == CurveId::E7 ? e7 : e4;
}

const PlaceCluster& find_cluster(const Curve& c, const std::string& name) {
    for (const auto& cl : clusters(c))
        if (cl.name == name) return cl;
    throw CurveError("no cluster " + name + " on " + c.name);
}

// ---------------------------------------------------------------- divisors

std::string Place::label() const {
    switch (kind) {
        case Kind::Infinity:
            return "O";
        case Kind::Cluster:
            return cluster;
        case Kind::Point:
            break;
    }
    return "(" + place_x(point.x) + "," + point.y.get_str() + ")";
}

FracDivisor& FracDivisor::add(const Place& p, const Rational& c) {
    terms.emplace_back(p, c);
    return *this;
}

FracDivisor& FracDivisor::operator+=(const FracDivisor& o) {
    terms.insert(terms.end(), o.terms.begin(), o.terms.end());
    return *this;
}

FracDivisor FracDivisor::operator*(const Rational& c) const {
    FracDivisor r = *this;
    for (auto& t : r.terms) t.second *= c;
    return r;
}

Rational FracDivisor::coefficient(const Place& p) const {
    Rational s;
    for (const auto& [q, c] : terms)
        if (q == p) s += c;
    return s;
}

FracDivisor FracDivisor::normalized() const {
    std::map<std::string, std::pair<Place, Rational>> acc;
    for (const auto& [p, c] : terms) {
        auto it = acc.find(p.label());
        if (it == acc.end()) acc.emplace(p.label(), std::make_pair(p, c));
        else it->second.second += c;
    }
    FracDivisor r;
    for (auto& [k, v] : acc)
        if (sgn(v.second) != 0) r.terms.push_back(v);
    return r;
}

bool operator==(const FracDivisor& a, const FracDivisor& b) {
    auto x = a.normalized(), y = b.normalized();
    if (x.terms.size() != y.terms.size()) return false;
    for (std::size_t i = 0; i < x.terms.size(); ++i)
        if (!(x.terms[i].first == y.terms[i].first) || x.terms[i].second != y.terms[i].second) return false;
    return true;
}

std::string FracDivisor::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : normalized().terms) {
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        Rational a = abs(c);
        if (a != 1) os << a.get_str() << "*";
        os << p.label();
    }
    return first ? "0" : os.str();
}

Rational degree(const FracDivisor& d, const Curve& c) {
    Rational s;
    for (const auto& [p, coef] : d.terms) {
        long size = p.kind == Place::Kind::Cluster ? find_cluster(c, p.cluster).minpoly.degree() : 1;
        s += coef * size;
    }
    return s;
}

VerificationReport verify_divisor(const std::string& id, const std::string& anchor, const CurveFraction& f,
                                  const FracDivisor& expected) {
    VerificationReport rep = make_report(id, anchor, true);
    std::vector<std::string> problems;
    const Curve& c = f.num.curve();
    FracDivisor d = expected.normalized();
    try {
        for (const auto& [p, coef] : d.terms)
            if (!is_integer(coef)) throw CurveError("divisor of a function must be integral at " + p.label());
        if (sgn(degree(d, c)) != 0) problems.push_back("degree " + degree(d, c).get_str() + " != 0");
        long at_o = valuation_at_infinity(f);
        if (Rational(at_o) != d.coefficient(Place::infinity()))
            problems.push_back("order at O is " + std::to_string(at_o));
        // pushforward to the x-line, checked against the norm
        RationalMap expect_norm = RationalMap(UniPoly::constant(1));
        for (const auto& [p, coef] : d.terms) {
            long e = coef.get_num().get_si();
            if (p.kind == Place::Kind::Point) {
                if (!on_curve(c, p.point)) throw CurveError(p.label() + " is not on " + c.name);
                long v = valuation(f, p.point);
                if (v != e) problems.push_back("order at " + p.label() + " is " + std::to_string(v));
                UniPoly lin = UniPoly::linear_root(Scalar(p.point.x));
                RationalMap factor = e >= 0 ? RationalMap(lin.pow(unsigned(e))) : RationalMap(UniPoly::constant(1), lin.pow(unsigned(-e)));
                expect_norm *= factor;
            } else if (p.kind == Place::Kind::Cluster) {
                const PlaceCluster& cl = find_cluster(c, p.cluster);
                std::string why;
                auto v = cluster_valuation(f, cl, &why);
                if (!v) problems.push_back(why);
                else if (*v != e) problems.push_back("order at " + p.label() + " is " + std::to_string(*v));
                RationalMap factor = e >= 0 ? RationalMap(cl.minpoly.pow(unsigned(e)))
                                            : RationalMap(UniPoly::constant(1), cl.minpoly.pow(unsigned(-e)));
                expect_norm *= factor;
            }
        }
        RationalMap ratio = (f.num.norm() / f.den.norm()) / expect_norm;
        if (ratio.degree() != 0) problems.push_back("norm has zeros or poles outside the listed places: " + ratio.str(c.xname));
    } catch (const std::exception& e) {
        rep.status = Status::Error;
        rep.detail = e.what();
        return rep;
    }
    if (!problems.empty()) {
        rep.status = Status::Fail;
        for (std::size_t i = 0; i < problems.size(); ++i) rep.detail += (i ? "; " : "") + problems[i];
    } else {
        rep.detail = "div = " + d.str();
    }
    return rep;
}

// ---------------------------------------------------------------- tables

namespace {

using Terms = std::vector<std::tuple<Rational, int, int>>;

FracDivisor div_of(std::initializer_list<std::pair<Place, long>> parts) {
    FracDivisor d;
    for (const auto& [p, c] : parts) d.add(p, Rational(c));
    return d;
}

Place pt(long xn, long xd, long yn, long yd) { return Place::at(make_rational(xn, xd), make_rational(yn, yd)); }

std::vector<TableEntry> build_e7() {
    const Curve& c = Curve::e7();
    auto f = [&](Terms t) { return CurveFunction::from_terms(c, t); };
    const Place O = Place::infinity(), P0 = pt(0, 1, 0, 1);
    const Place Qp = pt(1, 4, 1, 4), Qm = pt(1, 4, -1, 4), Rp = pt(1, 8, 1, 8), Rm = pt(1, 8, -1, 8);
    const Place U = Place::orbit("U"), V = Place::orbit("V");
    return {
        {"u", f({{1, 1, 0}}), div_of({{P0, 2}, {O, -2}})},
        {"1-4u", f({{1, 0, 0}, {-4, 1, 0}}), div_of({{Qp, 1}, {Qm, 1}, {O, -2}})},
        {"1-8u", f({{1, 0, 0}, {-8, 1, 0}}), div_of({{Rp, 1}, {Rm, 1}, {O, -2}})},
        {"v-u", f({{1, 0, 1}, {-1, 1, 0}}), div_of({{P0, 1}, {Qp, 1}, {Rp, 1}, {O, -3}})},
        {"v+u", f({{1, 0, 1}, {1, 1, 0}}), div_of({{P0, 1}, {Qm, 1}, {Rm, 1}, {O, -3}})},
        {"F3", f({{1, 0, 0}, {-4, 0, 1}, {-4, 1, 0}}), div_of({{Rp, 3}, {O, -3}})},
        {"F3~", f({{1, 0, 0}, {4, 0, 1}, {-4, 1, 0}}), div_of({{Rm, 3}, {O, -3}})},
        {"F4", f({{1, 0, 0}, {-2, 0, 1}, {-6, 1, 0}}), div_of({{Qm, 2}, {Rp, 1}, {O, -3}})},
        {"F4~", f({{1, 0, 0}, {2, 0, 1}, {-6, 1, 0}}), div_of({{Qp, 2}, {Rm, 1}, {O, -3}})},
        {"G3", f({{1, 0, 0}, {2, 0, 1}, {-10, 1, 0}, {16, 2, 0}}), div_of({{U, 1}, {Qp, 1}, {O, -4}})},
        {"G4", f({{1, 0, 0}, {-4, 0, 1}, {-20, 1, 0}, {64, 2, 0}}), div_of({{V, 1}, {Rm, 1}, {O, -4}})},
        {"G3^", f({{1, 0, 1}, {3, 1, 0}, {-4, 1, 1}, {-20, 2, 0}}), div_of({{U, 1}, {P0, 1}, {Rm, 1}, {O, -5}})},
        {"G4^", f({{1, 0, 1}, {-5, 1, 0}, {-8, 1, 1}, {24, 2, 0}}), div_of({{V, 1}, {P0, 1}, {Qp, 1}, {O, -5}})},
    };
}

std::vector<TableEntry> build_e4() {
    const Curve& c = Curve::e4();
    auto f = [&](Terms t) { return CurveFunction::from_terms(c, t); };
    const Place O = Place::infinity(), P0 = pt(0, 1, 0, 1);
    const Place Ap = pt(1, 1, 4, 1), Am = pt(1, 1, -4, 1), Bp = pt(-1, 7, 4, 7), Bm = pt(-1, 7, -4, 7);
    const Place S = Place::orbit("S"), T = Place::orbit("T");
    return {
        {"p", f({{1, 1, 0}}), div_of({{P0, 2}, {O, -2}})},
        {"1-p", f({{1, 0, 0}, {-1, 1, 0}}), div_of({{Ap, 1}, {Am, 1}, {O, -2}})},
        {"w-4p", f({{1, 0, 1}, {-4, 1, 0}}), div_of({{P0, 1}, {Ap, 1}, {Bm, 1}, {O, -3}})},
        {"w+5p-p^2", f({{1, 0, 1}, {5, 1, 0}, {-1, 2, 0}}), div_of({{P0, 1}, {Am, 3}, {O, -4}})},
        {"1-w+3p", f({{1, 0, 0}, {-1, 0, 1}, {3, 1, 0}}), div_of({{Ap, 2}, {Bp, 1}, {O, -3}})},
        {"1+w+3p", f({{1, 0, 0}, {1, 0, 1}, {3, 1, 0}}), div_of({{Am, 2}, {Bm, 1}, {O, -3}})},
        {"1+7w+35p", f({{1, 0, 0}, {7, 0, 1}, {35, 1, 0}}), div_of({{Bp, 3}, {O, -3}})},
        {"1-7w+35p", f({{1, 0, 0}, {-7, 0, 1}, {35, 1, 0}}), div_of({{Bm, 3}, {O, -3}})},
        {"F5", f({{1, 0, 0}, {-2, 0, 1}, {-16, 1, 0}, {7, 2, 0}}), div_of({{Am, 1}, {S, 1}, {O, -4}})},
        {"F6", f({{1, 0, 0}, {-10, 0, 1}, {47, 1, 0}, {2, 1, 1}, {-17, 2, 0}, {1, 3, 0}}), div_of({{Ap, 6}, {O, -6}})},
        {"F6~", f({{1, 0, 0}, {10, 0, 1}, {47, 1, 0}, {-2, 1, 1}, {-17, 2, 0}, {1, 3, 0}}), div_of({{Am, 6}, {O, -6}})},
        {"G5",
         f({{1, 0, 0}, {47, 0, 1}, {89, 1, 0}, {-14, 1, 1}, {91, 2, 0}, {-49, 2, 1}, {-245, 3, 0}}),
         div_of({{Am, 1}, {T, 1}, {O, -7}})},
    };
}

}  // namespace

const std::vector<TableEntry>& divisor_table(const Curve& c) {
    static const std::vector<TableEntry> e7 = build_e7();
    static const std::vector<TableEntry> e4 = build_e4();
    return c.id == CurveId::E7 ? e7 : e4;
}

const CurveFunction& table_function(const Curve& c, const std::string& name) {
    for (const auto& e : divisor_table(c))
        if (e.name == name) return e.f;
    throw CurveError("no function " + name + " in the table of " + c.name);
}

CurveFraction phi7() {
    const Curve& c = Curve::e7();
    auto t = [&](const char* n) { return table_function(c, n); };
    CurveFunction num = (-t("G3^")).pow(7) * t("1-4u") * Scalar(128);
    CurveFunction den = t("u").pow(3) * t("1-8u") * t("G4").pow(7);
    return CurveFraction(num, den);
}

CurveFraction phi4() {
    const Curve& c = Curve::e4();
    auto t = [&](const char* n) { return table_function(c, n); };
    CurveFunction num = t("F5").pow(7) * t("w-4p") * Scalar(512);
    CurveFunction den = t("1+w+3p") * t("G5").pow(4);
    return CurveFraction(num, den);
}

FracDivisor phi7_divisor() {
    return div_of({{pt(0, 1, 0, 1), 1}, {pt(1, 4, 1, 4), 1}, {pt(1, 4, -1, 4), 1}, {Place::orbit("U"), 7},
                   {Place::infinity(), -1}, {pt(1, 8, 1, 8), -1}, {pt(1, 8, -1, 8), -1}, {Place::orbit("V"), -7}});
}

FracDivisor phi4_divisor() {
    return div_of({{pt(0, 1, 0, 1), 1}, {pt(1, 1, 4, 1), 1}, {pt(1, 1, -4, 1), 1}, {Place::orbit("S"), 7},
                   {Place::orbit("T"), -4}});
}

// ---------------------------------------------------------------- maps

CurveFunction isogeny_pullback(const CurveFunction& f) {
    if (f.curve().id != CurveId::E4) throw CurveError("the isogeny pulls back functions on E4");
    const UniPoly c7 = Curve::e7().cubic;
    RationalMap p(UniPoly::x(), c7);
    RationalMap wcoef(UniPoly{1, 0, -32}, c7 * c7);
    return pullback(f, Curve::e7(), p, wcoef);
}

CurveFraction isogeny_pullback(const CurveFraction& f) {
    return CurveFraction(isogeny_pullback(f.num), isogeny_pullback(f.den));
}

CurveFunction involution_apply(const CurveFunction& f) {
    if (f.curve().id != CurveId::E7) throw CurveError("the involution acts on E7");
    RationalMap u(UniPoly::constant(1), UniPoly{0, 32});
    RationalMap vcoef(UniPoly::constant(-1), UniPoly{0, 0, 32});
    return pullback(f, Curve::e7(), u, vcoef);
}

CurveFraction involution_apply(const CurveFraction& f) {
    return CurveFraction(involution_apply(f.num), involution_apply(f.den));
}

CurveFunction fiber_projection() {
    const Curve& c = Curve::e7();
    CurveFunction s = CurveFunction::from_terms(c, {{1, 1, 0}, {1, 0, 1}});
    UniPoly den = UniPoly{-1, 4}.pow(2) * UniPoly{-1, 8};
    CurveFunction sq = s * s * Scalar(4);
    return CurveFunction(c, sq.A(), sq.B(), den);
}

// ---------------------------------------------------------------- torsion

GroupPoint group_add(const Curve& c, const GroupPoint& a, const GroupPoint& b) {
    if (a.infinity) return b;
    if (b.infinity) return a;
    const UniPoly F = c.rhs();
    const Rational a3 = F.coeff(3).re(), a2 = F.coeff(2).re();
    Rational lambda;
    if (a.p.x == b.p.x) {
        if (a.p.y != b.p.y || sgn(a.p.y) == 0) return GroupPoint{};
        lambda = F.derivative()(Scalar(a.p.x)).re() / (2 * a.p.y);
    } else {
        lambda = (b.p.y - a.p.y) / (b.p.x - a.p.x);
    }
    Rational x3 = (lambda * lambda - a2) / a3 - a.p.x - b.p.x;
    Rational y3 = -(a.p.y + lambda * (x3 - a.p.x));
    return GroupPoint{false, {x3, y3}};
}

long point_order(const Curve& c, const GroupPoint& a, long limit) {
    GroupPoint acc = a;
    for (long n = 1; n <= limit; ++n) {
        if (acc.infinity) return n;
        acc = group_add(c, acc, a);
    }
    return 0;
}

TorsionAudit torsion_audit(const Curve& c) {
    TorsionAudit t;
    GroupPoint base{false, {Rational(1), Rational(4)}};
    if (!on_curve(c, base.p)) throw CurveError("(1, 4) is not on " + c.name);
    t.order_of_1_4 = point_order(c, base);
    t.two_torsion_only_origin = rational_roots(c.cubic).empty();
    // tangent lines y = alpha x through (0,0): alpha^2 x = c(x) has a double root
    // in x, i.e. the discriminant in x vanishes; coefficients are polynomials in alpha
    const Rational a2 = c.cubic.coeff(2).re(), a1 = c.cubic.coeff(1).re(), a0 = c.cubic.coeff(0).re();
    UniPoly b = UniPoly(std::vector<Scalar>{Scalar(a1), Scalar(0), Scalar(-1)});  // a1 - alpha^2
    UniPoly disc = b * b - UniPoly::constant(Scalar(Rational(4 * a2 * a0)));
    t.four_torsion_quartic = disc * disc.lc().inverse();
    t.no_rational_four_torsion = rational_roots(t.four_torsion_quartic).empty();
    t.torsion_order = (t.order_of_1_4 == 6 && t.two_torsion_only_origin && t.no_rational_four_torsion) ? 6 : 0;
    std::ostringstream os;
    os << "(1,4) has order " << t.order_of_1_4 << "; rational 2-torsion "
       << (t.two_torsion_only_origin ? "{(0,0)}" : "larger than {(0,0)}") << "; 4-torsion tangents "
       << t.four_torsion_quartic.str("a") << (t.no_rational_four_torsion ? " (no rational root)" : " (rational root)")
       << "; torsion " << (t.torsion_order == 6 ? "Z/6Z" : "undetermined");
    t.summary = os.str();
    return t;
}

}  // namespace darboux
