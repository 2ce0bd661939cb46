#pragma once

#include "darboux/poly.hpp"
#include "darboux/report.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace darboux {

class CurveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class CurveId { E7, E4 };

// y^2 = x * c(x), modelled affinely with one place O at infinity.
struct Curve {
    CurveId id;
    std::string name;
    std::string xname, yname;
    UniPoly cubic;  // c(x)
    UniPoly rhs() const { return UniPoly::x() * cubic; }

    static const Curve& e7();  // v^2 = u(1 - 11u + 32u^2)
    static const Curve& e4();  // w^2 = p(1 + 22p - 7p^2)
    static const Curve& get(CurveId id);
};

struct Point {
    Rational x, y;
    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

// (A(x) + B(x) y) / d(x). The representation is not reduced; every query
// (valuations, equality, pole order) is insensitive to common factors.
class CurveFunction {
public:
    CurveFunction() = default;
    CurveFunction(const Curve& c, UniPoly a, UniPoly b = {}, UniPoly d = UniPoly::constant(1));
    CurveFunction(const Curve& c, const RationalMap& a, const RationalMap& b);
    static CurveFunction constant(const Curve& c, const Scalar& s);
    static CurveFunction x(const Curve& c);
    static CurveFunction y(const Curve& c);
    // sum of c * x^i * y^j over (c, i, j), j in {0, 1}
    static CurveFunction from_terms(const Curve& c, const std::vector<std::tuple<Rational, int, int>>& terms);

    const Curve& curve() const { return *curve_; }
    const UniPoly& A() const { return a_; }
    const UniPoly& B() const { return b_; }
    const UniPoly& d() const { return d_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    // y -> -y
    CurveFunction conj() const;
    // (A^2 - B^2 x c(x)) / d^2
    RationalMap norm() const;
    CurveFunction inverse() const;
    CurveFunction pow(long e) const;
    // cancel common factors of A, B, d and make d monic
    CurveFunction reduced() const;

    CurveFunction& operator+=(const CurveFunction& o);
    CurveFunction& operator-=(const CurveFunction& o);
    CurveFunction& operator*=(const CurveFunction& o);
    CurveFunction& operator/=(const CurveFunction& o) { return *this *= o.inverse(); }
    CurveFunction operator-() const;
    friend CurveFunction operator+(CurveFunction a, const CurveFunction& b) { return a += b; }
    friend CurveFunction operator-(CurveFunction a, const CurveFunction& b) { return a -= b; }
    friend CurveFunction operator*(CurveFunction a, const CurveFunction& b) { return a *= b; }
    friend CurveFunction operator/(CurveFunction a, const CurveFunction& b) { return a /= b; }
    friend CurveFunction operator*(CurveFunction a, const Scalar& s);
    friend CurveFunction operator*(const Scalar& s, CurveFunction a) { return a * s; }
    // cross-multiplied comparison
    friend bool operator==(const CurveFunction& f, const CurveFunction& g);
    friend bool operator!=(const CurveFunction& f, const CurveFunction& g) { return !(f == g); }

    std::string str() const;

private:
    void check_same(const CurveFunction& o) const;
    const Curve* curve_ = nullptr;
    UniPoly a_, b_, d_ = UniPoly::constant(1);
};

// num / den kept apart so that large quotients never need rationalizing.
struct CurveFraction {
    CurveFunction num, den;

    CurveFraction() = default;
    CurveFraction(const CurveFunction& f);  // NOLINT: f / 1
    CurveFraction(CurveFunction n, CurveFunction d);
    CurveFunction value() const { return num / den; }
    CurveFraction pow(long e) const;
    CurveFraction& operator*=(const CurveFraction& o);
    CurveFraction& operator/=(const CurveFraction& o);
    friend CurveFraction operator*(CurveFraction a, const CurveFraction& b) { return a *= b; }
    friend CurveFraction operator/(CurveFraction a, const CurveFraction& b) { return a /= b; }
    friend bool operator==(const CurveFraction& a, const CurveFraction& b) { return a.num * b.den == b.num * a.den; }
};

// r(f) for a rational map r in one variable, by homogeneous evaluation.
CurveFraction evaluate(const RationalMap& r, const CurveFraction& f);

// Local parameter: t = y at a point with y = 0, t = x - x0 elsewhere.
struct LocalExpansion {
    Series x, y;
};
LocalExpansion local_expansion(const Curve& c, const Point& p, const Rational& order);
// f in the local parameter at p.
Series expand_at(const CurveFunction& f, const Point& p, const Rational& order);

bool on_curve(const Curve& c, const Point& p);
long valuation(const CurveFunction& f, const Point& p);
long valuation(const CurveFraction& f, const Point& p);
// ord_O f = 2 deg d - max(2 deg A, 3 + 2 deg B)
long valuation_at_infinity(const CurveFunction& f);
long valuation_at_infinity(const CurveFraction& f);

// Galois orbit of points (x_i, s(x_i)) over the roots x_i of an irreducible
// minimal polynomial, y = s(x) mod m picking the branch.
struct PlaceCluster {
    std::string name;
    UniPoly minpoly;
    UniPoly branch;
};
// Branch read off from a function that vanishes on the cluster.
PlaceCluster make_cluster(const std::string& name, const UniPoly& minpoly, const CurveFunction& defining);
// Order of f at each point of the cluster, or nullopt with a reason when the
// residue-algebra test cannot decide.
std::optional<long> cluster_valuation(const CurveFunction& f, const PlaceCluster& cl, std::string* why = nullptr);
std::optional<long> cluster_valuation(const CurveFraction& f, const PlaceCluster& cl, std::string* why = nullptr);

struct Place {
    enum class Kind { Point, Infinity, Cluster };
    Kind kind = Kind::Infinity;
    Point point;
    std::string cluster;

    static Place at(const Rational& x, const Rational& y) { return {Kind::Point, {x, y}, {}}; }
    static Place infinity() { return {Kind::Infinity, {}, {}}; }
    static Place orbit(const std::string& name) { return {Kind::Cluster, {}, name}; }
    std::string label() const;
    friend bool operator==(const Place& a, const Place& b) {
        return a.kind == b.kind && a.point == b.point && a.cluster == b.cluster;
    }
};

// Q-linear combination of places; a cluster entry stands for all its points.
struct FracDivisor {
    std::vector<std::pair<Place, Rational>> terms;

    FracDivisor& add(const Place& p, const Rational& c);
    FracDivisor& operator+=(const FracDivisor& o);
    FracDivisor operator*(const Rational& c) const;
    Rational coefficient(const Place& p) const;
    // merge duplicates, drop zeros, sort by label
    FracDivisor normalized() const;
    friend bool operator==(const FracDivisor& a, const FracDivisor& b);
    std::string str() const;
};

// Clusters known on a curve: U, V on E7 and S, T on E4.
const std::vector<PlaceCluster>& clusters(const Curve& c);
const PlaceCluster& find_cluster(const Curve& c, const std::string& name);
Rational degree(const FracDivisor& d, const Curve& c);

VerificationReport verify_divisor(const std::string& id, const std::string& anchor, const CurveFraction& f,
                                  const FracDivisor& expected);

// Table entries: a named function with its printed divisor.
struct TableEntry {
    std::string name;
    CurveFunction f;
    FracDivisor divisor;
};
const std::vector<TableEntry>& divisor_table(const Curve& c);
const CurveFunction& table_function(const Curve& c, const std::string& name);

// Darboux coverings of degree 24 on the two curves.
CurveFraction phi7();
CurveFraction phi4();
FracDivisor phi7_divisor();
FracDivisor phi4_divisor();

// Pull an E4 function back along the 2-isogeny p = u/c(u), w = v(1-32u^2)/c(u)^2.
CurveFunction isogeny_pullback(const CurveFunction& f);
CurveFraction isogeny_pullback(const CurveFraction& f);
// (u, v) -> (1/(32u), -v/(32u^2)) on E7
CurveFunction involution_apply(const CurveFunction& f);
CurveFraction involution_apply(const CurveFraction& f);
// x = 4(u+v)^2 / ((4u-1)^2 (8u-1)) from E7 to the line of Phi3
CurveFunction fiber_projection();

// Chord-tangent law with O at infinity on y^2 = x c(x).
struct GroupPoint {
    bool infinity = true;
    Point p;
    friend bool operator==(const GroupPoint& a, const GroupPoint& b) {
        return a.infinity == b.infinity && (a.infinity || a.p == b.p);
    }
};
GroupPoint group_add(const Curve& c, const GroupPoint& a, const GroupPoint& b);
long point_order(const Curve& c, const GroupPoint& a, long limit = 64);

struct TorsionAudit {
    long order_of_1_4 = 0;            // order of (1, 4)
    bool two_torsion_only_origin = false;  // cubic has no rational root
    UniPoly four_torsion_quartic;     // in alpha
    bool no_rational_four_torsion = false;
    long torsion_order = 0;           // 6 means Z/6Z
    std::string summary;
};
TorsionAudit torsion_audit(const Curve& c);

}  // namespace darboux
