#pragma once

#include "darboux/series.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace darboux {

class PolyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Dense univariate polynomial, ascending coefficients, no trailing zeros.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Scalar> coeffs);
    UniPoly(std::initializer_list<long> coeffs);
    static UniPoly constant(const Scalar& c);
    static UniPoly x();
    static UniPoly monomial(const Scalar& c, int degree);
    // Monic linear factor x - r.
    static UniPoly linear_root(const Scalar& r);

    int degree() const { return int(c_.size()) - 1; }  // -1 for the zero polynomial
    bool is_zero() const { return c_.empty(); }
    bool is_rational() const;
    Scalar coeff(int k) const { return k >= 0 && k < int(c_.size()) ? c_[k] : Scalar(); }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar lc() const { return c_.empty() ? Scalar() : c_.back(); }

    Scalar operator()(const Scalar& at) const;
    UniPoly derivative() const;
    UniPoly monic() const;
    UniPoly pow(unsigned e) const;
    // this(inner)
    UniPoly compose(const UniPoly& inner) const;
    // Galois conjugate of every coefficient.
    UniPoly conj() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Scalar& s);
    UniPoly operator-() const;
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Scalar& s) { return a *= s; }
    friend UniPoly operator*(const Scalar& s, UniPoly a) { return a *= s; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Scalar> c_;
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
// Quotient, throwing if b does not divide a exactly.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
UniPoly gcd(UniPoly a, UniPoly b);  // monic, gcd(0, 0) = 0
// How many times f divides p (p nonzero, f nonconstant).
int multiplicity(UniPoly p, const UniPoly& f);
// Yun: pairs (g_i, i) with p = lc * prod g_i^i, g_i squarefree, monic,
// pairwise coprime; only nonconstant g_i are listed.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);
Scalar resultant(const UniPoly& p, const UniPoly& q);
Scalar discriminant(const UniPoly& p);
// b with a*b = 1 mod m; throws if a and m share a factor.
UniPoly invmod(const UniPoly& a, const UniPoly& m);
// Rational roots of a polynomial with rational coefficients.
std::vector<Rational> rational_roots(const UniPoly& p);

// Horner evaluation at a series, truncated to `order` (default: the natural order).
Series evaluate(const UniPoly& p, const Series& at);
// p(c * t) as a series in t known to the given order.
Series to_series(const UniPoly& p, const Rational& order, const Scalar& scale = Scalar(1));

// num/den with gcd(num, den) = 1 and den monic.
class RationalMap {
public:
    RationalMap() : num_(), den_(UniPoly::constant(1)) {}
    RationalMap(const UniPoly& p);  // NOLINT: a polynomial is a rational function
    RationalMap(const UniPoly& num, const UniPoly& den);
    static RationalMap identity();

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    // max(deg num, deg den)
    int degree() const;
    bool is_rational() const { return num_.is_rational() && den_.is_rational(); }

    // this(inner)
    RationalMap compose(const RationalMap& inner) const;
    Scalar operator()(const Scalar& at) const;
    RationalMap derivative() const;

    RationalMap& operator+=(const RationalMap& o);
    RationalMap& operator-=(const RationalMap& o);
    RationalMap& operator*=(const RationalMap& o);
    RationalMap& operator/=(const RationalMap& o);
    friend RationalMap operator+(RationalMap a, const RationalMap& b) { return a += b; }
    friend RationalMap operator-(RationalMap a, const RationalMap& b) { return a -= b; }
    friend RationalMap operator*(RationalMap a, const RationalMap& b) { return a *= b; }
    friend RationalMap operator/(RationalMap a, const RationalMap& b) { return a /= b; }
    friend bool operator==(const RationalMap& a, const RationalMap& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RationalMap& a, const RationalMap& b) { return !(a == b); }

    std::string str(const std::string& var = "x") const;

private:
    void normalize();
    UniPoly num_, den_;
};

Series evaluate(const RationalMap& f, const Series& at);

// Sparse polynomial in up to four variables.
class MultiPoly {
public:
    using Monomial = std::array<int, 4>;

    MultiPoly() = default;
    static MultiPoly constant(const Scalar& c);
    static MultiPoly var(int i);
    static MultiPoly term(const Scalar& c, const Monomial& m);

    const std::map<Monomial, Scalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int total_degree() const;  // -1 for zero
    bool is_homogeneous() const;
    Scalar coeff(const Monomial& m) const;

    MultiPoly partial(int i) const;
    MultiPoly pow(unsigned e) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Scalar& s);
    MultiPoly operator-() const;
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Scalar& s) { return a *= s; }
    friend MultiPoly operator*(const Scalar& s, MultiPoly a) { return a *= s; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.t_ == b.t_; }

    std::string str(const std::vector<std::string>& names = {"X", "Y", "Z", "W"}) const;

private:
    void add_term(const Monomial& m, const Scalar& c);
    std::map<Monomial, Scalar> t_;
};

// Remainder of p modulo the principal ideal (q) under lexicographic order
// with variables ranked by var_order (most significant first). A single
// generator is a Groebner basis of its ideal, so p lies in (q) exactly when
// the remainder is zero.
MultiPoly reduce_mod(const MultiPoly& p, const MultiPoly& q, const std::vector<int>& var_order = {0, 1, 2, 3});

// Substitute series for the variables.
Series evaluate(const MultiPoly& p, const std::vector<Series>& values);

// Determinant by cofactor expansion (small matrices only).
MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m);

}  // namespace darboux
