#pragma once

#include "darboux/scalar.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace darboux {

// Raised when a precondition of a series operation fails (non-unit constant
// under a fractional power, composing into a series without positive
// valuation, reading a coefficient past the known order, ...).
class SeriesError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Truncated Puiseux series  sum_k c_k t^(lead + k/grid) + O(t^order).
//
// The order is absolute and exclusive: every coefficient with exponent below
// it is exact, nothing at or above it is known. Operations never report a
// coefficient they did not compute exactly; precision loss shows up as a
// smaller order. A series with no known nonzero coefficient is "zero to
// order o" and has lead == order.
class Series {
public:
    Series() : lead_(0), order_(0) {}

    static Series zero(const Rational& order);
    static Series constant(const Scalar& c, const Rational& order);
    static Series monomial(const Scalar& c, const Rational& exponent, const Rational& order);
    // coefficients at lead, lead + 1/grid, ...; order defaults to just past the last one
    static Series from_coeffs(const Rational& lead, int grid, std::vector<Scalar> coeffs);
    static Series from_coeffs(const Rational& lead, int grid, std::vector<Scalar> coeffs, const Rational& order);

    const Rational& lead() const { return lead_; }
    const Rational& order() const { return order_; }
    int grid() const { return grid_; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_rational() const;
    // Exponent of coeffs()[k].
    Rational exponent(std::size_t k) const;

    // Lead coefficient; throws on a zero series.
    const Scalar& lead_coeff() const;
    Scalar coeff(const Rational& exponent) const;

    Series truncated(const Rational& order) const;
    // multiply by t^e
    Series shifted(const Rational& e) const;
    Series derivative() const;
    // t d/dt
    Series theta() const;
    Series inverse() const;
    // Apply f to each coefficient (e.g. Galois conjugation).
    template <class F>
    Series map_coeffs(F f) const {
        Series r = *this;
        for (auto& c : r.coeffs_) c = f(c);
        r.canonicalize();
        return r;
    }

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Series& o);
    Series& operator*=(const Scalar& c);
    Series operator-() const;

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator/(const Series& a, const Series& b);
    friend Series operator*(Series a, const Scalar& c) { return a *= c; }
    friend Series operator*(const Scalar& c, Series a) { return a *= c; }
    friend Series operator+(const Series& a, const Scalar& c);
    friend Series operator-(const Series& a, const Scalar& c);

    // Exact structural equality: same order and same coefficients.
    friend bool operator==(const Series& a, const Series& b);
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    // "t^-1: 1, t^0: 744, ..." listing every grid position below the order.
    std::string dump(const std::string& var = "t") const;
    // Compact "1 - 3*t^2 + O(t^5)" style, for diagnostics.
    std::string str(const std::string& var = "t", std::size_t max_terms = 8) const;

    friend Series multiply_truncated(const Series& a, const Series& b, const Rational& order);
    friend Series pow(const Series& a, const Rational& r);
    friend Series compose(const Series& outer, const Series& inner);

private:
    void canonicalize();
    Rational lead_;
    int grid_ = 1;
    std::vector<Scalar> coeffs_;
    Rational order_;
};

Series multiply_truncated(const Series& a, const Series& b, const Rational& order);
// a^r. Integer r needs only a nonzero series; fractional r needs the unit
// part (after pulling out t^lead) to have constant term exactly 1.
Series pow(const Series& a, const Rational& r);
// outer(inner). outer: integral exponents, lead >= 0. inner: lead > 0.
Series compose(const Series& outer, const Series& inner);

// Exponent of the first coefficient below `bound` where a and b differ.
// Throws if either order is below the bound.
std::optional<Rational> first_mismatch(const Series& a, const Series& b, const Rational& bound);

long lcm_grid(long a, long b);

}  // namespace darboux
