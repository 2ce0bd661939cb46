#include "darboux/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace darboux {

namespace {

long to_long(const Rational& r) {
    if (!is_integer(r) || !r.get_num().fits_slong_p()) throw SeriesError("series index out of range");
    return r.get_num().get_si();
}

// Number of grid positions lead + k/grid lying strictly below order.
long position_count(const Rational& lead, int grid, const Rational& order) {
    if (order <= lead) return 0;
    Rational span = (order - lead) * grid;
    return ceil_of(span).get_si();
}

Integer lcm_den(const std::vector<Rational>& v) {
    Integer l = 1;
    for (const auto& x : v)
        if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

// c[i*sa + j*sb] += a[i]*b[j] for i*sa + j*sb < count, exact over Q.
// Everything is scaled to integers first so the inner loop is mpz_addmul.
std::vector<Rational> convolve_q(const std::vector<Rational>& a, long sa, const std::vector<Rational>& b, long sb,
                                 long count) {
    std::vector<Rational> out(std::max(count, 0L));
    if (count <= 0) return out;
    Integer la = lcm_den(a), lb = lcm_den(b);
    std::vector<std::pair<long, Integer>> na, nb;
    for (std::size_t i = 0; i < a.size() && long(i) * sa < count; ++i)
        if (sgn(a[i]) != 0) na.emplace_back(long(i) * sa, Integer(a[i].get_num() * (la / a[i].get_den())));
    for (std::size_t j = 0; j < b.size() && long(j) * sb < count; ++j)
        if (sgn(b[j]) != 0) nb.emplace_back(long(j) * sb, Integer(b[j].get_num() * (lb / b[j].get_den())));
    if (na.empty() || nb.empty()) return out;
    std::vector<Integer> acc(count);
    for (const auto& [pi, ai] : na)
        for (const auto& [pj, bj] : nb) {
            long k = pi + pj;
            if (k >= count) break;
            mpz_addmul(acc[k].get_mpz_t(), ai.get_mpz_t(), bj.get_mpz_t());
        }
    Integer den = la * lb;
    for (long k = 0; k < count; ++k) {
        if (sgn(acc[k]) == 0) continue;
        out[k] = Rational(acc[k], den);
        out[k].canonicalize();
    }
    return out;
}

std::vector<Scalar> convolve(const std::vector<Scalar>& a, long sa, const std::vector<Scalar>& b, long sb, long count) {
    auto split = [](const std::vector<Scalar>& v, std::vector<Rational>& re, std::vector<Rational>& om) {
        bool rational = true;
        re.reserve(v.size());
        om.reserve(v.size());
        for (const auto& s : v) {
            re.push_back(s.re());
            om.push_back(s.om());
            rational = rational && s.is_rational();
        }
        return rational;
    };
    std::vector<Rational> ar, ao, br, bo;
    bool a_rat = split(a, ar, ao), b_rat = split(b, br, bo);
    std::vector<Scalar> out(std::max(count, 0L));
    auto rr = convolve_q(ar, sa, br, sb, count);
    if (a_rat && b_rat) {
        for (long k = 0; k < count; ++k) out[k] = Scalar(std::move(rr[k]));
        return out;
    }
    std::vector<Rational> zero(count);
    auto oo = (a_rat || b_rat) ? zero : convolve_q(ao, sa, bo, sb, count);
    auto ro = b_rat ? zero : convolve_q(ar, sa, bo, sb, count);
    auto orr = a_rat ? zero : convolve_q(ao, sa, br, sb, count);
    for (long k = 0; k < count; ++k) out[k] = Scalar(Rational(rr[k] - oo[k]), Rational(ro[k] + orr[k] - oo[k]));
    return out;
}

std::string exponent_str(const Rational& e) { return e.get_str(); }

}  // namespace

long lcm_grid(long a, long b) { return std::lcm(a, b); }

Series Series::zero(const Rational& order) {
    Series s;
    s.lead_ = order;
    s.order_ = order;
    return s;
}

Series Series::constant(const Scalar& c, const Rational& order) { return monomial(c, Rational(0), order); }

Series Series::monomial(const Scalar& c, const Rational& exponent, const Rational& order) {
    if (c.is_zero() || exponent >= order) return zero(order);
    Series s;
    s.lead_ = exponent;
    s.order_ = order;
    s.coeffs_.assign(position_count(exponent, 1, order), Scalar());
    s.coeffs_[0] = c;
    s.canonicalize();
    return s;
}

Series Series::from_coeffs(const Rational& lead, int grid, std::vector<Scalar> coeffs) {
    Rational order = lead + Rational(long(coeffs.size()), grid);
    return from_coeffs(lead, grid, std::move(coeffs), order);
}

Series Series::from_coeffs(const Rational& lead, int grid, std::vector<Scalar> coeffs, const Rational& order) {
    if (grid <= 0) throw SeriesError("grid must be positive");
    Series s;
    s.lead_ = lead;
    s.grid_ = grid;
    s.order_ = order;
    coeffs.resize(position_count(lead, grid, order));
    s.coeffs_ = std::move(coeffs);
    s.canonicalize();
    return s;
}

void Series::canonicalize() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first].is_zero()) ++first;
    if (first == coeffs_.size()) {
        coeffs_.clear();
        lead_ = order_;
        grid_ = 1;
        return;
    }
    if (first > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + long(first));
        lead_ += Rational(long(first), grid_);
    }
    long g = grid_;
    for (std::size_t k = 1; k < coeffs_.size() && g > 1; ++k)
        if (!coeffs_[k].is_zero()) g = std::gcd(g, long(k));
    if (g > 1) {
        int ng = int(grid_ / g);
        long n = position_count(lead_, ng, order_);
        std::vector<Scalar> c(n);
        for (long k = 0; k < n && std::size_t(k * g) < coeffs_.size(); ++k) c[k] = std::move(coeffs_[k * g]);
        coeffs_ = std::move(c);
        grid_ = ng;
    }
}

bool Series::is_rational() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& s) { return s.is_rational(); });
}

Rational Series::exponent(std::size_t k) const { return lead_ + Rational(long(k), grid_); }

const Scalar& Series::lead_coeff() const {
    if (is_zero()) throw SeriesError("lead coefficient of a series with no known nonzero term");
    return coeffs_[0];
}

Scalar Series::coeff(const Rational& e) const {
    if (e >= order_) throw SeriesError("coefficient of t^" + e.get_str() + " lies at or beyond the order " + order_.get_str());
    if (e < lead_) return Scalar();
    Rational pos = (e - lead_) * grid_;
    if (!is_integer(pos)) return Scalar();
    long k = to_long(pos);
    return std::size_t(k) < coeffs_.size() ? coeffs_[k] : Scalar();
}

Series Series::truncated(const Rational& order) const {
    if (order >= order_) return *this;
    Series s = *this;
    s.order_ = order;
    s.coeffs_.resize(position_count(lead_, grid_, order));
    s.canonicalize();
    return s;
}

Series Series::shifted(const Rational& e) const {
    Series s = *this;
    s.lead_ += e;
    s.order_ += e;
    return s;
}

Series Series::derivative() const {
    Series s = *this;
    for (std::size_t k = 0; k < s.coeffs_.size(); ++k) s.coeffs_[k] *= Scalar(exponent(k));
    s.lead_ -= 1;
    s.order_ -= 1;
    s.canonicalize();
    return s;
}

Series Series::theta() const {
    Series s = *this;
    for (std::size_t k = 0; k < s.coeffs_.size(); ++k) s.coeffs_[k] *= Scalar(exponent(k));
    s.canonicalize();
    return s;
}

Series Series::inverse() const {
    if (is_zero()) throw SeriesError("inverse of a series with no known nonzero term");
    const long n = long(coeffs_.size());
    std::vector<Scalar> r(n);
    Scalar inv0 = coeffs_[0].inverse();
    r[0] = inv0;
    for (long k = 1; k < n; ++k) {
        Scalar acc;
        for (long i = 1; i <= k; ++i)
            if (!coeffs_[i].is_zero() && !r[k - i].is_zero()) acc += coeffs_[i] * r[k - i];
        r[k] = -(acc * inv0);
    }
    return from_coeffs(-lead_, grid_, std::move(r), order_ - 2 * lead_);
}

Series& Series::operator+=(const Series& o) {
    Rational order = std::min(order_, o.order_);
    if (o.is_zero()) return *this = truncated(order);
    if (is_zero()) return *this = o.truncated(order);
    Rational low = std::min(lead_, o.lead_);
    Rational gap = lead_ - o.lead_;
    long grid = lcm_grid(lcm_grid(grid_, o.grid_), gap.get_den().get_si());
    long n = position_count(low, int(grid), order);
    std::vector<Scalar> c(std::max(n, 0L));
    auto place = [&](const Series& s) {
        long off = to_long((s.lead_ - low) * grid);
        long stride = grid / s.grid_;
        for (std::size_t k = 0; k < s.coeffs_.size(); ++k) {
            long idx = off + long(k) * stride;
            if (idx >= n) break;
            c[idx] += s.coeffs_[k];
        }
    };
    place(*this);
    place(o);
    return *this = from_coeffs(low, int(grid), std::move(c), order);
}

Series& Series::operator-=(const Series& o) { return *this += -o; }

Series Series::operator-() const {
    Series s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

Series& Series::operator*=(const Series& o) { return *this = multiply_truncated(*this, o, order_ + o.order_ + 1); }

Series& Series::operator*=(const Scalar& c) {
    if (c.is_zero()) return *this = zero(order_);
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Series operator+(const Series& a, const Series& b) {
    Series r = a;
    return r += b;
}

Series operator-(const Series& a, const Series& b) {
    Series r = a;
    return r += -b;
}

Series operator*(const Series& a, const Series& b) { return multiply_truncated(a, b, a.order_ + b.order_ + 1); }

Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

Series operator+(const Series& a, const Scalar& c) {
    if (a.order() <= 0) return a;
    return a + Series::constant(c, a.order());
}

Series operator-(const Series& a, const Scalar& c) { return a + (-c); }

Series multiply_truncated(const Series& a, const Series& b, const Rational& order) {
    if (a.is_zero() || b.is_zero()) {
        Rational o = a.is_zero() ? (b.is_zero() ? a.order_ + b.order_ : a.order_ + b.lead_) : a.lead_ + b.order_;
        return Series::zero(std::min(o, order));
    }
    Rational lead = a.lead_ + b.lead_;
    Rational ra = a.order_ - a.lead_, rb = b.order_ - b.lead_;
    Rational o = lead + std::min(ra, rb);
    if (order < o) o = order;
    long grid = lcm_grid(a.grid_, b.grid_);
    long n = position_count(lead, int(grid), o);
    if (n <= 0) return Series::zero(o);
    auto c = convolve(a.coeffs_, grid / a.grid_, b.coeffs_, grid / b.grid_, n);
    return Series::from_coeffs(lead, int(grid), std::move(c), o);
}

Series pow(const Series& a, const Rational& r) {
    if (a.is_zero()) throw SeriesError("power of a series with no known nonzero term");
    if (r == 1) return a;
    const Scalar& a0 = a.coeffs_[0];
    Scalar g0;
    if (is_integer(r)) {
        if (!r.get_num().fits_slong_p()) throw SeriesError("exponent too large");
        g0 = a0.pow(r.get_num().get_si());
    } else {
        if (!a0.is_one())
            throw SeriesError("fractional power " + r.get_str() + " of a series whose unit part has constant term " +
                              a0.str() + " instead of 1");
        g0 = Scalar(1);
    }
    const long n = long(a.coeffs_.size());
    std::vector<Scalar> g(n);
    g[0] = g0;
    Scalar inv0 = a0.inverse();
    std::vector<long> support;
    for (long k = 1; k < n; ++k)
        if (!a.coeffs_[k].is_zero()) support.push_back(k);
    Rational r1 = r + 1;
    for (long m = 1; m < n; ++m) {
        Scalar acc;
        for (long k : support) {
            if (k > m) break;
            if (g[m - k].is_zero()) continue;
            Rational w = r1 * k - m;
            if (sgn(w) == 0) continue;
            acc += Scalar(w) * a.coeffs_[k] * g[m - k];
        }
        g[m] = acc * inv0 * Scalar(Rational(1, m));
    }
    Rational lead = a.lead_ * r;
    return Series::from_coeffs(lead, a.grid_, std::move(g), lead + (a.order_ - a.lead_));
}

Series compose(const Series& outer, const Series& inner) {
    if (outer.grid_ != 1 || !is_integer(outer.lead_) || outer.lead_ < 0)
        throw SeriesError("outer series of a composition must be a power series");
    if (inner.is_zero() || inner.lead_ <= 0)
        throw SeriesError("inner series of a composition must have positive valuation");
    const Rational v = inner.lead_;
    const long top = ceil_of(outer.order_).get_si();  // first unknown outer index
    Rational o = top * v;
    if (outer.is_zero()) return Series::zero(o);
    const long l0 = outer.lead_.get_num().get_si();
    Rational cap = inner.order_ + std::max(l0 - 1, 0L) * v;
    if (cap < o) o = cap;
    long kmax = top - 1;
    while (kmax >= l0 && Rational(kmax * v) >= o) --kmax;
    if (kmax < l0) return Series::zero(o);
    auto a = [&](long k) { return outer.coeff(Rational(k)); };
    Series acc = Series::constant(a(kmax), o - kmax * v);
    for (long k = kmax - 1; k >= l0; --k) {
        Rational target = o - k * v;
        acc = multiply_truncated(acc, inner, target);
        Scalar c = a(k);
        if (!c.is_zero()) acc += Series::constant(c, target);
    }
    if (l0 > 0) acc = multiply_truncated(acc, pow(inner, Rational(l0)), o);
    return acc;
}

bool operator==(const Series& a, const Series& b) {
    return a.order_ == b.order_ && a.lead_ == b.lead_ && a.grid_ == b.grid_ && a.coeffs_ == b.coeffs_;
}

std::optional<Rational> first_mismatch(const Series& a, const Series& b, const Rational& bound) {
    if (a.order() < bound || b.order() < bound)
        throw SeriesError("comparison bound " + bound.get_str() + " exceeds the known order");
    Series d = (a - b).truncated(bound);
    if (d.is_zero()) return std::nullopt;
    return d.lead();
}

std::string Series::dump(const std::string& var) const {
    std::ostringstream os;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) os << ", ";
        os << var << '^' << exponent_str(exponent(k)) << ": " << coeffs_[k].str();
    }
    return os.str();
}

std::string Series::str(const std::string& var, std::size_t max_terms) const {
    std::ostringstream os;
    std::size_t shown = 0;
    for (std::size_t k = 0; k < coeffs_.size() && shown < max_terms; ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (shown++) os << " + ";
        os << '(' << coeffs_[k].str() << ")*" << var << '^' << exponent_str(exponent(k));
    }
    if (shown) os << " + ";
    os << "O(" << var << '^' << exponent_str(order_) << ')';
    return os.str();
}

}  // namespace darboux
