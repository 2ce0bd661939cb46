#include "darboux/poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace darboux {

UniPoly::UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
    for (long c : coeffs) c_.emplace_back(c);
    trim();
}

UniPoly UniPoly::constant(const Scalar& c) { return UniPoly(std::vector<Scalar>{c}); }
UniPoly UniPoly::x() { return UniPoly{0, 1}; }

UniPoly UniPoly::monomial(const Scalar& c, int degree) {
    std::vector<Scalar> v(degree + 1);
    v[degree] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const Scalar& r) { return UniPoly(std::vector<Scalar>{-r, Scalar(1)}); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool UniPoly::is_rational() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_rational(); });
}

Scalar UniPoly::operator()(const Scalar& at) const {
    Scalar r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * at + *it;
    return r;
}

UniPoly UniPoly::derivative() const {
    std::vector<Scalar> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Scalar(long(k)));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * lc().inverse();
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly r = constant(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * inner + constant(*it);
    return r;
}

UniPoly UniPoly::conj() const {
    std::vector<Scalar> v;
    for (const auto& c : c_) v.push_back(c.conj());
    return UniPoly(std::move(v));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(c));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly& UniPoly::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

std::string UniPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        if (c_[k].is_zero()) continue;
        std::string c = c_[k].str();
        if (!c_[k].is_rational()) c = "(" + c + ")";
        if (!first) os << (c.front() == '-' ? " - " : " + ");
        else if (c.front() == '-') os << '-';
        if (c.front() == '-') c.erase(c.begin());
        first = false;
        if (k == 0) os << c;
        else {
            if (c != "1") os << c << '*';
            os << var;
            if (k > 1) os << '^' << k;
        }
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw PolyError("polynomial division by zero");
    std::vector<Scalar> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {UniPoly(), a};
    std::vector<Scalar> q(a.degree() - db + 1);
    Scalar inv = b.lc().inverse();
    const auto& bc = b.coeffs();
    for (int k = a.degree(); k >= db; --k) {
        if (r[k].is_zero()) continue;
        Scalar f = r[k] * inv;
        q[k - db] = f;
        for (int i = 0; i <= db; ++i)
            if (!bc[i].is_zero()) r[k - db + i] -= f * bc[i];
    }
    r.resize(db);
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw PolyError("inexact polynomial division");
    return q;
}

UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

int multiplicity(UniPoly p, const UniPoly& f) {
    if (p.is_zero()) throw PolyError("multiplicity in the zero polynomial");
    if (f.degree() < 1) throw PolyError("multiplicity of a constant factor");
    int m = 0;
    for (;;) {
        auto [q, r] = divmod(p, f);
        if (!r.is_zero()) return m;
        p = std::move(q);
        ++m;
    }
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw PolyError("squarefree decomposition of zero");
    std::vector<std::pair<UniPoly, int>> out;
    if (p.degree() < 1) return out;
    UniPoly f = p.monic();
    UniPoly d = f.derivative();
    UniPoly a = gcd(f, d);
    UniPoly b = exact_div(f, a);
    UniPoly c = exact_div(d, a) - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        UniPoly g = gcd(b, c);
        if (g.degree() > 0) out.emplace_back(g, i);
        UniPoly nb = exact_div(b, g);
        c = exact_div(c, g) - nb.derivative();
        b = std::move(nb);
    }
    return out;
}

Scalar resultant(const UniPoly& p0, const UniPoly& q0) {
    if (p0.is_zero() || q0.is_zero()) return Scalar();
    UniPoly p = p0, q = q0;
    Scalar acc(1);
    for (;;) {
        int m = p.degree(), n = q.degree();
        if (n == 0) return acc * q.lc().pow(m);
        UniPoly r = divmod(p, q).second;
        if (r.is_zero()) return Scalar();
        int k = r.degree();
        if ((m * n) % 2) acc = -acc;
        acc *= q.lc().pow(m - k);
        p = std::move(q);
        q = std::move(r);
    }
}

UniPoly invmod(const UniPoly& a, const UniPoly& m) {
    // extended Euclid tracking only the cofactor of a
    UniPoly r0 = m, r1 = divmod(a, m).second, s0, s1 = UniPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UniPoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0) throw PolyError("not invertible modulo " + m.str());
    return divmod(s0 * r0.lc().inverse(), m).second;
}

Scalar discriminant(const UniPoly& p) {
    int n = p.degree();
    if (n < 1) throw PolyError("discriminant of a constant");
    Scalar r = resultant(p, p.derivative()) / p.lc();
    return (n * (n - 1) / 2) % 2 ? -r : r;
}

namespace {

std::vector<Integer> divisors(Integer n) {
    if (n < 0) n = -n;
    if (n > Integer("1000000000000")) throw PolyError("rational root search: coefficient too large to factor");
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& p) {
    if (!p.is_rational()) throw PolyError("rational roots need rational coefficients");
    if (p.is_zero()) throw PolyError("roots of the zero polynomial");
    std::vector<Rational> roots;
    UniPoly f = p;
    if (f.coeff(0).is_zero()) {
        roots.emplace_back(0);
        while (f.coeff(0).is_zero()) f = exact_div(f, UniPoly::x());
    }
    if (f.degree() < 1) return roots;
    Integer l = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
    Integer a0 = Rational(f.coeff(0).re() * l).get_num();
    Integer an = Rational(f.lc().re() * l).get_num();
    for (const auto& num : divisors(a0))
        for (const auto& den : divisors(an))
            for (int s : {1, -1}) {
                Rational r(num * s, den);
                r.canonicalize();
                if (f(Scalar(r)).is_zero() && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

Series evaluate(const UniPoly& p, const Series& at) {
    const auto& c = p.coeffs();
    if (c.empty()) return Series::zero(at.order());
    // exact constant; precision is then governed by `at` alone
    Series r = Series::constant(c.back(), std::max(Rational(at.order() - at.lead()), Rational(0)) + 1);
    if (p.degree() == 0) return r;
    for (int k = p.degree() - 1; k >= 0; --k) {
        r = r * at;
        if (!c[k].is_zero()) r = r + c[k];
    }
    return r;
}

Series to_series(const UniPoly& p, const Rational& order, const Scalar& scale) {
    std::vector<Scalar> c;
    Scalar s(1);
    for (const auto& a : p.coeffs()) {
        c.push_back(a * s);
        s *= scale;
    }
    return Series::from_coeffs(Rational(0), 1, std::move(c), order);
}

RationalMap::RationalMap(const UniPoly& p) : num_(p), den_(UniPoly::constant(1)) {}

RationalMap::RationalMap(const UniPoly& num, const UniPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw PolyError("rational function with zero denominator");
    normalize();
}

RationalMap RationalMap::identity() { return RationalMap(UniPoly::x()); }

void RationalMap::normalize() {
    if (num_.is_zero()) {
        den_ = UniPoly::constant(1);
        return;
    }
    UniPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    Scalar l = den_.lc().inverse();
    num_ *= l;
    den_ *= l;
}

int RationalMap::degree() const { return std::max(num_.degree(), den_.degree()); }

RationalMap RationalMap::compose(const RationalMap& inner) const {
    // P(n/d) = sum p_k n^k d^(D-k) / d^D with D the common degree.
    int D = degree();
    const UniPoly& n = inner.num_;
    const UniPoly& d = inner.den_;
    std::vector<UniPoly> npow{UniPoly::constant(1)}, dpow{UniPoly::constant(1)};
    for (int k = 1; k <= D; ++k) {
        npow.push_back(npow.back() * n);
        dpow.push_back(dpow.back() * d);
    }
    auto homog = [&](const UniPoly& p) {
        UniPoly r;
        for (int k = 0; k <= p.degree(); ++k)
            if (!p.coeff(k).is_zero()) r += p.coeff(k) * (npow[k] * dpow[D - k]);
        return r;
    };
    return RationalMap(homog(num_), homog(den_));
}

Scalar RationalMap::operator()(const Scalar& at) const {
    Scalar d = den_(at);
    if (d.is_zero()) throw PolyError("rational function evaluated at a pole");
    return num_(at) / d;
}

RationalMap RationalMap::derivative() const {
    return RationalMap(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalMap& RationalMap::operator+=(const RationalMap& o) {
    return *this = RationalMap(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalMap& RationalMap::operator-=(const RationalMap& o) {
    return *this = RationalMap(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalMap& RationalMap::operator*=(const RationalMap& o) { return *this = RationalMap(num_ * o.num_, den_ * o.den_); }

RationalMap& RationalMap::operator/=(const RationalMap& o) {
    if (o.num_.is_zero()) throw PolyError("division by the zero rational function");
    return *this = RationalMap(num_ * o.den_, den_ * o.num_);
}

std::string RationalMap::str(const std::string& var) const {
    if (den_.degree() == 0 && den_.lc().is_one()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

Series evaluate(const RationalMap& f, const Series& at) { return evaluate(f.num(), at) / evaluate(f.den(), at); }

MultiPoly MultiPoly::constant(const Scalar& c) { return term(c, {0, 0, 0, 0}); }

MultiPoly MultiPoly::var(int i) {
    Monomial m{0, 0, 0, 0};
    m.at(i) = 1;
    return term(Scalar(1), m);
}

MultiPoly MultiPoly::term(const Scalar& c, const Monomial& m) {
    MultiPoly p;
    p.add_term(m, c);
    return p;
}

void MultiPoly::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m[0] + m[1] + m[2] + m[3]);
    return d;
}

bool MultiPoly::is_homogeneous() const {
    int d = total_degree();
    return std::all_of(t_.begin(), t_.end(), [d](const auto& kv) {
        const auto& m = kv.first;
        return m[0] + m[1] + m[2] + m[3] == d;
    });
}

Scalar MultiPoly::coeff(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Scalar() : it->second;
}

MultiPoly MultiPoly::partial(int i) const {
    MultiPoly r;
    for (const auto& [m, c] : t_) {
        if (m.at(i) == 0) continue;
        Monomial n = m;
        --n[i];
        r.add_term(n, c * Scalar(long(m[i])));
    }
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = constant(1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Scalar& s) {
    if (s.is_zero()) t_.clear();
    for (auto& [m, c] : t_) c *= s;
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    return r *= Scalar(-1);
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) {
            MultiPoly::Monomial m;
            for (int i = 0; i < 4; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        std::string c = it->second.str();
        if (!it->second.is_rational()) c = "(" + c + ")";
        bool neg = c.front() == '-';
        if (neg) c.erase(c.begin());
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        std::string mono;
        for (int i = 0; i < 4; ++i) {
            if (it->first[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += names.at(i);
            if (it->first[i] > 1) mono += '^' + std::to_string(it->first[i]);
        }
        if (mono.empty()) os << c;
        else if (c == "1") os << mono;
        else os << c << '*' << mono;
    }
    return os.str();
}

MultiPoly reduce_mod(const MultiPoly& p, const MultiPoly& q, const std::vector<int>& var_order) {
    if (q.is_zero()) throw PolyError("reduction modulo the zero polynomial");
    std::array<int, 4> perm{};
    {
        std::vector<int> order = var_order;
        for (int i = 0; i < 4; ++i)
            if (std::find(order.begin(), order.end(), i) == order.end()) order.push_back(i);
        if (order.size() != 4) throw PolyError("variable order must be a permutation");
        for (int i = 0; i < 4; ++i) perm[i] = order[i];
    }
    auto key = [&](const MultiPoly::Monomial& m) {
        MultiPoly::Monomial k;
        for (int i = 0; i < 4; ++i) k[i] = m[perm[i]];
        return k;
    };
    auto unkey = [&](const MultiPoly::Monomial& k) {
        MultiPoly::Monomial m;
        for (int i = 0; i < 4; ++i) m[perm[i]] = k[i];
        return m;
    };
    using Work = std::map<MultiPoly::Monomial, Scalar, std::greater<>>;
    Work work, divisor;
    for (const auto& [m, c] : p.terms()) work.emplace(key(m), c);
    for (const auto& [m, c] : q.terms()) divisor.emplace(key(m), c);
    const auto lead_m = divisor.begin()->first;
    const Scalar lead_inv = divisor.begin()->second.inverse();
    MultiPoly rem;
    while (!work.empty()) {
        auto it = work.begin();
        auto m = it->first;
        Scalar c = it->second;
        bool divisible = true;
        for (int i = 0; i < 4; ++i) divisible = divisible && m[i] >= lead_m[i];
        if (!divisible) {
            rem += MultiPoly::term(c, unkey(m));
            work.erase(it);
            continue;
        }
        Scalar f = c * lead_inv;
        for (const auto& [dm, dc] : divisor) {
            MultiPoly::Monomial s;
            for (int i = 0; i < 4; ++i) s[i] = dm[i] + m[i] - lead_m[i];
            auto [pos, inserted] = work.emplace(s, -(f * dc));
            if (!inserted) {
                pos->second -= f * dc;
                if (pos->second.is_zero()) work.erase(pos);
            }
        }
    }
    return rem;
}

Series evaluate(const MultiPoly& p, const std::vector<Series>& values) {
    if (values.empty()) throw PolyError("no values supplied");
    std::vector<std::vector<Series>> powers(values.size());
    auto power = [&](std::size_t i, int e) -> const Series& {
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(pow(values[i], Rational(0)));
        while (int(pw.size()) <= e) pw.push_back(pw.back() * values[i]);
        return pw[e];
    };
    std::optional<Series> acc;
    for (const auto& [m, c] : p.terms()) {
        std::optional<Series> t;
        for (std::size_t i = 0; i < values.size() && i < 4; ++i) {
            if (m[i] == 0) continue;
            t = t ? *t * power(i, m[i]) : power(i, m[i]);
        }
        for (std::size_t i = values.size(); i < 4; ++i)
            if (m[i] != 0) throw PolyError("monomial uses a variable without a value");
        Series term = t ? *t * c : Series::constant(c, values[0].order());
        acc = acc ? *acc + term : term;
    }
    if (!acc) {
        Rational o = values[0].order();
        for (const auto& v : values) o = std::min(o, v.order());
        return Series::zero(o);
    }
    return *acc;
}

MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return MultiPoly::constant(1);
    if (n == 1) return m[0][0];
    MultiPoly r;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<MultiPoly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<MultiPoly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        MultiPoly t = m[0][j] * determinant(minor);
        if (j % 2) r -= t;
        else r += t;
    }
    return r;
}

}  // namespace darboux
