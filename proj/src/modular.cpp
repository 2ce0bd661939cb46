#include "darboux/modular.hpp"

#include "darboux/belyi.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace darboux {

namespace {

using IVec = std::vector<Integer>;

Rational q(long a, long b = 1) { return make_rational(a, b); }

// number of grid positions lead + k/grid below order
std::size_t count_below(const Rational& lead, int grid, const Rational& order) {
    Rational span = (order - lead) * grid;
    if (sgn(span) <= 0) return 0;
    return ceil_of(span).get_ui();
}

// a *= (1 + sign r^k)^e, truncated to a.size()
void apply_factor(IVec& a, std::size_t k, long e, int sign) {
    if (k == 0) throw ModularError("product factor with exponent 0");
    for (long rep = 0; rep < std::labs(e); ++rep) {
        if (e > 0) {
            for (std::size_t i = a.size(); i-- > k;) a[i] += sign * a[i - k];
        } else {
            for (std::size_t i = k; i < a.size(); ++i) a[i] -= sign * a[i - k];
        }
    }
}

Series from_ints(const Rational& lead, int grid, const IVec& a, const Rational& order) {
    std::vector<Scalar> c;
    c.reserve(a.size());
    for (const auto& z : a) c.emplace_back(Rational(z));
    return Series::from_coeffs(lead, grid, std::move(c), order);
}

void apply_residue(IVec& a, const ResidueProduct& r) {
    if (r.modulus <= 0) throw ModularError("residue product needs a positive modulus");
    long res = ((r.residue % r.modulus) + r.modulus) % r.modulus;
    for (std::size_t k = res == 0 ? r.modulus : res; k < a.size(); k += r.modulus) apply_factor(a, k, r.exponent, r.sign);
}

Integer sigma(long n, int power) {
    Integer s = 0;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) {
            Integer t;
            mpz_ui_pow_ui(t.get_mpz_t(), d, power);
            s += t;
        }
    return s;
}

Series eisenstein(long weight, long terms) {
    IVec a(terms);
    a[0] = 1;
    long c = weight == 4 ? 240 : -504;
    for (long n = 1; n < terms; ++n) a[n] = c * sigma(n, weight - 1);
    return from_ints(0, 1, a, Rational(terms));
}

// 1/(q;q)_infinity as integers, length n
IVec partitions(std::size_t n) {
    IVec a(n, 0);
    if (n) a[0] = 1;
    for (std::size_t k = 1; k < n; ++k) apply_factor(a, k, -1, -1);
    return a;
}

// sum_{n>=0} q^(n^2 + shift n) / ((1-q)...(1-q^n))
IVec rogers_ramanujan_sum(std::size_t n, long shift) {
    IVec total(n, 0), p(n, 0);
    if (!n) return total;
    p[0] = 1;
    for (long k = 0;; ++k) {
        if (k > 0) apply_factor(p, k, -1, -1);
        std::size_t e = std::size_t(k * k + shift * k);
        if (e >= n) break;
        for (std::size_t i = 0; i + e < n; ++i) total[i + e] += p[i];
    }
    return total;
}

// Selberg-type sum:  (q;q)^-1 * sum_{n>=0} (-1)^n q^((7n^2 + b n)/2) * prod (1 - q^(c_i n + d_i))
IVec selberg_sum(std::size_t len, long b, const std::vector<std::pair<long, long>>& lin) {
    IVec s(len, 0);
    for (long n = 0;; ++n) {
        long e = (7 * n * n + b * n) / 2;
        if (e >= long(len)) break;
        IVec t(len, 0);
        t[e] = n % 2 ? -1 : 1;
        for (auto [c, d] : lin) apply_factor(t, std::size_t(c * n + d), 1, -1);
        for (std::size_t i = 0; i < len; ++i) s[i] += t[i];
    }
    IVec p = partitions(len), r(len, 0);
    for (std::size_t i = 0; i < len; ++i)
        if (sgn(s[i]))
            for (std::size_t j = 0; i + j < len; ++j) r[i + j] += s[i] * p[j];
    return r;
}

struct Entry {
    Rational lead;
    std::function<Series(const Rational&)> build;
};

Entry eq_entry(EtaQuotientSpec s) {
    Rational lead = s.lead();
    return {lead, [s](const Rational& order) { return eta_quotient(s, order); }};
}

EtaQuotientSpec eta(std::vector<std::pair<Rational, long>> e) {
    EtaQuotientSpec s;
    s.eta = std::move(e);
    return s;
}

EtaQuotientSpec prods(Rational lead, std::vector<ResidueProduct> p, int grid = 1) {
    EtaQuotientSpec s;
    s.grid = grid;
    s.extra_lead = lead;
    s.products = std::move(p);
    return s;
}

// (1 - q^k)^e over k = r (mod m) for each listed residue
std::vector<ResidueProduct> classes(long m, std::vector<long> residues, long e) {
    std::vector<ResidueProduct> v;
    for (long r : residues) v.push_back({m, r, e, -1});
    return v;
}

std::vector<ResidueProduct> concat(std::vector<std::vector<ResidueProduct>> parts) {
    std::vector<ResidueProduct> v;
    for (auto& p : parts) v.insert(v.end(), p.begin(), p.end());
    return v;
}

Entry int_entry(Rational lead, std::function<IVec(std::size_t)> f) {
    return {lead, [lead, f](const Rational& order) {
                return from_ints(lead, 1, f(count_below(lead, 1, order)), order);
            }};
}

Series theta_pair(long a, long b1, long c1, long b2, long c2, const Rational& order) {
    return theta_sum(a, b1, c1, order) + theta_sum(a, b2, c2, order);
}

const std::map<std::string, Entry>& entries() {
    static const std::map<std::string, Entry> m = [] {
        std::map<std::string, Entry> e;
        e["eta"] = eq_entry(eta({{q(1), 1}}));
        e["eta_theta"] = {q(1, 24), [](const Rational& o) { return theta_sum(3, 1, 0, o - q(1, 24)).shifted(q(1, 24)); }};
        e["E4"] = {q(0), [](const Rational& o) { return eisenstein(4, ceil_of(o).get_si()).truncated(o); }};
        e["E6"] = {q(0), [](const Rational& o) { return eisenstein(6, ceil_of(o).get_si()).truncated(o); }};
        e["j"] = {q(-1), [](const Rational& o) {
                      long n = ceil_of(o).get_si() + 3;
                      Series a = pow(eisenstein(4, n), Rational(3));
                      Series d = a - pow(eisenstein(6, n), Rational(2));
                      return (a * Scalar(1728) / d).truncated(o);
                  }};
        e["h2"] = eq_entry(eta({{q(1), 24}, {q(2), -24}}));
        e["h2_prod"] = eq_entry(prods(q(-1), {{1, 0, -24, 1}}));
        e["h3"] = eq_entry(eta({{q(1), 12}, {q(3), -12}}));
        e["h3_prod"] = eq_entry(prods(q(-1), classes(3, {1, 2}, 12)));
        e["h4"] = eq_entry(eta({{q(1), 8}, {q(4), -8}}));
        e["h4_prod"] = eq_entry(prods(q(-1), {{2, 1, -8, 1}, {2, 0, -16, 1}}));
        e["h5"] = eq_entry(eta({{q(1), 6}, {q(5), -6}}));
        e["h7"] = eq_entry(eta({{q(1), 4}, {q(7), -4}}));
        e["h4p16_eta"] = eq_entry(eta({{q(2), 24}, {q(4), -16}, {q(1), -8}}));
        e["h4p16_prod"] = eq_entry(prods(q(-1), {{2, 1, 8, 1}, {2, 0, -8, 1}}));
        // lambda / 16 on the half-integer grid
        e["lam16"] = eq_entry(prods(q(1, 2), {{2, 0, 8, 1}, {2, 1, -8, 1}}, 2));
        {
            EtaQuotientSpec s = eta({{q(1, 2), 8}, {q(2), 16}, {q(1), -24}});
            s.grid = 2;
            e["lam16_eta"] = eq_entry(s);
        }
        e["x5"] = eq_entry(prods(q(1), concat({classes(5, {1, 4}, 5), classes(5, {2, 3}, -5)})));
        e["rr1"] = eq_entry(prods(q(-1, 60), classes(5, {1, 4}, -1)));
        e["rr2"] = eq_entry(prods(q(11, 60), classes(5, {2, 3}, -1)));
        e["rr1_sum"] = {q(-1, 60), [](const Rational& o) {
                            Rational l = q(-1, 60);
                            return from_ints(l, 1, rogers_ramanujan_sum(count_below(l, 1, o), 0), o);
                        }};
        e["rr2_sum"] = {q(11, 60), [](const Rational& o) {
                            Rational l = q(11, 60);
                            return from_ints(l, 1, rogers_ramanujan_sum(count_below(l, 1, o), 1), o);
                        }};
        // Klein forms, with mX = -X
        auto klein = [](Rational lead, long r1, long r2) {
            return prods(lead, concat({{{1, 0, 3, -1}, {7, 0, 1, -1}}, classes(7, {r1, r2}, 1)}));
        };
        e["mX"] = eq_entry(klein(q(4, 7), 1, 6));
        e["Y"] = eq_entry(klein(q(2, 7), 2, 5));
        e["Z"] = eq_entry(klein(q(1, 7), 3, 4));
        e["X"] = {q(4, 7), [](const Rational& o) { return qseries("mX", o) * Scalar(-1); }};
        e["x7"] = {q(1), [](const Rational& o) { return qseries("mx7", o) * Scalar(-1); }};
        e["mx7"] = eq_entry(
            prods(q(1), concat({classes(7, {1, 6}, 2), classes(7, {2, 5}, 1), classes(7, {3, 4}, -3)})));
        e["K1"] = eq_entry(prods(q(-1, 42), classes(7, {1, 2, 5, 6}, -1)));
        e["K2"] = eq_entry(prods(q(5, 42), classes(7, {1, 3, 4, 6}, -1)));
        e["K3"] = eq_entry(prods(q(17, 42), classes(7, {2, 3, 4, 5}, -1)));
        e["K1_selberg"] = int_entry(q(-1, 42), [](std::size_t n) { return selberg_sum(n, 1, {{6, 3}}); });
        e["K3_selberg"] = int_entry(q(17, 42), [](std::size_t n) { return selberg_sum(n, 7, {{1, 1}, {6, 6}}); });
        e["theta_num"] = {q(0), [](const Rational& o) { return theta_sum(21, 7, 0, o); }};
        e["theta_d1"] = {q(0), [](const Rational& o) { return theta_pair(21, 1, 0, 13, 2, o); }};
        e["theta_d2"] = {q(0), [](const Rational& o) { return theta_pair(21, -5, 0, 19, 4, o); }};
        e["theta_d3"] = {q(0), [](const Rational& o) { return theta_pair(21, -11, 0, 25, 6, o); }};
        e["eta7_prod"] = eq_entry(prods(q(0), classes(7, {0}, 1)));
        // quintuple product at s = q^7, y = q^-k
        for (long k = 1; k <= 3; ++k) {
            std::string n = std::to_string(k);
            e["quint_prod_" + n] = eq_entry(prods(
                q(0), concat({classes(7, {0, -2 * k, 2 * k}, 1), classes(7, {-k, k}, -1)})));
            e["quint_sum_" + n] = {q(0), [k](const Rational& o) { return theta_pair(21, -(7 + 6 * k), 2 * k, 6 * k - 7, 0, o); }};
        }
        e["octa1_eta"] = eq_entry(eta({{q(2), 5}, {q(4), -2}, {q(1), -3}}));
        e["octa1_prod"] = eq_entry(prods(q(-1, 24), {{2, 1, 3, 1}, {2, 0, 1, 1}}));
        e["octa2_eta"] = eq_entry(eta({{q(4), 2}, {q(2), -1}, {q(1), -1}}));
        e["octa2_prod"] = eq_entry(prods(q(5, 24), {{2, 1, 1, 1}, {2, 0, 3, 1}}));
        return e;
    }();
    return m;
}

std::optional<Rational> monomial_exponent(const std::string& name) {
    if (name.size() < 5 || name.compare(0, 3, "q^(") != 0 || name.back() != ')') return std::nullopt;
    return parse_rational(name.substr(3, name.size() - 4));
}

std::mutex cache_mutex;
std::map<std::string, Series> cache;

}  // namespace

Rational EtaQuotientSpec::lead() const {
    Rational l = extra_lead;
    for (const auto& [m, e] : eta) l += m * e / 24;
    return l;
}

Series eta_quotient(const EtaQuotientSpec& spec, const Rational& order) {
    if (spec.grid <= 0) throw ModularError("eta quotient needs a positive grid");
    Rational lead = spec.lead();
    IVec a(count_below(lead, spec.grid, order), 0);
    if (a.empty()) return Series::zero(order);
    a[0] = 1;
    for (const auto& [m, e] : spec.eta) {
        Rational step = m * spec.grid;
        if (sgn(m) <= 0 || !is_integer(step)) throw ModularError("eta multiplier " + m.get_str() + " off the grid");
        apply_residue(a, {step.get_num().get_si(), 0, e, -1});
    }
    for (const auto& r : spec.products) apply_residue(a, r);
    return from_ints(lead, spec.grid, a, order);
}

Series theta_sum(long a, long b, long c, const Rational& order) {
    if (a <= 0) throw ModularError("theta sum needs a positive quadratic coefficient");
    long n_max = ceil_of(order).get_si();
    IVec v(std::max<long>(n_max, 0), 0);
    // exponents grow like a n^2 / 2; scan a symmetric window wide enough
    long w = 2;
    while (a * w * w / 2 - std::labs(b) * w / 2 - std::labs(c) < n_max) ++w;
    for (long n = -w; n <= w; ++n) {
        long num = a * n * n + b * n + c;
        if (num % 2) throw ModularError("theta sum with a half-integer exponent");
        long e = num / 2;
        if (e < 0) throw ModularError("theta sum with a negative exponent");
        if (e < n_max) v[e] += n % 2 ? -1 : 1;
    }
    return from_ints(0, 1, v, order).truncated(order);
}

Rational qseries_lead(const std::string& name) {
    if (auto e = monomial_exponent(name)) return *e;
    auto it = entries().find(name);
    if (it == entries().end()) throw ModularError("unknown q-series " + name);
    return it->second.lead;
}

Series qseries(const std::string& name, const Rational& order) {
    if (auto e = monomial_exponent(name)) {
        if (order <= *e) return Series::zero(order);
        return Series::from_coeffs(*e, 1, {Scalar(1)}, order);
    }
    auto it = entries().find(name);
    if (it == entries().end()) throw ModularError("unknown q-series " + name);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto c = cache.find(name);
        if (c != cache.end() && c->second.order() >= order) return c->second.truncated(order);
    }
    Series s = it->second.build(order);
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto& slot = cache[name];
    if (slot.order() < s.order()) slot = s;
    return s;
}

const std::vector<std::string>& qseries_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, e] : entries()) v.push_back(k);
        return v;
    }();
    return names;
}

Resolver qseries_resolver() {
    return [](const std::string& name, const Rational& precision) {
        return qseries(name, qseries_lead(name) + precision);
    };
}

// ------------------------------------------------------------------ Klein invariants

namespace {

MultiPoly mono(long c, int a, int b, int d) { return MultiPoly::term(Scalar(c), {a, b, d, 0}); }

MultiPoly orbit(long c, int a, int b, int d) {
    // cyclic orbit under X -> Y -> Z -> X
    return mono(c, a, b, d) + mono(c, d, a, b) + mono(c, b, d, a);
}

}  // namespace

MultiPoly klein_r4() { return orbit(1, 3, 1, 0); }

MultiPoly klein_r6() { return orbit(1, 1, 5, 0) + mono(-5, 2, 2, 2); }

MultiPoly klein_r14() {
    return orbit(1, 14, 0, 0) + orbit(375, 8, 4, 2) + orbit(18, 7, 7, 0) + orbit(-126, 6, 3, 5) + orbit(-34, 11, 2, 1) +
           orbit(-250, 9, 1, 4);
}

MultiPoly klein_r21() {
    std::vector<MultiPoly> f{klein_r4(), klein_r6(), klein_r14()};
    std::vector<std::vector<MultiPoly>> jac(3);
    for (int i = 0; i < 3; ++i)
        for (int v = 0; v < 3; ++v) jac[i].push_back(f[i].partial(v));
    return determinant(jac) * Scalar(q(1, 14));
}

VerificationReport klein_invariant_congruence() {
    MultiPoly r4 = klein_r4(), r6 = klein_r6(), r14 = klein_r14(), r21 = klein_r21();
    MultiPoly lhs = r21.pow(2) - r14.pow(3) + Scalar(1728) * r6.pow(7);
    MultiPoly rem = reduce_mod(lhs, r4);
    std::ostringstream d;
    d << "R14 homogeneous: " << (r14.is_homogeneous() ? "yes" : "no") << "; deg R21^2 = " << r21.pow(2).total_degree()
      << "; remainder terms: " << rem.terms().size();
    bool ok = rem.is_zero() && r14.is_homogeneous() && r21.pow(2).total_degree() == 42;
    auto r = make_report("klein-r21-congruence", "R_{21}^2 = R_{14}^3 - 1728 R_6^7 mod R_4", ok, d.str());
    return r;
}

VerificationReport verify_quotient_curve(long order) {
    MultiPoly X = MultiPoly::var(0), Y = MultiPoly::var(1), Z = MultiPoly::var(2);
    // Z^9 (y^7 - x(x-1)^2)
    MultiPoly p = Scalar(-1) * Y.pow(7) * Z.pow(2) + X.pow(2) * Y * (X.pow(2) * Y + Z.pow(3)).pow(2);
    MultiPoly rem = reduce_mod(p, klein_r4());
    const IdentitySpec& s = find_modular_spec("quotient-curve-q");
    VerificationReport qs = verify_identity(s, order);
    std::ostringstream d;
    d << "polynomial remainder terms: " << rem.terms().size() << "; q-series: " << to_string(qs.status);
    if (qs.first_mismatch) d << " (first mismatch at q^" << qs.first_mismatch->exponent.get_str() << ")";
    auto r = make_report("quotient-curve", R"(y^7=x\,(x-1)^2.)",
                         rem.is_zero() && qs.status == Status::Pass, d.str());
    r.order = order;
    return r;
}

VerificationReport modular_genus_audit(int level) {
    std::ostringstream d;
    int genus = -1, expected = 0;
    std::string anchor;
    if (level == 5) {
        // z^12 = f(y) over the y-line
        UniPoly f = UniPoly{0, 1} * UniPoly{1, 0, 0, 0, 0, -11, 0, 0, 0, 0, -1};
        const int n = 12;
        int ram = 0, points = 0;
        for (const auto& [g, m] : squarefree_decomposition(f)) {
            int e = n / std::gcd(n, m);
            ram += g.degree() * (n / e) * (e - 1);
            points += g.degree();
        }
        int e_inf = n / std::gcd(n, f.degree());
        if (e_inf > 1) {
            ram += (n / e_inf) * (e_inf - 1);
            ++points;
        }
        genus = rh_genus(0, n, ram);
        expected = 55;
        anchor = "The genus of the covering equals 55=1+1/2(12(0-2)+12(12-1))";
        d << points << " branch points, total ramification " << ram << ", genus " << genus;
    } else if (level == 7) {
        // W^6 = R6 over Klein's quartic: branched over R4 = R6 = 0, 4*6 points
        const int n = 6;
        int points = klein_r4().total_degree() * klein_r6().total_degree();
        int ram = points * (n - 1);
        genus = rh_genus(3, n, ram);
        expected = 73;
        anchor = "the genus of the covering equals 73=1+1/2(6(2*3-2)+24(6-1))";
        d << points << " branch points (Bezout, simple), genus " << genus;
    } else {
        throw ModularError("genus audit is defined for levels 5 and 7");
    }
    return make_report("genus-audit-level" + std::to_string(level), anchor, genus == expected, d.str());
}

VerificationReport integrality_audit(long order) {
    static const char* names[] = {"j",  "E4", "E6", "h2", "h3", "h4",  "h5",    "h7", "x5",
                                  "mx7", "K1", "K2", "K3", "mX", "Y",  "Z",     "lam16"};
    std::ostringstream d;
    bool ok = true;
    for (const char* n : names) {
        Series s = qseries(n, Rational(order));
        for (const auto& c : s.coeffs())
            if (!c.is_rational() || !is_integer(c.re())) {
                ok = false;
                d << n << " has coefficient " << c.str() << "; ";
                break;
            }
    }
    if (ok) d << "all " << std::size(names) << " entries integral below q^" << order;
    auto r = make_report("integrality-audit", R"(j(\tau)=\frac1q+744+196884q+21493760q^2+\ldots)", ok, d.str());
    r.order = order;
    return r;
}

}  // namespace darboux
