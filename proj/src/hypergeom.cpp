#include "darboux/hypergeom.hpp"

#include <algorithm>
#include <sstream>

namespace darboux {

namespace {

std::vector<Rational> parse_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (item.find_first_not_of(' ') != std::string::npos) out.push_back(parse_rational(item));
    return out;
}

// (theta + c) applied to f
Series theta_plus(const Series& f, const Rational& c) { return f.theta() + f * Scalar(c); }

}  // namespace

HpgParams HpgParams::parse(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '(' || c == ')'; }), s.end());
    auto semi = s.find(';');
    if (semi == std::string::npos) throw HypergeomError("parameters need a ';' between upper and lower: " + text);
    return HpgParams(parse_list(s.substr(0, semi)), parse_list(s.substr(semi + 1)));
}

Rational HpgParams::gamma() const {
    Rational g;
    for (const auto& a : upper) g += a;
    for (const auto& b : lower) g -= b;
    return g;
}

std::string HpgParams::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < upper.size(); ++i) s += (i ? ", " : "") + upper[i].get_str();
    s += "; ";
    for (std::size_t i = 0; i < lower.size(); ++i) s += (i ? ", " : "") + lower[i].get_str();
    return s + ")";
}

Series hpg_series(const HpgParams& p, long terms) {
    if (terms <= 0) return Series::zero(Rational(std::max(terms, 0L)));
    std::vector<Scalar> c(terms);
    Rational term = 1;
    c[0] = Scalar(term);
    for (long k = 0; k + 1 < terms && sgn(term) != 0; ++k) {
        Rational num = 1, den = k + 1;
        for (const auto& a : p.upper) num *= a + k;
        for (const auto& b : p.lower) den *= b + k;
        if (sgn(num) == 0) {
            term = 0;
            break;
        }
        if (sgn(den) == 0) throw HypergeomError("lower parameter pole in " + p.str());
        term *= num / den;
        c[k + 1] = Scalar(term);
    }
    return Series::from_coeffs(Rational(0), 1, std::move(c), Rational(terms));
}

Series ode_residual(const Series& f, const HpgParams& p) {
    Series up = f;
    for (const auto& a : p.upper) up = theta_plus(up, a);
    Series low = f;
    for (const auto& b : p.lower) low = theta_plus(low, b - 1);
    return up - low.derivative();
}

Series ode_residual_at_infinity(const Series& g, const HpgParams& p) {
    // theta_z = -theta_w and d/dz = -w theta_w
    Series up = g;
    for (const auto& a : p.upper) up = up * Scalar(a) - up.theta();
    Series low = g;
    for (const auto& b : p.lower) low = low * Scalar(Rational(b - 1)) - low.theta();
    return up + low.theta().shifted(Rational(1));
}

MMatrix m_matrix(const HpgParams& p) {
    if (p.upper.size() != 3 || p.lower.size() != 2) throw HypergeomError("M-matrix needs 3F2 parameters");
    MMatrix m;
    for (int i = 0; i < 3; ++i) {
        const Rational& a = p.upper[i];
        m[i] = {a, a - p.lower[1] + 1, a - p.lower[0] + 1};
    }
    return m;
}

CompanionBasis companion_basis(const HpgParams& p) {
    MMatrix m = m_matrix(p);
    const Rational &b1 = p.lower[0], &b2 = p.lower[1];
    if (is_integer(b1) || is_integer(b2) || is_integer(Rational(b1 - b2)))
        throw HypergeomError("resonant local exponents at z = 0 for " + p.str());
    for (int j = 0; j < 3; ++j)
        for (int k = j + 1; k < 3; ++k)
            if (is_integer(Rational(p.upper[j] - p.upper[k])))
                throw HypergeomError("resonant local exponents at z = infinity for " + p.str());
    CompanionBasis cb;
    auto column = [&](int c) { return std::vector<Rational>{m[0][c], m[1][c], m[2][c]}; };
    cb.at_zero[0] = {Rational(0), HpgParams(column(0), {b1, b2})};
    cb.at_zero[1] = {Rational(1 - b2), HpgParams(column(1), {Rational(2 - b2), Rational(b1 - b2 + 1)})};
    cb.at_zero[2] = {Rational(1 - b1), HpgParams(column(2), {Rational(2 - b1), Rational(b2 - b1 + 1)})};
    for (int j = 0; j < 3; ++j) {
        int k = (j + 1) % 3, l = (j + 2) % 3;
        if (k > l) std::swap(k, l);
        const auto& a = p.upper;
        cb.at_infinity[j] = {Rational(-a[j]), HpgParams({m[j][0], m[j][1], m[j][2]},
                                                        {Rational(a[j] - a[k] + 1), Rational(a[j] - a[l] + 1)}),
                            true};
    }
    return cb;
}

Series local_solution_series(const LocalSolution& s, long terms) {
    return hpg_series(s.params, terms).shifted(s.at_infinity ? Rational(-s.exponent) : s.exponent);
}

HpgParams shifted_params(const ShiftDescriptor& d, const HpgParams& p) {
    HpgParams q = p;
    switch (d.kind) {
        case ShiftKind::Identity:
            break;
        case ShiftKind::AlphaUp:
            q.upper.at(d.index) += 1;
            break;
        case ShiftKind::BetaDown:
            q.lower.at(d.index) -= 1;
            break;
        case ShiftKind::AlphaBetaDown:
            q.upper.at(0) -= 1;
            q.lower.at(0) -= 1;
            break;
        case ShiftKind::Derivative:
            for (auto& a : q.upper) a += 1;
            for (auto& b : q.lower) b += 1;
            break;
    }
    return q;
}

Series contiguous_apply(const ShiftDescriptor& d, const HpgParams& p, const Series& f) {
    switch (d.kind) {
        case ShiftKind::Identity:
            return f;
        case ShiftKind::AlphaUp: {
            const Rational& a = p.upper.at(d.index);
            if (sgn(a) == 0) throw HypergeomError("alpha shift needs a nonzero alpha in " + p.str());
            return f + f.theta() * Scalar(Rational(1 / a));
        }
        case ShiftKind::BetaDown: {
            Rational b1 = p.lower.at(d.index) - 1;
            if (sgn(b1) == 0) throw HypergeomError("beta shift needs beta != 1 in " + p.str());
            return f + f.theta() * Scalar(Rational(1 / b1));
        }
        case ShiftKind::AlphaBetaDown: {
            if (p.upper.size() != 3 || p.lower.size() != 2) throw HypergeomError("second order form needs 3F2");
            const Rational &a1 = p.upper[0], &a2 = p.upper[1], &a3 = p.upper[2];
            const Rational &b1 = p.lower[0], &b2 = p.lower[1];
            Rational scale = (b1 - 1) * (a1 - b2);
            if (sgn(scale) == 0) throw HypergeomError("second order form degenerates for " + p.str());
            Series z = Series::monomial(Scalar(1), Rational(1), f.order() + 2);
            Series th = f.theta();
            // z^2 d^2/dz^2 = theta^2 - theta
            Series d2 = th.theta() - th;
            Series r = f * Scalar(Rational(a2 * a3)) * z + f * Scalar(scale) +
                       th * (z * Scalar(Rational(a2 + a3 + 1)) + Scalar(Rational(a1 - b1 - b2))) + d2 * (z - Scalar(1));
            return r * Scalar(Rational(1 / scale));
        }
        case ShiftKind::Derivative: {
            Rational num = 1, den = 1;
            for (const auto& b : p.lower) num *= b;
            for (const auto& a : p.upper) den *= a;
            if (sgn(den) == 0) throw HypergeomError("derivative shift needs nonzero upper parameters in " + p.str());
            return f.derivative() * Scalar(Rational(num / den));
        }
    }
    return f;
}

bool interlacing(const HpgParams& p) {
    struct Mark {
        Rational frac;
        bool upper;
    };
    std::vector<Mark> marks;
    for (const auto& a : p.upper) marks.push_back({frac_part(a), true});
    for (const auto& b : p.lower) marks.push_back({frac_part(b), false});
    marks.push_back({Rational(0), false});
    for (const auto& u : marks)
        for (const auto& l : marks)
            if (u.upper && !l.upper && u.frac == l.frac)
                throw HypergeomError("non-generic parameters " + p.str() + ": an upper parameter meets a lower one mod 1");
    std::stable_sort(marks.begin(), marks.end(), [](const Mark& x, const Mark& y) { return x.frac < y.frac; });
    for (std::size_t i = 0; i < marks.size(); ++i) {
        const Mark& next = marks[(i + 1) % marks.size()];
        if (marks[i].upper == next.upper) return false;
    }
    return true;
}

const std::vector<HpgClass>& class_catalog() {
    static const std::vector<HpgClass> catalog = {
        {"3A", HpgParams::parse("(-3/14, 1/14, 9/14; 1/3, 2/3)")},
        {"3B", HpgParams::parse("(-1/14, 3/14, 5/14; 1/3, 2/3)")},
        {"4A", HpgParams::parse("(-3/14, 1/14, 9/14; 1/4, 3/4)")},
        {"4B", HpgParams::parse("(-1/14, 3/14, 5/14; 1/4, 3/4)")},
        {"7A", HpgParams::parse("(-1/14, 1/14, 5/14; 1/7, 5/7)")},
        {"7B", HpgParams::parse("(-1/14, 1/14, 9/14; 2/7, 6/7)")},
    };
    return catalog;
}

const HpgClass& find_class(const std::string& label) {
    for (const auto& c : class_catalog())
        if (c.label == label) return c;
    throw HypergeomError("unknown class " + label);
}

}  // namespace darboux
