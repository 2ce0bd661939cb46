#include "darboux/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace darboux {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (!s.empty() && s.front() == '+') s.erase(s.begin());
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + std::string(text));
    if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer floor_of(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Integer ceil_of(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Rational frac_part(const Rational& r) { return r - Rational(floor_of(r)); }

Rational Scalar::norm() const { return Rational(re_ * re_ - re_ * om_ + om_ * om_); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (is_rational()) return Scalar(Rational(1 / re_));
    Rational n = norm();
    Scalar c = conj();
    return Scalar(Rational(c.re_ / n), Rational(c.om_ / n));
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar result(1), base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    if (!o.is_rational()) om_ += o.om_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    if (!o.is_rational()) om_ -= o.om_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (o.is_rational()) {
        re_ *= o.re_;
        if (!is_rational()) om_ *= o.re_;
        return *this;
    }
    if (is_rational()) {
        om_ = re_ * o.om_;
        re_ *= o.re_;
        return *this;
    }
    // (a + bw)(c + dw) = ac - bd + (ad + bc - bd) w
    Rational bd = om_ * o.om_;
    Rational nre = re_ * o.re_ - bd;
    Rational nom = re_ * o.om_ + om_ * o.re_ - bd;
    re_ = std::move(nre);
    om_ = std::move(nom);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_rational()) {
        if (sgn(o.re_) == 0) throw std::domain_error("division by zero");
        re_ /= o.re_;
        if (!is_rational()) om_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string Scalar::str() const {
    if (is_rational()) return re_.get_str();
    std::string w = om_ == 1 ? "w" : om_ == -1 ? "-w" : om_.get_str() + "*w";
    if (sgn(re_) == 0) return w;
    if (w.front() != '-') w = "+" + w;
    return re_.get_str() + w;
}

Scalar Scalar::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s.push_back(c);
    auto w = s.find('w');
    if (w == std::string::npos) return Scalar(parse_rational(s));
    // split at the sign that starts the w-term
    std::size_t split = s.rfind('+', w);
    std::size_t minus = s.rfind('-', w);
    if (split == std::string::npos || (minus != std::string::npos && minus > split)) split = minus;
    if (split == std::string::npos) split = 0;
    std::string re_part = s.substr(0, split);
    std::string om_part = s.substr(split, w - split);
    if (!om_part.empty() && om_part.back() == '*') om_part.pop_back();
    Rational b;
    if (om_part.empty() || om_part == "+") b = 1;
    else if (om_part == "-") b = -1;
    else b = parse_rational(om_part);
    Rational a = re_part.empty() ? Rational(0) : parse_rational(re_part);
    return Scalar(a, b);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace darboux
