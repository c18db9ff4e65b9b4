#include "bergball/scalar.hpp"

#include <cctype>
#include <ostream>

namespace bergball {

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    Rational d = o.abs_sq();
    if (d == 0) throw DivisionByZero("scalar division by zero");
    // (a+bi)/(c+di) = (a+bi)(c-di)/(c^2+d^2)
    Rational re = (re_ * o.re_ + im_ * o.im_) / d;
    im_ = (im_ * o.re_ - re_ * o.im_) / d;
    re_ = re;
    return *this;
}

std::string to_text(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_text(const GaussianRational& x) {
    std::string s = to_text(x.real());
    if (!x.is_real()) {
        Rational im = x.imag();
        if (im > 0) {
            s += "+" + to_text(im) + "*i";
        } else {
            s += "-" + to_text(-im) + "*i";
        }
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) {
    return os << to_text(x);
}

namespace {

// Parses [sign] digits [/ digits] starting at pos; advances pos.
Rational parse_rational_at(const std::string& s, size_t& pos) {
    size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = (s[pos] == '-');
        ++pos;
    }
    size_t dstart = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == dstart)
        throw ParseError("expected digits in scalar at offset " + std::to_string(start) +
                         " of '" + s + "'");
    Integer num(s.substr(dstart, pos - dstart));
    Integer den = 1;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t qstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == qstart) throw ParseError("expected denominator digits in '" + s + "'");
        den = Integer(s.substr(qstart, pos - qstart));
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    }
    Rational r(num, den);
    return neg ? Rational(-r) : r;
}

std::string strip_space(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

} // namespace

Rational parse_rational(const std::string& raw) {
    std::string s = strip_space(raw);
    size_t pos = 0;
    Rational r = parse_rational_at(s, pos);
    if (pos != s.size()) throw ParseError("trailing characters in rational '" + raw + "'");
    return r;
}

GaussianRational parse_scalar(const std::string& raw) {
    std::string s = strip_space(raw);
    if (s.empty()) throw ParseError("empty scalar");
    size_t pos = 0;
    Rational re = parse_rational_at(s, pos);
    if (pos == s.size()) return GaussianRational(re);
    if (s[pos] != '+' && s[pos] != '-')
        throw ParseError("expected '+' or '-' before imaginary part in '" + raw + "'");
    Rational im = parse_rational_at(s, pos);
    if (pos + 2 != s.size() || s[pos] != '*' || s[pos + 1] != 'i')
        throw ParseError("expected trailing '*i' in '" + raw + "'");
    return GaussianRational(re, im);
}

} // namespace bergball
