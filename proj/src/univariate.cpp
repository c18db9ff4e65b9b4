#include "bergball/univariate.hpp"

#include <algorithm>

#include "bergball/errors.hpp"

namespace bergball {

void UnivariatePoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UnivariatePoly UnivariatePoly::variable() {
    return UnivariatePoly(std::vector<Rational>{Rational(0), Rational(1)});
}

UnivariatePoly UnivariatePoly::linear(const Rational& c0, const Rational& c1) {
    return UnivariatePoly(std::vector<Rational>{c0, c1});
}

Rational UnivariatePoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(k)];
}

Rational UnivariatePoly::leading() const {
    if (c_.empty()) throw PreconditionViolation("leading coefficient of zero polynomial");
    return c_.back();
}

UnivariatePoly UnivariatePoly::operator+(const UnivariatePoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
    for (size_t k = 0; k < o.c_.size(); ++k) r[k] += o.c_[k];
    return UnivariatePoly(std::move(r));
}

UnivariatePoly UnivariatePoly::operator-(const UnivariatePoly& o) const {
    return *this + (-o);
}

UnivariatePoly UnivariatePoly::operator-() const {
    std::vector<Rational> r = c_;
    for (auto& x : r) x = -x;
    return UnivariatePoly(std::move(r));
}

UnivariatePoly UnivariatePoly::operator*(const UnivariatePoly& o) const {
    if (is_zero() || o.is_zero()) return UnivariatePoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UnivariatePoly(std::move(r));
}

UnivariatePoly UnivariatePoly::scaled(const Rational& c) const {
    std::vector<Rational> r = c_;
    for (auto& x : r) x *= c;
    return UnivariatePoly(std::move(r));
}

Rational UnivariatePoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UnivariatePoly UnivariatePoly::derivative() const {
    if (c_.size() <= 1) return UnivariatePoly();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * Rational(static_cast<int>(k));
    return UnivariatePoly(std::move(r));
}

std::pair<UnivariatePoly, UnivariatePoly> UnivariatePoly::divrem(const UnivariatePoly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    UnivariatePoly r = *this;
    std::vector<Rational> q(std::max<int>(degree() - d.degree() + 1, 0), Rational(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int shift = r.degree() - d.degree();
        Rational c = r.leading() / d.leading();
        q[static_cast<size_t>(shift)] = c;
        // r -= c * t^shift * d
        std::vector<Rational> sub(static_cast<size_t>(shift), Rational(0));
        for (int k = 0; k <= d.degree(); ++k) sub.push_back(d.coeff(k) * c);
        r = r - UnivariatePoly(std::move(sub));
    }
    return {UnivariatePoly(std::move(q)), r};
}

UnivariatePoly UnivariatePoly::gcd(UnivariatePoly a, UnivariatePoly b) {
    while (!b.is_zero()) {
        UnivariatePoly r = a.divrem(b).second;
        a = b;
        b = r;
    }
    return a.is_zero() ? a : a.monic();
}

UnivariatePoly UnivariatePoly::monic() const {
    if (is_zero()) throw PreconditionViolation("monic of zero polynomial");
    return scaled(Rational(1) / leading());
}

std::string UnivariatePoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coeff(k);
        if (c == 0) continue;
        if (!s.empty()) s += (c > 0) ? " + " : " - ";
        else if (c < 0) s += "-";
        Rational a = abs(c);
        bool unit = (a == 1);
        if (k == 0 || !unit) s += to_text(a);
        if (k > 0) {
            if (!unit) s += "*";
            s += var;
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

} // namespace bergball
