#include "bergball/ratfunc.hpp"

#include <algorithm>
#include <map>

#include "bergball/errors.hpp"

namespace bergball {

RationalFunctionQ::RationalFunctionQ(const UnivariatePoly& num, const UnivariatePoly& den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = UnivariatePoly();
        den_ = UnivariatePoly(Rational(1));
        return;
    }
    UnivariatePoly g = UnivariatePoly::gcd(num, den);
    num_ = num.divrem(g).first;
    den_ = den.divrem(g).first;
    Rational lead = den_.leading();
    den_ = den_.scaled(Rational(1) / lead);
    num_ = num_.scaled(Rational(1) / lead);
}

Rational RationalFunctionQ::eval(const Rational& zeta) const {
    Rational d = den_.eval(zeta);
    if (d == 0) throw PoleAtPoint("rational function evaluated at a pole");
    return num_.eval(zeta) / d;
}

RationalFunctionQ RationalFunctionQ::operator+(const RationalFunctionQ& o) const {
    return RationalFunctionQ(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunctionQ RationalFunctionQ::operator-(const RationalFunctionQ& o) const {
    return RationalFunctionQ(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunctionQ RationalFunctionQ::scaled(const Rational& c) const {
    return RationalFunctionQ(num_.scaled(c), den_);
}

std::string RationalFunctionQ::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s = "(" + num_.to_string(var) + ")";
    if (den_.degree() > 0)
        s += " / (" + den_.to_string(var) + ")";
    else if (den_.coeff(0) != 1)
        s += " / " + to_text(den_.coeff(0));
    return s;
}

namespace {

/** root p of multiplicity m contributes the factor (zeta - p)^m. */
UnivariatePoly linear_power(int p, int m) {
    UnivariatePoly f(Rational(1));
    UnivariatePoly lin = UnivariatePoly::linear(Rational(-p), Rational(1));
    for (int i = 0; i < m; ++i) f = f * lin;
    return f;
}

/** Smallest integer interval certain to contain every integer root of a
 *  monic polynomial (Cauchy bound: 1 + max |coefficient|). */
Integer integer_root_bound(const UnivariatePoly& p) {
    Rational biggest(0);
    for (int k = 0; k < p.degree(); ++k) {
        Rational a = p.coeff(k);
        if (a < 0) a = -a;
        if (a > biggest) biggest = a;
    }
    Integer num = boost::multiprecision::numerator(biggest);
    Integer den = boost::multiprecision::denominator(biggest);
    return 2 + num / den;
}

} // namespace

PartialFractionForm partial_fractions(const RationalFunctionQ& rf) {
    PartialFractionForm out;
    auto [quot, rem] = rf.numerator().divrem(rf.denominator());
    out.polynomial = quot;
    const UnivariatePoly& den = rf.denominator();
    if (rem.is_zero() || den.degree() == 0) return out;

    // locate the integer roots of the (monic) denominator by deflation
    std::map<int, int> roots;
    UnivariatePoly rest = den;
    while (rest.degree() > 0) {
        Integer bound = integer_root_bound(rest.monic());
        bool found = false;
        for (Integer k = -bound; k <= bound && !found; ++k) {
            if (rest.eval(Rational(k)) != 0) continue;
            rest = rest.divrem(UnivariatePoly::linear(Rational(-k), Rational(1))).first;
            ++roots[static_cast<int>(k)];
            found = true;
        }
        if (!found)
            throw UnsupportedPoles("denominator " + den.to_string("zeta") +
                                   " has a non-integer root");
    }
    for (const auto& [p, m] : roots)
        if (m > 2)
            throw UnsupportedPoles("pole at " + std::to_string(p) + " has order " +
                                   std::to_string(m));

    for (const auto& [p, m] : roots) {
        // den = (zeta - p)^m * q with q(p) != 0
        UnivariatePoly q = den.divrem(linear_power(p, m)).first;
        Rational qp = q.eval(Rational(p));
        Rational rp = rem.eval(Rational(p));
        if (m == 1) {
            if (rp != 0) out.poles.push_back(PoleTerm{p, 1, rp / qp});
        } else {
            Rational top = rp / qp;
            Rational slope = (rem.derivative().eval(Rational(p)) * qp -
                              rp * q.derivative().eval(Rational(p))) /
                             (qp * qp);
            if (top != 0) out.poles.push_back(PoleTerm{p, 2, top});
            if (slope != 0) out.poles.push_back(PoleTerm{p, 1, slope});
        }
    }
    std::sort(out.poles.begin(), out.poles.end(), [](const PoleTerm& a, const PoleTerm& b) {
        return a.pole != b.pole ? a.pole < b.pole : a.order < b.order;
    });
    return out;
}

RationalFunctionQ PartialFractionForm::reconstruct() const {
    RationalFunctionQ total(polynomial, UnivariatePoly(Rational(1)));
    for (const PoleTerm& t : poles)
        total = total + RationalFunctionQ(UnivariatePoly(t.coeff), linear_power(t.pole, t.order));
    return total;
}

std::string PartialFractionForm::to_string(const std::string& var) const {
    std::string s;
    if (!polynomial.is_zero()) s = polynomial.to_string(var);
    for (const PoleTerm& t : poles) {
        if (!s.empty()) s += " + ";
        std::string denom = "(" + var + (t.pole >= 0 ? " - " + std::to_string(t.pole)
                                                     : " + " + std::to_string(-t.pole)) +
                            ")";
        if (t.order == 2) denom += "^2";
        s += to_text(t.coeff) + "/" + denom;
    }
    return s.empty() ? "0" : s;
}

} // namespace bergball
