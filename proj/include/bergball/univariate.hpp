#ifndef BERGBALL_UNIVARIATE_HPP
#define BERGBALL_UNIVARIATE_HPP

#include <string>
#include <utility>
#include <vector>

#include "bergball/scalar.hpp"

namespace bergball {

/** Dense univariate polynomial over Q.  Trailing zero coefficients are trimmed. */
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(const Rational& c0) { c_.push_back(c0); trim(); }
    explicit UnivariatePoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UnivariatePoly variable();              // t
    static UnivariatePoly linear(const Rational& c0, const Rational& c1);  // c0 + c1 t

    /** Degree; -1 for the zero polynomial. */
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int k) const;
    Rational leading() const;

    UnivariatePoly operator+(const UnivariatePoly& o) const;
    UnivariatePoly operator-(const UnivariatePoly& o) const;
    UnivariatePoly operator*(const UnivariatePoly& o) const;
    UnivariatePoly operator-() const;
    UnivariatePoly scaled(const Rational& c) const;

    bool operator==(const UnivariatePoly& o) const { return c_ == o.c_; }
    bool operator!=(const UnivariatePoly& o) const { return c_ != o.c_; }

    Rational eval(const Rational& x) const;
    UnivariatePoly derivative() const;

    /** Euclidean division: returns (quotient, remainder), divisor nonzero. */
    std::pair<UnivariatePoly, UnivariatePoly> divrem(const UnivariatePoly& d) const;

    /** Monic gcd. */
    static UnivariatePoly gcd(UnivariatePoly a, UnivariatePoly b);

    UnivariatePoly monic() const;

    std::string to_string(const std::string& var) const;

private:
    void trim();
    std::vector<Rational> c_;
};

} // namespace bergball

#endif
