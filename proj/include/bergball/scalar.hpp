#ifndef BERGBALL_SCALAR_HPP
#define BERGBALL_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>
#include <iosfwd>
#include <string>

#include "bergball/errors.hpp"

namespace bergball {

/** Arbitrary-precision integers and rationals (GMP-backed, always canonical). */
using Integer  = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/** Canonical text form "p/q": lowest terms, sign on the numerator, q > 0. */
std::string to_text(const Rational& r);

/** Parse "p" or "p/q" (optional leading sign). Raises ParseError. */
Rational parse_rational(const std::string& s);

/**
 * An element of Q(i).  This is the coefficient field everywhere: the whole
 * pipeline stays inside exact Gaussian-rational arithmetic.
 */
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(const Rational& re) : re_(re), im_(0) {}   // NOLINT(google-explicit-constructor)
    GaussianRational(int n) : re_(n), im_(0) {}                 // NOLINT(google-explicit-constructor)
    GaussianRational(const Rational& re, const Rational& im) : re_(re), im_(im) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    /** |x|^2 = x * conj(x), a nonnegative rational. */
    Rational abs_sq() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_; im_ += o.im_; return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_; im_ -= o.im_; return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational re = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = re;
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /** Total order (real part first); used only to keep containers deterministic. */
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

private:
    Rational re_;
    Rational im_;
};

/** Canonical text form: "p/q" when imaginary part vanishes, else "p/q+r/s*i". */
std::string to_text(const GaussianRational& x);

/** Parse the canonical scalar form (lenient about omitted "/1"). */
GaussianRational parse_scalar(const std::string& s);

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

} // namespace bergball

#endif
