#ifndef BERGBALL_RATFUNC_HPP
#define BERGBALL_RATFUNC_HPP

#include <string>
#include <vector>

#include "bergball/univariate.hpp"

namespace bergball {

/**
 * A rational function over Q in one variable, kept gcd-reduced with a monic
 * denominator, so equality of the representations is equality of functions.
 */
class RationalFunctionQ {
public:
    RationalFunctionQ() : num_(), den_(Rational(1)) {}
    RationalFunctionQ(const UnivariatePoly& num, const UnivariatePoly& den);

    const UnivariatePoly& numerator() const { return num_; }
    const UnivariatePoly& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    /** Numerator degree strictly below denominator degree. */
    bool is_proper() const { return num_.degree() < den_.degree(); }

    /** Exact value; raises PoleAtPoint on a denominator zero. */
    Rational eval(const Rational& zeta) const;

    RationalFunctionQ operator+(const RationalFunctionQ& o) const;
    RationalFunctionQ operator-(const RationalFunctionQ& o) const;
    RationalFunctionQ scaled(const Rational& c) const;

    bool operator==(const RationalFunctionQ& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunctionQ& o) const { return !(*this == o); }

    std::string to_string(const std::string& var = "zeta") const;

private:
    UnivariatePoly num_, den_;
};

struct PoleTerm {
    int pole;        // location p of the pole
    int order;       // 1 or 2
    Rational coeff;  // residue-style coefficient of 1/(zeta - p)^order
};

/**
 * polynomial + sum coeff/(zeta - pole)^order, with all poles at integers of
 * order at most two.  reconstruct() resums the terms; it must reproduce the
 * decomposed function exactly.
 */
struct PartialFractionForm {
    UnivariatePoly polynomial;
    std::vector<PoleTerm> poles;  // sorted by (pole, order)

    RationalFunctionQ reconstruct() const;
    std::string to_string(const std::string& var = "zeta") const;
};

/** Exact decomposition; raises UnsupportedPoles on non-integer roots or
 *  multiplicities above two. */
PartialFractionForm partial_fractions(const RationalFunctionQ& rf);

} // namespace bergball

#endif
