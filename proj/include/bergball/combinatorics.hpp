#ifndef BERGBALL_COMBINATORICS_HPP
#define BERGBALL_COMBINATORICS_HPP

#include "bergball/multiindex.hpp"
#include "bergball/scalar.hpp"

namespace bergball {

/** n! (n >= 0). */
Integer factorial(int n);

/** binomial(n, k); zero when k < 0 or k > n. */
Integer binomial(int n, int k);

/** multinomial(k) = |k|! / (k_1! ... k_N!). */
Integer multinomial(const MultiIndex& k);

/**
 * Squared Bergman norm of the monomial z^alpha over the unit ball of
 * C^N (N = alpha.dimension()) with the normalized volume measure:
 *
 *   ||z^alpha||^2 = N! alpha! / (N + |alpha|)!
 */
Rational monomial_norm_sq(const MultiIndex& alpha);

/**
 * Boundary moment of |zeta^mu|^2 over the unit sphere with the normalized
 * surface measure:
 *
 *   int |zeta^mu|^2 dsigma = (N-1)! mu! / (N - 1 + |mu|)!
 */
Rational sphere_moment(const MultiIndex& mu);

} // namespace bergball

#endif
