#ifndef BERGBALL_OPERATORS_HPP
#define BERGBALL_OPERATORS_HPP

#include <optional>
#include <vector>

#include "bergball/bipoly.hpp"
#include "bergball/check.hpp"
#include "bergball/univariate.hpp"

namespace bergball {

/**
 * The three first-layer operators of the calculus, acting on one bidegree
 * term c z^alpha zbar^beta as
 *
 *   E      ->  |alpha| c z^alpha zbar^beta        (radial derivative in z)
 *   Ebar   ->  |beta|  c z^alpha zbar^beta        (radial derivative in zbar)
 *   Delta  ->  sum_j alpha_j beta_j c z^(alpha-e_j) zbar^(beta-e_j)
 */
enum class FirstOrder { E, Ebar, Delta };

BiPolynomial apply_first_order(FirstOrder op, const BiPolynomial& p);

/** (E + s)(Ebar + s) p - Delta p, the shifted pair |E + s|^2 - Delta. */
BiPolynomial apply_shifted_pair(const Rational& s, const BiPolynomial& p);

/** The invariant Laplacian (up to the conventional factor 4):
 *  (1 - |z|^2) (Delta - E Ebar) p. */
BiPolynomial apply_inv_laplacian(const BiPolynomial& p);

/** p_m(t) = (1/(m!)^2) prod_{j=0}^{m} (j(j-N) - t). */
UnivariatePoly pm_polynomial(int m, int dimension);

/**
 * Exact division of p by (1 - |z|^2)^k.  Raises DivisionFailure carrying the
 * nonzero remainder if p is not divisible; nothing is ever truncated.
 */
BiPolynomial exact_divide_one_minus_norm_sq(const BiPolynomial& p, int k);

enum class DMode {
    Chain,   // (|E+m|^2 - Delta) ... (|E+0|^2 - Delta), s = 0 applied first
    PmForm,  // prod_{j=0}^m (j(j-N) - invariant Laplacian) then exact division
             // by (1-|z|^2)^(m+1); equals (m!)^2 p_m(laplacian) structurally
};

/** The level-m product operator in both normal forms (they must agree). */
BiPolynomial apply_D(int m, const BiPolynomial& p, DMode mode);

/** j^2 h^(j+1) == (j(j-N) - invariant Laplacian)(h^j) for h = 1 - |z|^2. */
CheckResult verify_h_recursion(int j, int dimension);

/**
 * Checks apply_D(m, q, Chain) == apply_D(m, q, PmForm) for every monomial q
 * with |alpha| + |beta| <= degree_bound.  A division failure inside PmForm is
 * reported as a refutation, never swallowed.
 */
CheckResult verify_do_identity(int m, int dimension, int degree_bound);

/** No term has both |alpha| >= 1 and |beta| >= 1; witness is the first offender. */
bool is_pluriharmonic(const BiPolynomial& p, std::optional<TermKey>* witness = nullptr);

struct PluriCharacterization {
    bool lemma_sum_vanishes;     // sum (conj(g_j) - conj(g_j(0)))(u_j - u_j(0)) == 0
    bool direct_pluriharmonic;   // is_pluriharmonic(sum conj(g_j) u_j)
    BiPolynomial lemma_sum;      // the centered sum itself
    std::string witness;         // offending term when either side fails

    bool consistent() const { return lemma_sum_vanishes == direct_pluriharmonic; }
};

/**
 * Two-sided test of the centered-product characterization: for holomorphic
 * g_j, u_j, the sum conj(g_j) u_j is pluriharmonic iff the centered sum
 * vanishes identically.  Both directions are computed independently so a
 * disagreement would falsify the characterization itself.
 */
PluriCharacterization characterization_pluri(const std::vector<BiPolynomial>& g,
                                             const std::vector<BiPolynomial>& u);

} // namespace bergball

#endif
