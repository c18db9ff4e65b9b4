#ifndef BERGBALL_MELLIN_HPP
#define BERGBALL_MELLIN_HPP

#include "bergball/quasihom.hpp"
#include "bergball/ratfunc.hpp"

namespace bergball {

/**
 * The Mellin transform prescribed for the radial factor of a symbol whose
 * averaging transform is z̄^alpha z^beta (1-|z|^2)^ell plus lower-order
 * corrections.  All Gamma quotients have integer argument gaps and expand to
 * an exact rational function of the Mellin variable.
 *
 * Preconditions: |beta| <= |alpha|, ell >= 0, |alpha|+|beta|+2 ell <= 2N+1.
 */
RationalFunctionQ phi_hat(const MultiIndex& alpha, const MultiIndex& beta, int ell,
                          int dimension);

/**
 * Inverse Mellin transform of a proper rational function with integer poles:
 * c/(zeta - p) pulls back to c t^(-p) and c/(zeta - p)^2 to -c t^(-p) log t.
 * Raises ImproperFunction when a polynomial part is present.
 */
RadialProfile invert_mellin(const PartialFractionForm& pf);

/** u = z̄^alpha z^beta phi(|z|^2), the single-term symbol whose averaging
 *  transform is derivative_formula_polynomial(alpha, beta, ell, N). */
QuasiHomSymbol base_symbol(const MultiIndex& alpha, const MultiIndex& beta, int ell,
                           int dimension);

/**
 * Closed-form averaging transform of base_symbol: with M = N+1-|beta|-ell,
 *
 *   (1/(M)_{|beta|}) * sum_{mu <= alpha ^ beta} binom(beta,mu) (alpha!/(alpha-mu)!)
 *       * (M)_{|beta-mu|} * z̄^(alpha-mu) z^(beta-mu) (1-|z|^2)^(ell+|mu|),
 *
 * whose leading term is z̄^alpha z^beta (1-|z|^2)^ell and whose corrections
 * are strictly lower in z-degree.
 */
BiPolynomial derivative_formula_polynomial(const MultiIndex& alpha, const MultiIndex& beta,
                                           int ell, int dimension);

/**
 * A symbol u with averaging transform exactly z̄^alpha z^beta (1-|z|^2)^ell,
 * built by recursively subtracting preimages of the correction terms.
 * Conjugate-swap is applied internally when |beta| > |alpha|.  Raises
 * DegreeTooLarge when |alpha|+|beta|+2 ell > 2N+1; results are memoized.
 */
QuasiHomSymbol preimage_monomial(const MultiIndex& alpha, const MultiIndex& beta, int ell,
                                 int dimension);

struct RangeDecision {
    bool in_range = false;
    QuasiHomSymbol witness{1};  // averaging preimage, valid when in_range
    int deriv_j = 0;          // violating derivative pair (1-based), otherwise
    int deriv_l = 0;
    int witness_degree = 0;   // total degree of that mixed derivative
    int degree_bound = 0;     // the admissible ceiling 2N-1
};

/**
 * Decides whether a bidegree polynomial is an averaging transform of an
 * integrable symbol: it is precisely when every mixed derivative
 * d/dz_j d/dz̄_l f has total degree at most 2N-1.  On success the witness
 * symbol reproduces f coefficient-for-coefficient at every band.
 */
RangeDecision range_decision(const BiPolynomial& f);

/**
 * The symbol u with T_{z^beta} T_{z̄^alpha} = T_u, which exists precisely
 * when |alpha|+|beta| <= 2N+1; raises NotRepresentable otherwise, citing a
 * violating derivative pair.  Requires |alpha| >= 1 and |beta| >= 1.
 */
QuasiHomSymbol product_symbol(const MultiIndex& beta, const MultiIndex& alpha, int dimension);

} // namespace bergball

#endif
