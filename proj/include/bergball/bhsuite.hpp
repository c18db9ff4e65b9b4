#ifndef BERGBALL_BHSUITE_HPP
#define BERGBALL_BHSUITE_HPP

#include <vector>

#include "bergball/bipoly.hpp"
#include "bergball/check.hpp"
#include "bergball/quasihom.hpp"

namespace bergball {

/**
 * A pluriharmonic polynomial phi written as phi = f + conj(g) with f, g
 * holomorphic.  The normalization g(0) = 0 makes the split unique: the
 * constant term always lives in f.
 */
struct PluriharmonicPair {
    BiPolynomial f;
    BiPolynomial g;

    explicit PluriharmonicPair(int dimension);

    /**
     * Validates that f and g are holomorphic of equal dimension and
     * normalizes: a nonzero g(0) is moved into f as conj(g(0)), so the
     * represented function f + conj(g) is unchanged.
     */
    PluriharmonicPair(BiPolynomial f_in, BiPolynomial g_in);

    int dimension() const { return f.dimension(); }
    bool is_zero() const { return f.is_zero() && g.is_zero(); }

    /** The represented function f + conj(g) as a bipolynomial. */
    BiPolynomial combined() const;
};

/** Recover the unique normalized split of a pluriharmonic polynomial.
 *  Throws NotPluriharmonic (with the offending term as witness) otherwise. */
PluriharmonicPair split_pluriharmonic(const BiPolynomial& p);

/** One summand of sum_j T_{phi_j} T_{psi_j}: phi = f + conj(g),
 *  psi = u + conj(v), stored as the two splits (f,g) and (u,v). */
struct BHPair {
    PluriharmonicPair phi;  // (f_j, g_j)
    PluriharmonicPair psi;  // (u_j, v_j)
};

/** One rank-one summand x (tensor) y with holomorphic polynomials x, y. */
struct RankOneTerm {
    BiPolynomial x;
    BiPolynomial y;
};

/**
 * A candidate identity  sum_j T_{phi_j} T_{psi_j} = T_h + sum_l x_l (x) y_l
 * together with everything needed to test it both as an operator statement
 * and through its two equivalent symbolic conditions.
 */
struct BHScenario {
    int dimension;
    std::vector<BHPair> pairs;
    QuasiHomSymbol h;
    std::vector<RankOneTerm> rank_one;

    explicit BHScenario(int dim);
};

/**
 * Evaluates, exactly, three facts about the scenario:
 *   (A) the operator identity on all columns |alpha| <= degree,
 *   (B) h - sum_j conj(g_j) u_j is pluriharmonic,
 *   (C) sum_j phi_j psi_j = h + (1-|z|^2)^(N+1) sum_l x_l conj(y_l),
 * and reports each plus the biconditional (A) <=> (B and C).  A biconditional
 * mismatch is flagged as a falsification event with a witness.  (B) and (C)
 * are symbolic and earn ExactProof; (A) and the biconditional row are honest
 * only up to the truncation and carry VerifiedAtDegree.
 *
 * h must expand to a bipolynomial (ImproperFunction propagates otherwise);
 * scenarios produced by construct_bh_example always satisfy this.
 */
CheckSuite verify_bh_scenario(const BHScenario& sc, int degree);

/**
 * Builds a scenario guaranteed to satisfy the identity, from holomorphic
 * x_list, y_list (equal lengths) and optional holomorphic twists g_list,
 * u_list.  The product (1-|z|^2)^(N+1) x conj(y) expands, modulo
 * pluriharmonic terms, as
 *
 *   (x - x(0)) conj(y - y(0))
 *     + sum_{1 <= |a| <= N+1} (-1)^|a| binom(N+1,|a|) multinomial(a)
 *                             (z^a x) conj(z^a y),
 *
 * and each nonzero product term above becomes one pair (f_j, v_j), taken in
 * the deterministic order: l ascending, centered term first, then a in
 * graded-lex order.  Optional g_j / u_j attach to the pairs in order (extra
 * entries create pairs with f = v = 0).  Finally
 * h = sum_j phi_j psi_j - (1-|z|^2)^(N+1) sum_l x_l conj(y_l), which makes
 * conditions (B) and (C) hold by construction.
 */
BHScenario construct_bh_example(const std::vector<BiPolynomial>& x_list,
                                const std::vector<BiPolynomial>& y_list,
                                int dimension,
                                const std::vector<BiPolynomial>& g_list = {},
                                const std::vector<BiPolynomial>& u_list = {});

/** Deterministic small random scenario via construct_bh_example; used by the
 *  randomized consistency sweeps.  Every scenario it returns satisfies the
 *  identity by construction. */
BHScenario random_bh_scenario(int dimension, unsigned long long seed);

/**
 * Computes [T_phi, T_psi] on columns |alpha| <= degree and its exact
 * truncated rank (a lower bound for the true rank), classifies the pair into
 * the three commuting cases (both holomorphic; both antiholomorphic;
 * c1 phi + c2 psi constant for some (c1,c2) != 0, decided by exact linear
 * algebra on the nonconstant coefficient vectors), and reports whether the
 * two computations are consistent: a commuting case must force a vanishing
 * truncation, and a nonzero truncation refutes commutativity definitively.
 * Both inputs must be pluriharmonic.
 */
CheckSuite commutator_analysis(const BiPolynomial& phi, const BiPolynomial& psi, int degree);

/**
 * For pluriharmonic lists phi_list, psi_list (equal lengths): computes
 *   (1) M = sum_j (T_{phi_j psi_j} - T_{phi_j} T_{psi_j}) on columns
 *       |alpha| <= degree (the Hankel-product sum), and
 *   (4) whether sum_j P(phi_j) (psi_j - P(psi_j)) = sum_j f_j conj(v_j)
 *       is pluriharmonic, with P realized symbolically from the splits,
 * and reports the equivalence "(1) vanishes <=> (4)" plus the exact
 * truncated rank of M.  A pluriharmonic (4) with nonzero M is a definitive
 * falsification; a failing (4) with M zero at this truncation is reported
 * as inconclusive (raise the degree), never as a pass.
 */
CheckSuite hankel_equivalences(const std::vector<BiPolynomial>& phi_list,
                               const std::vector<BiPolynomial>& psi_list, int degree);

/**
 * The named example checks as one suite, for dimension in {1,2,3}:
 *   (i)   the exact operator identity
 *         (N-1) T_{z1} T_{zbar1} - sum_{j>=2} T_{zj} T_{zbarj} = T_h with
 *         h = -1 + N |z1|^2 t^{-1}, on columns |alpha| <= degree;
 *   (ii)  the invariant-Laplacian annihilation checks on the closed-form
 *         M-harmonic expressions, at 20 seeded points;
 *   (iii) mixed-derivative witnesses showing those expressions are not
 *         pluriharmonic;
 *   (iv)  the Berezin identities B(((|a|+N)/N) zbar^a - zbar^a t^{-|a|}) =
 *         (|a|/N) zbar^a |z|^2 for all 1 <= |a| < 2N, coefficientwise at
 *         the given degree;
 *   (v)   a commutator / zero-product spot suite, including the constructed
 *         two-pair scenario whose finite-rank part is exactly 1 (x) 1 and
 *         seeded random monomial pairs whose product rank is >= 1 and grows
 *         strictly from degree to degree+2.
 * Items that need N >= 2 (or a different dimension than requested) are
 * reported as skipped, never as passed.
 */
CheckSuite builtin_suites(int dimension, int degree, unsigned long long seed);

} // namespace bergball

#endif
