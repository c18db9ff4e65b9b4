#ifndef BERGBALL_IDENTITIES_HPP
#define BERGBALL_IDENTITIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "bergball/check.hpp"
#include "bergball/jet.hpp"

namespace bergball {

/**
 * Expression registry for the rational kernels the identity suite operates
 * on.  Registered names:
 *
 *   inv_kernel       1 / |1 - <z, xi>|^2, realized over the formal variables
 *                    as (1 - sum z_j eta_j)^-1 (1 - sum xi_j w_j)^-1
 *   weighted_kernel  (1 - |xi|^2) * inv_kernel
 *   power_kernel     inv_kernel^s              (param = s >= 1)
 *   mobius_lhs       1 - <phi(z), phi(xi)> for the ball automorphism phi
 *                    centered at omega = (3/5, 0, ..., 0)
 *   mobius_rhs       (1 - |omega|^2)(1 - <z, xi>) /
 *                    ((1 - <z, omega>)(1 - <omega, xi>))
 *   affine_lhs       z_j / (1 - <z, omega>)    (param = j, 1-based)
 *   affine_rhs       omega_j/(1 - |omega|^2)
 *                    + <phi(z), -omega + (1 - omega_j) phi(e_j)>/(1 - |omega|^2)
 *
 * Anything else raises UnknownKernel.
 */
Expr kernel_expr(const std::string& name, int dimension, int param = 0);

/** One registered identity instance (the standard suite enumerates these). */
struct IdentityInstance {
    std::string name;
    int param = 0;

    std::string display() const;
};

/** The standard suite: E_Delta_a, E_Delta_b, E_s_Delta s in 1..4, chain A/B
 *  and marvelous for m in {1,2}, mobius, affine. */
std::vector<IdentityInstance> identity_registry();

/**
 * Verifies one named identity at every sample point by exact jet evaluation
 * of both sides.  Equality at all points passes with the honest sampled
 * label; any nonzero difference is a definitive refutation and the witness
 * records the point and both values.  The deliberately broken control
 * "E_Delta_a_doubled" is registered so refutation reporting stays tested.
 */
CheckResult verify_pointwise_identity(const std::string& name, int param,
                                      const std::vector<SamplePoint>& points,
                                      int order_margin = 0);

/** Runs the whole registry on freshly sampled diagonal points. */
CheckSuite identity_suite(int dimension, int count, unsigned long long seed);

/**
 * The two rational functions that are annihilated by the invariant Laplacian
 * without being pluriharmonic: dimension >= 3 gives z_2 zbar_3 / |1 - z_1|^2,
 * dimension 2 the two-term expression with the (1 - zbar_1)^-2 tail.
 */
Expr mharmonic_example(int dimension);

/** Evaluates the invariant Laplacian of u at every point; pass iff all zero. */
CheckResult check_mharmonic(const std::string& name, const Expr& u,
                            const std::vector<SamplePoint>& points);

/**
 * Searches the points for a nonzero mixed second derivative d/dz_j d/dzbar_l;
 * such a value certifies that u is not pluriharmonic.
 */
std::optional<std::string> mixed_derivative_witness(const Expr& u,
                                                    const std::vector<SamplePoint>& points);

struct EigenResult {
    bool is_eigen = false;        // all sampled ratios agree (>= 5 valid points)
    GaussianRational lambda;      // the common ratio when is_eigen
    bool in_spectrum = false;     // lambda == j(j - N) for some integer 0 <= j <= N
    int valid_points = 0;         // points where the function was nonzero
    std::string detail;
};

/** Pointwise eigenfunction test for the invariant Laplacian. */
EigenResult check_eigen(const Expr& u, const std::vector<SamplePoint>& points, int dimension);

} // namespace bergball

#endif
