#ifndef BERGBALL_JET_HPP
#define BERGBALL_JET_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bergball/bipoly.hpp"
#include "bergball/multiindex.hpp"
#include "bergball/scalar.hpp"

namespace bergball {

/**
 * Formal variable layout for exact point evaluation in dimension N.  The
 * expression language has 4N independent variables:
 *
 *   z_1..z_N     ids 0..N-1       first point group
 *   w_1..w_N     ids N..2N-1      formal conjugates of z
 *   xi_1..xi_N   ids 2N..3N-1     second point group
 *   eta_1..eta_N ids 3N..4N-1     formal conjugates of xi
 *
 * On a diagonal sample point w = conj(z) and eta = conj(xi), so jets in these
 * variables extract mixed Wirtinger derivatives of actual functions on the
 * ball.  All j arguments below are 1-based, matching MultiIndex::unit.
 */
int var_z(int dimension, int j);
int var_w(int dimension, int j);
int var_xi(int dimension, int j);
int var_eta(int dimension, int j);

/** Maps a variable id to its formal conjugate (z <-> w, xi <-> eta). */
int conjugate_var(int dimension, int id);

class ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

/**
 * Immutable expression tree over the 4N formal variables with constants in
 * Q(i).  Reciprocal nodes are the only partial operation: they raise
 * PoleAtPoint during evaluation when the denominator vanishes at the point.
 */
class ExprNode {
public:
    enum class Kind { Const, Var, Add, Mul, Neg, Recip, IntPow };

    Kind kind;
    GaussianRational value;  // Const
    int var_id = -1;         // Var
    Expr left, right;        // children (right only for Add/Mul)
    int exponent = 0;        // IntPow; negative exponents allowed

private:
    friend Expr expr_const(const GaussianRational&);
    friend Expr expr_var(int);
    friend Expr expr_add(const Expr&, const Expr&);
    friend Expr expr_mul(const Expr&, const Expr&);
    friend Expr expr_neg(const Expr&);
    friend Expr expr_recip(const Expr&);
    friend Expr expr_pow(const Expr&, int);
    ExprNode() : kind(Kind::Const) {}
};

Expr expr_const(const GaussianRational& c);
Expr expr_var(int id);
Expr expr_add(const Expr& a, const Expr& b);
Expr expr_mul(const Expr& a, const Expr& b);
Expr expr_neg(const Expr& a);
Expr expr_recip(const Expr& a);
Expr expr_pow(const Expr& a, int k);

inline Expr operator+(const Expr& a, const Expr& b) { return expr_add(a, b); }
inline Expr operator-(const Expr& a, const Expr& b) { return expr_add(a, expr_neg(b)); }
inline Expr operator*(const Expr& a, const Expr& b) { return expr_mul(a, b); }

/** Swaps every variable with its formal conjugate and conjugates constants. */
Expr expr_conjugate(const Expr& e, int dimension);

/** The polynomial p in z, zbar as an expression over (z, w) variables. */
Expr expr_of_bipoly(const BiPolynomial& p);

/**
 * An assignment of Q(i) values to all 4N formal variables.  Diagonal points
 * (w = conj z, eta = conj xi) are the ones that represent genuine points of
 * the ball; for those the squared norms must stay strictly below 1.
 */
class SamplePoint {
public:
    SamplePoint(int dimension, std::vector<GaussianRational> values, bool diagonal);

    /** Diagonal point from the z and xi coordinates (xi may be empty = 0). */
    static SamplePoint diagonal(const std::vector<GaussianRational>& z,
                                const std::vector<GaussianRational>& xi);

    int dimension() const { return n_; }
    bool is_diagonal() const { return diagonal_; }
    const GaussianRational& value(int var_id) const;
    std::vector<GaussianRational> group_z() const;
    std::vector<GaussianRational> group_w() const;

    std::string to_string() const;

private:
    int n_;
    std::vector<GaussianRational> values_;
    bool diagonal_;
};

/**
 * Deterministic rejection sampler: every coordinate is (p + iq)/16 with
 * integer p, q, and each point group is kept inside |z| <= 3/4 (so all the
 * registry kernels stay pole-free).  Identical seeds give identical points
 * on every platform; no std distribution objects are involved.
 */
std::vector<SamplePoint> sample_points(int dimension, int count, unsigned long long seed);

/**
 * Truncated Taylor expansion at a point: coefficients are exact rationals
 * keyed by the displacement multi-index over the 4N variables.  `order` is
 * the valid order: every stored coefficient of total degree <= order is the
 * true Taylor coefficient.  Derivatives lower the valid order by one,
 * products take the minimum, so exhaustion is loud, never silent.
 */
class Jet {
public:
    Jet(int nvars, int order);

    static Jet constant(int nvars, int order, const GaussianRational& c);
    static Jet variable(int nvars, int order, int var_id, const GaussianRational& base,
                        bool active);

    int nvars() const { return nvars_; }
    int order() const { return order_; }
    bool is_zero() const { return coeffs_.empty(); }

    /** Value at the base point (coefficient of the zero index). */
    GaussianRational value() const;
    /** Taylor coefficient at gamma (zero when absent). */
    GaussianRational coeff(const MultiIndex& gamma) const;
    /** Mixed partial derivative at the point: coeff(gamma) * gamma!. */
    GaussianRational derivative_value(const MultiIndex& gamma) const;

    Jet operator+(const Jet& o) const;
    Jet operator-(const Jet& o) const;
    Jet operator*(const Jet& o) const;
    Jet operator-() const;
    Jet scaled(const GaussianRational& c) const;

    /** Geometric-series inverse; PoleAtPoint when the value vanishes. */
    Jet reciprocal() const;
    /** Integer power; negative exponents go through reciprocal(). */
    Jet pow(int k) const;
    /** d/d(var_id); the valid order drops by one. */
    Jet derivative(int var_id) const;

private:
    int nvars_;
    int order_;
    std::map<MultiIndex, GaussianRational> coeffs_;

    void add(const MultiIndex& gamma, const GaussianRational& c);
};

/** Active-variable masks: expansion happens only along active directions. */
std::vector<bool> active_all(int dimension);
std::vector<bool> active_group_z(int dimension);
std::vector<bool> active_group_xi(int dimension);

/**
 * Exact jet of the expression at the point.  Variables outside the active
 * mask are frozen at their point values (their displacement directions are
 * never expanded), which keeps identity verification cheap.
 */
Jet eval_jet(const Expr& e, const SamplePoint& pt, int order, const std::vector<bool>& active);
Jet eval_jet(const Expr& e, const SamplePoint& pt, int order);

/** Which point group a differential operator acts on. */
enum class VarGroup { Z, Xi };

/** E f = sum_j z_j d/dz_j f (radial derivative in the group's holomorphic vars). */
Jet op_E(const Jet& f, const SamplePoint& pt, VarGroup g);
/** Ebar f = sum_j w_j d/dw_j f. */
Jet op_Ebar(const Jet& f, const SamplePoint& pt, VarGroup g);
/** Delta f = sum_j d^2 f / dz_j dw_j. */
Jet op_Delta(const Jet& f, const SamplePoint& pt, VarGroup g);
/** (|E + s|^2 - Delta) f = (E + s)(Ebar + s) f - Delta f; costs two orders. */
Jet op_shifted_pair(const Jet& f, const SamplePoint& pt, VarGroup g, const Rational& s);
/** Invariant Laplacian (1 - |z|^2)(Delta - E Ebar) f; costs two orders. */
Jet op_inv_laplacian(const Jet& f, const SamplePoint& pt, VarGroup g);

} // namespace bergball

#endif
