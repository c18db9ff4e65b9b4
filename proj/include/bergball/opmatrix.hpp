#ifndef BERGBALL_OPMATRIX_HPP
#define BERGBALL_OPMATRIX_HPP

#include <map>
#include <optional>
#include <string>

#include "bergball/quasihom.hpp"

namespace bergball {

/**
 * A column-finite operator matrix in the unnormalized monomial basis: the
 * operator sends z^alpha to sum_gamma entry(gamma, alpha) z^gamma.  Entries
 * stay in Q(i) precisely because the basis is unnormalized.
 *
 * Guard bands: columns are exact for |alpha| <= d_in, and every stored row
 * index satisfies |gamma| <= d_out.  compose(outer, inner) demands
 * outer.d_in >= inner.d_out, so composite columns are again exact rather
 * than silently truncated; violations raise GuardBandViolation.
 */
class OperatorMatrix {
public:
    using Column = std::map<MultiIndex, GaussianRational>;

    OperatorMatrix(int dimension, int d_in, int d_out);

    int dimension() const { return n_; }
    int d_in() const { return d_in_; }
    int d_out() const { return d_out_; }

    /** Accumulates; erases the cell again when the sum cancels. */
    void add_entry(const MultiIndex& row, const MultiIndex& col, const GaussianRational& v);
    GaussianRational entry(const MultiIndex& row, const MultiIndex& col) const;

    /** Nonzero columns, keyed by column index alpha (graded-lex). */
    const std::map<MultiIndex, Column>& columns() const { return cols_; }
    bool is_zero() const { return cols_.empty(); }

    OperatorMatrix operator+(const OperatorMatrix& o) const;  // d_in = min, d_out = max
    OperatorMatrix operator-(const OperatorMatrix& o) const;
    OperatorMatrix scaled(const GaussianRational& c) const;

    /** (*this) composed after inner: h |-> (*this)(inner(h)). */
    OperatorMatrix compose(const OperatorMatrix& inner) const;

    /** Exact rank of the compression P_D A P_D (rows and columns of degree
     *  <= D).  Requires d_in >= D.  A lower bound for the rank of A itself. */
    int truncated_rank(int degree) const;

private:
    int n_, d_in_, d_out_;
    std::map<MultiIndex, Column> cols_;
};

/**
 * Toeplitz matrix of a quasi-homogeneous symbol on columns |alpha| <= d_in.
 * For a term (a, b, rho), column alpha has its single entry at
 * gamma = alpha + a - b (when componentwise >= 0), of value
 *
 *   coeff * N * radial_mellin(rho, N+|mu|) * sphere_moment(mu) / monomial_norm_sq(gamma),
 *
 * with mu = alpha + a.  The two-argument form picks the tight output band
 * d_out = max(0, d_in + max degree shift); the three-argument form insists
 * d_out >= d_in + max degree shift.
 */
OperatorMatrix toeplitz_matrix(const QuasiHomSymbol& sym, int d_in);
OperatorMatrix toeplitz_matrix(const QuasiHomSymbol& sym, int d_in, int d_out);

/** x (tensor) y : h |-> <h, y> x, for holomorphic polynomials x, y. */
OperatorMatrix rank_one_matrix(const BiPolynomial& x, const BiPolynomial& y, int d_in);

/** T_{phi psi} - T_phi T_psi on columns |alpha| <= degree, guard bands handled
 *  internally.  Equals the Hankel product pairing of conj(phi) and psi. */
OperatorMatrix hankel_product(const QuasiHomSymbol& phi, const QuasiHomSymbol& psi, int degree);

struct MatrixEntryDiff {
    MultiIndex row, col;
    GaussianRational lhs, rhs;
    std::string to_string() const;
};

/**
 * Exact comparison of whole columns for all |alpha| <= degree; both matrices
 * must satisfy d_in >= degree (GuardBandViolation otherwise).  Returns the
 * first differing entry in graded-lex order, or nothing when equal.
 */
std::optional<MatrixEntryDiff> operator_difference(const OperatorMatrix& a,
                                                   const OperatorMatrix& b, int degree);
bool operator_equal(const OperatorMatrix& a, const OperatorMatrix& b, int degree);

} // namespace bergball

#endif
