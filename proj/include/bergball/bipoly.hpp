#ifndef BERGBALL_BIPOLY_HPP
#define BERGBALL_BIPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "bergball/multiindex.hpp"
#include "bergball/scalar.hpp"

namespace bergball {

/**
 * Key of one bidegree term z^alpha zbar^beta.  Ordered by total degree
 * |alpha| + |beta|, then graded-lex on alpha, then on beta; this is the
 * canonical term order used for printing and serialization.
 */
struct TermKey {
    MultiIndex alpha;
    MultiIndex beta;

    bool operator==(const TermKey& o) const { return alpha == o.alpha && beta == o.beta; }
    bool operator<(const TermKey& o) const {
        int da = alpha.order() + beta.order();
        int db = o.alpha.order() + o.beta.order();
        if (da != db) return da < db;
        if (!(alpha == o.alpha)) return alpha < o.alpha;
        return beta < o.beta;
    }
};

/**
 * A polynomial in z_1..z_N and zbar_1..zbar_N with coefficients in Q(i),
 * stored sparsely as (alpha, beta) -> coefficient.  All arithmetic reduces
 * eagerly: zero coefficients never survive an operation.
 *
 * zbar is formal here; on the diagonal w = conj(z) these are the actual
 * smooth polynomials on C^N the calculus manipulates.
 */
class BiPolynomial {
public:
    using TermMap = std::map<TermKey, GaussianRational>;

    explicit BiPolynomial(int dimension);

    static BiPolynomial constant(int dimension, const GaussianRational& c);
    static BiPolynomial monomial(const MultiIndex& alpha, const MultiIndex& beta,
                                 const GaussianRational& c);
    static BiPolynomial variable_z(int dimension, int j);     // z_j, 1-based
    static BiPolynomial variable_zbar(int dimension, int j);  // zbar_j, 1-based
    static BiPolynomial norm_sq(int dimension);               // |z|^2 = sum z_j zbar_j
    static BiPolynomial one_minus_norm_sq(int dimension);     // 1 - |z|^2

    int dimension() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    /** Max of |alpha| + |beta| over terms; -1 for the zero polynomial. */
    int total_degree() const;

    GaussianRational coefficient(const MultiIndex& alpha, const MultiIndex& beta) const;
    GaussianRational constant_term() const;

    /** Adds c * z^alpha zbar^beta, erasing the slot if it cancels to zero. */
    void add_term(const MultiIndex& alpha, const MultiIndex& beta, const GaussianRational& c);

    BiPolynomial operator+(const BiPolynomial& o) const;
    BiPolynomial operator-(const BiPolynomial& o) const;
    BiPolynomial operator*(const BiPolynomial& o) const;
    BiPolynomial operator-() const;
    BiPolynomial scaled(const GaussianRational& c) const;
    BiPolynomial pow(int k) const;

    bool operator==(const BiPolynomial& o) const;
    bool operator!=(const BiPolynomial& o) const { return !(*this == o); }

    /** Complex conjugate: swaps alpha with beta and conjugates coefficients. */
    BiPolynomial conj() const;

    /** True when no term involves zbar (resp. z). */
    bool is_holomorphic() const;
    bool is_antiholomorphic() const;

    /** d/dz_j (resp. d/dzbar_j), 1-based. */
    BiPolynomial derivative_z(int j) const;
    BiPolynomial derivative_zbar(int j) const;

    /**
     * Evaluate with z_j = z[j] and zbar_j = w[j].  The caller chooses whether
     * w is the actual conjugate of z (the diagonal) or an independent point.
     */
    GaussianRational eval(const std::vector<GaussianRational>& z,
                          const std::vector<GaussianRational>& w) const;

    std::string to_string() const;

private:
    int n_;
    TermMap terms_;
};

GaussianRational pow(const GaussianRational& x, int k);

} // namespace bergball

#endif
