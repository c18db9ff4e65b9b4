#ifndef BERGBALL_QUASIHOM_HPP
#define BERGBALL_QUASIHOM_HPP

#include <string>
#include <vector>

#include "bergball/bipoly.hpp"
#include "bergball/radial.hpp"

namespace bergball {

/** One quasi-homogeneous piece  coeff * z^a zbar^b rho(|z|^2). */
struct QuasiHomTerm {
    MultiIndex a;
    MultiIndex b;
    GaussianRational coeff;
    RadialProfile rho;
};

/**
 * A finite sum of quasi-homogeneous pieces.  This is the symbol class the
 * operator side works with: big enough for every bidegree polynomial, the
 * Mellin preimages (negative powers, log terms), and their products.
 *
 * Construction enforces integrability over the ball: each piece must satisfy
 * |a| + |b| + 2*min_power(rho) > -2N, otherwise NonIntegrable is raised.
 */
class QuasiHomSymbol {
public:
    explicit QuasiHomSymbol(int dimension);

    /** Bidegree polynomials embed termwise (rho = 1); in dimension 1 the
     *  diagonal part of each term folds into the radial factor. */
    static QuasiHomSymbol from_bipoly(const BiPolynomial& p);

    static QuasiHomSymbol constant(int dimension, const GaussianRational& c);

    int dimension() const { return n_; }
    const std::vector<QuasiHomTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const MultiIndex& a, const MultiIndex& b, const GaussianRational& coeff,
                  const RadialProfile& rho);

    QuasiHomSymbol operator+(const QuasiHomSymbol& o) const;
    QuasiHomSymbol operator-(const QuasiHomSymbol& o) const;
    QuasiHomSymbol operator*(const QuasiHomSymbol& o) const;
    QuasiHomSymbol scaled(const GaussianRational& c) const;

    /** Complex conjugate symbol: swaps a and b, conjugates coefficients. */
    QuasiHomSymbol conj() const;

    /** Max over pieces of |a| - |b|: how far a column's row degree can climb. */
    int max_degree_shift() const;

    /**
     * Canonical form: terms are merged by bidegree key, expanded over the
     * radial basis {t^k, t^k log t}, sorted, and zero pieces dropped.  In
     * dimension 1 the diagonal part of every piece first folds into the
     * radial factor (z^a zbar^b rho = z^(a-m) zbar^(b-m) t^m rho with
     * m = min(a,b)), identifying the two normal forms of radial symbols;
     * higher dimensions have no such fold.
     */
    QuasiHomSymbol canonicalized() const;

    /**
     * Expansion back to a bidegree polynomial; requires every radial factor
     * to be a plain polynomial in t (no log, no negative powers).  Raises
     * ImproperFunction otherwise.
     */
    BiPolynomial to_bipoly() const;

    std::string to_string() const;

private:
    int n_;
    std::vector<QuasiHomTerm> terms_;
};

inline QuasiHomSymbol bipoly_to_symbol(const BiPolynomial& p) {
    return QuasiHomSymbol::from_bipoly(p);
}

} // namespace bergball

#endif
