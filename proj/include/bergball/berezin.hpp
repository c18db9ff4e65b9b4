#ifndef BERGBALL_BEREZIN_HPP
#define BERGBALL_BEREZIN_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bergball/quasihom.hpp"

namespace bergball {

/**
 * Truncated coefficient expansion sum c_{alpha,beta} z^alpha zbar^beta,
 * complete for |alpha| + |beta| <= degree.  Every stored coefficient is
 * exact: raising the degree never changes an already-stored value.
 */
class CoeffSeries {
public:
    CoeffSeries(int dimension, int degree);

    int dimension() const { return n_; }
    int degree() const { return degree_; }

    void set(const MultiIndex& alpha, const MultiIndex& beta, const GaussianRational& v);
    GaussianRational coeff(const MultiIndex& alpha, const MultiIndex& beta) const;
    const std::map<TermKey, GaussianRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::string to_string() const;

private:
    int n_, degree_;
    std::map<TermKey, GaussianRational> terms_;
};

/** Coefficient expansion of the Berezin transform of a symbol, exact to the
 *  stated degree. */
CoeffSeries berezin_series(const QuasiHomSymbol& sym, int degree);

/** The coefficients a bidegree polynomial already has, restricted to the band. */
CoeffSeries series_of_bipoly(const BiPolynomial& p, int degree);

/** Berezin transform of x (tensor) y in closed form:
 *  (1 - |z|^2)^(N+1) * x(z) * conj(y(z)), an exact bidegree polynomial. */
BiPolynomial berezin_rank_one(const BiPolynomial& x, const BiPolynomial& y);

/** Exact integral of a symbol over the ball (equals its Berezin value at 0). */
GaussianRational integral_over_ball(const QuasiHomSymbol& sym);

struct SeriesAnalysis {
    /** Max over band splits r of the exact rank of the fully-known block
     *  {|alpha| <= r} x {|beta| <= degree - r}: a certified lower bound for
     *  the rank of the full coefficient matrix. */
    int rank_lower_bound = 0;
    /** Terms with |alpha| >= 1 and |beta| >= 1 and nonzero coefficient;
     *  empty = pluriharmonic as far as the band can see. */
    std::vector<TermKey> pluriharmonic_violations;
};

SeriesAnalysis series_analyze(const CoeffSeries& cs);

struct SeriesEntryDiff {
    TermKey key;
    GaussianRational lhs, rhs;
    std::string to_string() const;
};

/** First differing coefficient of two series over the smaller of the two
 *  bands, or nothing when they agree there. */
std::optional<SeriesEntryDiff> series_difference(const CoeffSeries& a, const CoeffSeries& b);

} // namespace bergball

#endif
