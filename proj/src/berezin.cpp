#include "bergball/berezin.hpp"

#include <algorithm>
#include <set>

#include "bergball/combinatorics.hpp"
#include "bergball/linalg.hpp"

namespace bergball {

CoeffSeries::CoeffSeries(int dimension, int degree) : n_(dimension), degree_(degree) {
    if (dimension < 1) throw DimensionMismatch("series dimension must be >= 1");
    if (degree < 0) throw PreconditionViolation("series degree must be nonnegative");
}

void CoeffSeries::set(const MultiIndex& alpha, const MultiIndex& beta,
                      const GaussianRational& v) {
    if (alpha.dimension() != n_ || beta.dimension() != n_)
        throw DimensionMismatch("series key does not match dimension");
    if (alpha.order() + beta.order() > degree_)
        throw PreconditionViolation("series key of degree " +
                                    std::to_string(alpha.order() + beta.order()) +
                                    " outside band " + std::to_string(degree_));
    TermKey k{alpha, beta};
    if (v.is_zero())
        terms_.erase(k);
    else
        terms_[k] = v;
}

GaussianRational CoeffSeries::coeff(const MultiIndex& alpha, const MultiIndex& beta) const {
    auto it = terms_.find(TermKey{alpha, beta});
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

std::string CoeffSeries::to_string() const {
    BiPolynomial p(n_);
    for (const auto& [k, c] : terms_) p.add_term(k.alpha, k.beta, c);
    return p.to_string();
}

namespace {

/** All multi-indices mu <= bound componentwise, by odometer. */
std::vector<MultiIndex> submultiindices(const MultiIndex& bound) {
    std::vector<MultiIndex> out;
    MultiIndex mu(bound.dimension());
    for (;;) {
        out.push_back(mu);
        int j = 0;
        while (j < bound.dimension() && mu[j] == bound[j]) {
            mu[j] = 0;
            ++j;
        }
        if (j == bound.dimension()) break;
        ++mu[j];
    }
    return out;
}

/** C_alpha = (N+|alpha|)! / (N! alpha!), the squared-norm reciprocal. */
Rational kernel_coefficient(const MultiIndex& alpha, int n) {
    return Rational(factorial(n + alpha.order())) /
           Rational(factorial(n) * alpha.factorial());
}

/** M(alpha, beta) = integral of the symbol against z^alpha zbar^beta monomial
 *  pairing: nonzero term contributions need a + beta = b + alpha. */
GaussianRational moment_pairing(const QuasiHomSymbol& sym, const MultiIndex& alpha,
                                const MultiIndex& beta) {
    const int n = sym.dimension();
    GaussianRational total(0);
    for (const QuasiHomTerm& t : sym.terms()) {
        if (t.a + beta != t.b + alpha) continue;
        MultiIndex mu = t.a + beta;
        total = total + t.coeff * GaussianRational(Rational(n) *
                                                   radial_mellin(t.rho, n + mu.order()) *
                                                   sphere_moment(mu));
    }
    return total;
}

} // namespace

CoeffSeries berezin_series(const QuasiHomSymbol& sym, int degree) {
    const int n = sym.dimension();
    CoeffSeries cs(n, degree);
    std::map<TermKey, GaussianRational> pairing_cache;
    auto pairing = [&](const MultiIndex& a, const MultiIndex& b) {
        TermKey k{a, b};
        auto it = pairing_cache.find(k);
        if (it != pairing_cache.end()) return it->second;
        GaussianRational v = moment_pairing(sym, a, b);
        pairing_cache.emplace(k, v);
        return v;
    };
    for (int total = 0; total <= degree; ++total) {
        for (int da = 0; da <= total; ++da) {
            for (const MultiIndex& alpha : multiindices_of_order(n, da)) {
                for (const MultiIndex& beta : multiindices_of_order(n, total - da)) {
                    GaussianRational c(0);
                    for (const MultiIndex& mu : submultiindices(alpha.meet(beta))) {
                        Integer comb = binomial(n + 1, mu.order()) * multinomial(mu);
                        if (comb == 0) continue;
                        if (mu.order() % 2 != 0) comb = -comb;
                        MultiIndex am = alpha - mu, bm = beta - mu;
                        Rational weight = Rational(comb) * kernel_coefficient(am, n) *
                                          kernel_coefficient(bm, n);
                        c = c + pairing(am, bm) * GaussianRational(weight);
                    }
                    cs.set(alpha, beta, c);
                }
            }
        }
    }
    return cs;
}

CoeffSeries series_of_bipoly(const BiPolynomial& p, int degree) {
    CoeffSeries cs(p.dimension(), degree);
    for (const auto& [k, c] : p.terms())
        if (k.alpha.order() + k.beta.order() <= degree) cs.set(k.alpha, k.beta, c);
    return cs;
}

BiPolynomial berezin_rank_one(const BiPolynomial& x, const BiPolynomial& y) {
    if (x.dimension() != y.dimension())
        throw DimensionMismatch("tensor factors of different dimension");
    if (!x.is_holomorphic() || !y.is_holomorphic())
        throw NotHolomorphic("rank-one factors must be holomorphic polynomials");
    const int n = x.dimension();
    return BiPolynomial::one_minus_norm_sq(n).pow(n + 1) * x * y.conj();
}

GaussianRational integral_over_ball(const QuasiHomSymbol& sym) {
    const int n = sym.dimension();
    GaussianRational total(0);
    for (const QuasiHomTerm& t : sym.terms()) {
        if (t.a != t.b) continue; // off-diagonal monomials integrate to zero
        total = total + t.coeff * GaussianRational(Rational(n) *
                                                   radial_mellin(t.rho, n + t.a.order()) *
                                                   sphere_moment(t.a));
    }
    return total;
}

SeriesAnalysis series_analyze(const CoeffSeries& cs) {
    SeriesAnalysis out;
    const int n = cs.dimension(), degree = cs.degree();
    for (int split = 0; split <= degree; ++split) {
        std::vector<MultiIndex> rows = multiindices_up_to(n, split);
        std::vector<MultiIndex> cols = multiindices_up_to(n, degree - split);
        std::vector<std::vector<GaussianRational>> m(
            rows.size(), std::vector<GaussianRational>(cols.size(), GaussianRational(0)));
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) m[i][j] = cs.coeff(rows[i], cols[j]);
        out.rank_lower_bound = std::max(out.rank_lower_bound, exact_rank(std::move(m)));
    }
    for (const auto& [k, c] : cs.terms())
        if (k.alpha.order() >= 1 && k.beta.order() >= 1) out.pluriharmonic_violations.push_back(k);
    return out;
}

std::string SeriesEntryDiff::to_string() const {
    return "coefficient (" + key.alpha.to_string() + ", " + key.beta.to_string() + "): " +
           to_text(lhs) + " vs " + to_text(rhs);
}

std::optional<SeriesEntryDiff> series_difference(const CoeffSeries& a, const CoeffSeries& b) {
    if (a.dimension() != b.dimension())
        throw DimensionMismatch("comparing series of different dimension");
    const int degree = std::min(a.degree(), b.degree());
    std::set<TermKey> support;
    for (const auto& [k, c] : a.terms())
        if (k.alpha.order() + k.beta.order() <= degree) support.insert(k);
    for (const auto& [k, c] : b.terms())
        if (k.alpha.order() + k.beta.order() <= degree) support.insert(k);
    for (const TermKey& k : support) {
        GaussianRational va = a.coeff(k.alpha, k.beta), vb = b.coeff(k.alpha, k.beta);
        if (va != vb) return SeriesEntryDiff{k, va, vb};
    }
    return std::nullopt;
}

} // namespace bergball
