#include "bergball/mellin.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "bergball/combinatorics.hpp"

namespace bergball {

namespace {

void check_preimage_preconditions(const MultiIndex& alpha, const MultiIndex& beta, int ell,
                                  int dimension) {
    if (alpha.dimension() != dimension || beta.dimension() != dimension)
        throw DimensionMismatch("index dimension does not match the ball dimension");
    if (ell < 0) throw PreconditionViolation("the (1-|z|^2) exponent must be nonnegative");
    if (beta.order() > alpha.order())
        throw PreconditionViolation("construction requires |beta| <= |alpha|");
    if (alpha.order() + beta.order() + 2 * ell > 2 * dimension + 1)
        throw DegreeTooLarge("total degree " +
                             std::to_string(alpha.order() + beta.order() + 2 * ell) +
                             " exceeds the admissible ceiling " +
                             std::to_string(2 * dimension + 1));
}

/** Rising factorial (x)_k = x (x+1) ... (x+k-1). */
Rational rising(int x, int k) {
    Rational r(1);
    for (int i = 0; i < k; ++i) r *= Rational(x + i);
    return r;
}

/** binom(beta, mu) = prod_j binom(beta_j, mu_j). */
Integer index_binomial(const MultiIndex& beta, const MultiIndex& mu) {
    Integer b(1);
    for (int j = 0; j < beta.dimension(); ++j) b *= binomial(beta[j], mu[j]);
    return b;
}

/** alpha!/(alpha-mu)! = prod_j alpha_j (alpha_j - 1) ... (alpha_j - mu_j + 1). */
Integer falling_product(const MultiIndex& alpha, const MultiIndex& mu) {
    Integer f(1);
    for (int j = 0; j < alpha.dimension(); ++j)
        for (int i = 0; i < mu[j]; ++i) f *= Integer(alpha[j] - i);
    return f;
}

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

} // namespace

RationalFunctionQ phi_hat(const MultiIndex& alpha, const MultiIndex& beta, int ell,
                          int dimension) {
    check_preimage_preconditions(alpha, beta, ell, dimension);
    const int a = alpha.order(), b = beta.order();
    // Gamma(N+1)/Gamma(N+1-ell) = N (N-1) ... (N-ell+1)
    Rational scale(1);
    for (int i = 0; i < ell; ++i) scale *= Rational(dimension - i);

    UnivariatePoly num(scale);
    UnivariatePoly den(Rational(1));
    if (a == 0) {
        // double pole at zero once ell >= 1: 1/(zeta^2 (zeta-1) ... (zeta-ell+1))
        den = den * UnivariatePoly::variable();
        for (int j = 0; j < ell; ++j)
            den = den * UnivariatePoly::linear(Rational(-j), Rational(1));
    } else {
        // Gamma(zeta)/Gamma(zeta+1-a) = (zeta-1) ... (zeta-a+1)
        for (int i = 1; i <= a - 1; ++i)
            num = num * UnivariatePoly::linear(Rational(-i), Rational(1));
        // Gamma(zeta+1-a-b-ell)/Gamma(zeta+1-b) = 1/((zeta-b) ... (zeta+1-a-b-ell))
        for (int j = 0; j < a + ell; ++j)
            den = den * UnivariatePoly::linear(Rational(-(b + j)), Rational(1));
    }
    return RationalFunctionQ(num, den);
}

RadialProfile invert_mellin(const PartialFractionForm& pf) {
    if (!pf.polynomial.is_zero())
        throw ImproperFunction("polynomial part " + pf.polynomial.to_string("zeta") +
                               " has no inverse Mellin transform on (0,1]");
    RadialProfile rho;
    for (const PoleTerm& t : pf.poles) {
        if (t.order == 1)
            rho.add_power(-t.pole, t.coeff);
        else
            rho.add_log_power(-t.pole, -t.coeff);
    }
    return rho;
}

QuasiHomSymbol base_symbol(const MultiIndex& alpha, const MultiIndex& beta, int ell,
                           int dimension) {
    RadialProfile phi = invert_mellin(partial_fractions(phi_hat(alpha, beta, ell, dimension)));
    QuasiHomSymbol u(dimension);
    u.add_term(beta, alpha, GaussianRational(1), phi);
    return u;
}

BiPolynomial derivative_formula_polynomial(const MultiIndex& alpha, const MultiIndex& beta,
                                           int ell, int dimension) {
    check_preimage_preconditions(alpha, beta, ell, dimension);
    const int b = beta.order();
    const int m = dimension + 1 - b - ell;
    BiPolynomial one_minus_t = BiPolynomial::one_minus_norm_sq(dimension);
    BiPolynomial total(dimension);
    for (const MultiIndex& mu : submultiindices(alpha.meet(beta))) {
        Rational c = Rational(index_binomial(beta, mu)) * Rational(falling_product(alpha, mu)) *
                     rising(m, b - mu.order()) / rising(m, b);
        BiPolynomial term = BiPolynomial::monomial(beta - mu, alpha - mu, GaussianRational(c));
        total = total + term * one_minus_t.pow(ell + mu.order());
    }
    return total;
}

namespace {

struct PreimageKey {
    int dimension, ell;
    std::vector<int> alpha, beta;
    bool operator<(const PreimageKey& o) const {
        return std::tie(dimension, ell, alpha, beta) <
               std::tie(o.dimension, o.ell, o.alpha, o.beta);
    }
};

std::map<PreimageKey, QuasiHomSymbol>& preimage_cache() {
    static std::map<PreimageKey, QuasiHomSymbol> cache;
    return cache;
}

std::mutex& preimage_mutex() {
    static std::mutex m;
    return m;
}

} // namespace

QuasiHomSymbol preimage_monomial(const MultiIndex& alpha, const MultiIndex& beta, int ell,
                                 int dimension) {
    if (beta.order() > alpha.order())
        return preimage_monomial(beta, alpha, ell, dimension).conj();
    check_preimage_preconditions(alpha, beta, ell, dimension);

    PreimageKey key{dimension, ell, alpha.parts(), beta.parts()};
    {
        std::lock_guard<std::mutex> lock(preimage_mutex());
        auto it = preimage_cache().find(key);
        if (it != preimage_cache().end()) return it->second;
    }

    QuasiHomSymbol u = base_symbol(alpha, beta, ell, dimension);
    const int b = beta.order();
    const int m = dimension + 1 - b - ell;
    for (const MultiIndex& mu : submultiindices(alpha.meet(beta))) {
        if (mu.order() == 0) continue;
        Rational c = Rational(index_binomial(beta, mu)) * Rational(falling_product(alpha, mu)) *
                     rising(m, b - mu.order()) / rising(m, b);
        if (c == 0) continue;
        QuasiHomSymbol correction =
            preimage_monomial(alpha - mu, beta - mu, ell + mu.order(), dimension);
        u = u - correction.scaled(GaussianRational(c));
    }

    std::lock_guard<std::mutex> lock(preimage_mutex());
    preimage_cache().emplace(key, u);
    return u;
}

RangeDecision range_decision(const BiPolynomial& f) {
    const int n = f.dimension();
    RangeDecision out;
    out.degree_bound = 2 * n - 1;
    out.witness = QuasiHomSymbol(n);
    for (int j = 1; j <= n; ++j) {
        for (int l = 1; l <= n; ++l) {
            BiPolynomial d = f.derivative_z(j).derivative_zbar(l);
            if (d.total_degree() > out.degree_bound) {
                out.in_range = false;
                out.deriv_j = j;
                out.deriv_l = l;
                out.witness_degree = d.total_degree();
                return out;
            }
        }
    }
    out.in_range = true;
    QuasiHomSymbol u(n);
    for (const auto& [k, c] : f.terms()) {
        if (k.alpha.is_zero() || k.beta.is_zero()) {
            // pluriharmonic piece: fixed by the averaging transform
            u.add_term(k.alpha, k.beta, c, RadialProfile::one());
        } else {
            // mixed monomial z^alpha zbar^beta: preimage of zbar^(k.beta) z^(k.alpha)
            u = u + preimage_monomial(k.beta, k.alpha, 0, n).scaled(c);
        }
    }
    out.witness = u;
    return out;
}

QuasiHomSymbol product_symbol(const MultiIndex& beta, const MultiIndex& alpha, int dimension) {
    if (alpha.dimension() != dimension || beta.dimension() != dimension)
        throw DimensionMismatch("index dimension does not match the ball dimension");
    if (alpha.order() < 1 || beta.order() < 1)
        throw PreconditionViolation("both factors must be nonconstant");
    BiPolynomial target = BiPolynomial::monomial(beta, alpha, GaussianRational(1));
    RangeDecision decision = range_decision(target);
    if (!decision.in_range)
        throw NotRepresentable(
            "mixed derivative d/dz_" + std::to_string(decision.deriv_j) + " d/dzbar_" +
                std::to_string(decision.deriv_l) + " of the product's averaging target has degree " +
                std::to_string(decision.witness_degree) + " > " +
                std::to_string(decision.degree_bound),
            decision.deriv_j, decision.deriv_l, decision.witness_degree, decision.degree_bound);
    return decision.witness;
}

} // namespace bergball
