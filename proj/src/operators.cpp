#include "bergball/operators.hpp"

#include "bergball/combinatorics.hpp"
#include "bergball/errors.hpp"

namespace bergball {

BiPolynomial apply_first_order(FirstOrder op, const BiPolynomial& p) {
    int n = p.dimension();
    BiPolynomial r(n);
    for (const auto& [k, c] : p.terms()) {
        switch (op) {
            case FirstOrder::E:
                r.add_term(k.alpha, k.beta, c * GaussianRational(k.alpha.order()));
                break;
            case FirstOrder::Ebar:
                r.add_term(k.alpha, k.beta, c * GaussianRational(k.beta.order()));
                break;
            case FirstOrder::Delta:
                for (int j = 0; j < n; ++j) {
                    int a = k.alpha[j], b = k.beta[j];
                    if (a == 0 || b == 0) continue;
                    MultiIndex alpha = k.alpha, beta = k.beta;
                    alpha[j] -= 1;
                    beta[j] -= 1;
                    r.add_term(alpha, beta, c * GaussianRational(Rational(a) * Rational(b)));
                }
                break;
        }
    }
    return r;
}

BiPolynomial apply_shifted_pair(const Rational& s, const BiPolynomial& p) {
    int n = p.dimension();
    BiPolynomial r(n);
    for (const auto& [k, c] : p.terms()) {
        // (|alpha| + s)(|beta| + s) on the diagonal part
        Rational factor = (Rational(k.alpha.order()) + s) * (Rational(k.beta.order()) + s);
        r.add_term(k.alpha, k.beta, c * GaussianRational(factor));
        // minus Delta
        for (int j = 0; j < n; ++j) {
            int a = k.alpha[j], b = k.beta[j];
            if (a == 0 || b == 0) continue;
            MultiIndex alpha = k.alpha, beta = k.beta;
            alpha[j] -= 1;
            beta[j] -= 1;
            r.add_term(alpha, beta, -(c * GaussianRational(Rational(a) * Rational(b))));
        }
    }
    return r;
}

BiPolynomial apply_inv_laplacian(const BiPolynomial& p) {
    BiPolynomial delta = apply_first_order(FirstOrder::Delta, p);
    BiPolynomial ee = apply_first_order(FirstOrder::E, apply_first_order(FirstOrder::Ebar, p));
    return BiPolynomial::one_minus_norm_sq(p.dimension()) * (delta - ee);
}

UnivariatePoly pm_polynomial(int m, int dimension) {
    if (m < 0) throw PreconditionViolation("pm_polynomial needs m >= 0");
    UnivariatePoly p{Rational(1)};
    for (int j = 0; j <= m; ++j) {
        // factor j(j-N) - t
        p = p * UnivariatePoly::linear(Rational(j) * Rational(j - dimension), Rational(-1));
    }
    Integer mf = factorial(m);
    return p.scaled(Rational(1, mf * mf));
}

BiPolynomial exact_divide_one_minus_norm_sq(const BiPolynomial& p, int k) {
    if (k < 0) throw PreconditionViolation("negative divisor power");
    int n = p.dimension();
    BiPolynomial result = p;
    for (int round = 0; round < k; ++round) {
        if (result.is_zero()) continue;
        // Divide by (1 - |z|^2), whose lowest term is the constant 1: peel the
        // minimal term of the remainder into the quotient, subtract its full
        // multiple, and insist the quotient degree stays <= deg - 2.
        int cap = result.total_degree() - 2;
        BiPolynomial quotient(n);
        BiPolynomial rem = result;
        while (!rem.is_zero()) {
            auto it = rem.terms().begin();
            TermKey key = it->first;
            GaussianRational c = it->second;
            if (key.alpha.order() + key.beta.order() > cap)
                throw DivisionFailure(
                    "polynomial not divisible by (1-|z|^2); remainder witness " +
                    rem.to_string());
            quotient.add_term(key.alpha, key.beta, c);
            // rem -= c z^a zbar^b (1 - |z|^2)
            rem.add_term(key.alpha, key.beta, -c);
            for (int j = 1; j <= n; ++j) {
                MultiIndex e = MultiIndex::unit(n, j);
                rem.add_term(key.alpha + e, key.beta + e, c);
            }
        }
        result = quotient;
    }
    return result;
}

BiPolynomial apply_D(int m, const BiPolynomial& p, DMode mode) {
    if (m < 0) throw PreconditionViolation("apply_D needs m >= 0");
    int n = p.dimension();
    BiPolynomial acc = p;
    switch (mode) {
        case DMode::Chain:
            for (int s = 0; s <= m; ++s) acc = apply_shifted_pair(Rational(s), acc);
            return acc;
        case DMode::PmForm:
            // prod_{j=0}^m (j(j-N) - invariant Laplacian), i.e. (m!)^2 p_m
            for (int j = 0; j <= m; ++j)
                acc = acc.scaled(GaussianRational(Rational(j) * Rational(j - n))) -
                      apply_inv_laplacian(acc);
            return exact_divide_one_minus_norm_sq(acc, m + 1);
    }
    throw PreconditionViolation("unknown apply_D mode");
}

CheckResult verify_h_recursion(int j, int dimension) {
    std::string name = "h-recursion j=" + std::to_string(j) + " N=" + std::to_string(dimension);
    if (j < 1) throw PreconditionViolation("h-recursion needs j >= 1");
    BiPolynomial h = BiPolynomial::one_minus_norm_sq(dimension);
    BiPolynomial lhs = h.pow(j + 1).scaled(GaussianRational(Rational(j) * Rational(j)));
    BiPolynomial hj = h.pow(j);
    BiPolynomial rhs =
        hj.scaled(GaussianRational(Rational(j) * Rational(j - dimension))) - apply_inv_laplacian(hj);
    if (lhs == rhs) return pass_check(name, Label::ExactProof);
    BiPolynomial diff = lhs - rhs;
    return fail_check(name, "difference " + diff.to_string());
}

CheckResult verify_do_identity(int m, int dimension, int degree_bound) {
    std::string name = "operator-product identity m=" + std::to_string(m) +
                       " N=" + std::to_string(dimension) +
                       " deg<=" + std::to_string(degree_bound);
    for (int d = 0; d <= degree_bound; ++d) {
        for (const auto& alpha : multiindices_up_to(dimension, d)) {
            for (const auto& beta : multiindices_of_order(dimension, d - alpha.order())) {
                BiPolynomial q = BiPolynomial::monomial(alpha, beta, GaussianRational(1));
                BiPolynomial chain = apply_D(m, q, DMode::Chain);
                BiPolynomial pm(dimension);
                try {
                    pm = apply_D(m, q, DMode::PmForm);
                } catch (const DivisionFailure& e) {
                    return fail_check(name, "division failure on z^" + alpha.to_string() +
                                                " zbar^" + beta.to_string() + ": " + e.what());
                }
                if (!(chain == pm)) {
                    return fail_check(name, "mismatch on z^" + alpha.to_string() + " zbar^" +
                                                beta.to_string() + ": chain " + chain.to_string() +
                                                " vs pm-form " + pm.to_string());
                }
            }
        }
    }
    return pass_check(name, Label::VerifiedAtDegree, degree_bound);
}

bool is_pluriharmonic(const BiPolynomial& p, std::optional<TermKey>* witness) {
    for (const auto& [k, c] : p.terms()) {
        if (k.alpha.order() >= 1 && k.beta.order() >= 1) {
            if (witness) *witness = k;
            return false;
        }
    }
    if (witness) witness->reset();
    return true;
}

PluriCharacterization characterization_pluri(const std::vector<BiPolynomial>& g,
                                             const std::vector<BiPolynomial>& u) {
    if (g.size() != u.size())
        throw DimensionMismatch("characterization needs matching list lengths");
    if (g.empty()) throw PreconditionViolation("characterization needs at least one pair");
    int n = g.front().dimension();
    for (const auto& p : g)
        if (!p.is_holomorphic()) throw NotHolomorphic("g entry " + p.to_string());
    for (const auto& p : u)
        if (!p.is_holomorphic()) throw NotHolomorphic("u entry " + p.to_string());

    BiPolynomial direct_sum(n);
    BiPolynomial centered_sum(n);
    for (size_t j = 0; j < g.size(); ++j) {
        BiPolynomial gbar = g[j].conj();
        direct_sum = direct_sum + gbar * u[j];
        BiPolynomial gbar0 = BiPolynomial::constant(n, gbar.constant_term());
        BiPolynomial u0 = BiPolynomial::constant(n, u[j].constant_term());
        centered_sum = centered_sum + (gbar - gbar0) * (u[j] - u0);
    }

    PluriCharacterization out{false, false, centered_sum, ""};
    out.lemma_sum_vanishes = centered_sum.is_zero();
    std::optional<TermKey> w;
    out.direct_pluriharmonic = is_pluriharmonic(direct_sum, &w);
    if (!out.lemma_sum_vanishes)
        out.witness = "centered sum = " + centered_sum.to_string();
    else if (!out.direct_pluriharmonic && w)
        out.witness = "mixed term z^" + w->alpha.to_string() + " zbar^" + w->beta.to_string();
    return out;
}

} // namespace bergball
