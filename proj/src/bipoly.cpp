#include "bergball/bipoly.hpp"

#include <algorithm>

#include "bergball/errors.hpp"

namespace bergball {

GaussianRational pow(const GaussianRational& x, int k) {
    if (k < 0) throw PreconditionViolation("negative scalar power");
    GaussianRational acc(1);
    GaussianRational base = x;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

BiPolynomial::BiPolynomial(int dimension) : n_(dimension) {
    if (dimension < 1) throw DimensionMismatch("polynomial dimension must be >= 1");
}

BiPolynomial BiPolynomial::constant(int dimension, const GaussianRational& c) {
    BiPolynomial p(dimension);
    p.add_term(MultiIndex(dimension), MultiIndex(dimension), c);
    return p;
}

BiPolynomial BiPolynomial::monomial(const MultiIndex& alpha, const MultiIndex& beta,
                                    const GaussianRational& c) {
    if (alpha.dimension() != beta.dimension())
        throw DimensionMismatch("monomial exponents of different dimension");
    BiPolynomial p(alpha.dimension());
    p.add_term(alpha, beta, c);
    return p;
}

BiPolynomial BiPolynomial::variable_z(int dimension, int j) {
    return monomial(MultiIndex::unit(dimension, j), MultiIndex(dimension), GaussianRational(1));
}

BiPolynomial BiPolynomial::variable_zbar(int dimension, int j) {
    return monomial(MultiIndex(dimension), MultiIndex::unit(dimension, j), GaussianRational(1));
}

BiPolynomial BiPolynomial::norm_sq(int dimension) {
    BiPolynomial p(dimension);
    for (int j = 1; j <= dimension; ++j) {
        MultiIndex e = MultiIndex::unit(dimension, j);
        p.add_term(e, e, GaussianRational(1));
    }
    return p;
}

BiPolynomial BiPolynomial::one_minus_norm_sq(int dimension) {
    return constant(dimension, GaussianRational(1)) - norm_sq(dimension);
}

int BiPolynomial::total_degree() const {
    if (terms_.empty()) return -1;
    // the term order is graded by total degree, so the last key is maximal
    const TermKey& k = terms_.rbegin()->first;
    return k.alpha.order() + k.beta.order();
}

GaussianRational BiPolynomial::coefficient(const MultiIndex& alpha, const MultiIndex& beta) const {
    auto it = terms_.find(TermKey{alpha, beta});
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

GaussianRational BiPolynomial::constant_term() const {
    return coefficient(MultiIndex(n_), MultiIndex(n_));
}

void BiPolynomial::add_term(const MultiIndex& alpha, const MultiIndex& beta,
                            const GaussianRational& c) {
    if (alpha.dimension() != n_ || beta.dimension() != n_)
        throw DimensionMismatch("term exponents do not match polynomial dimension");
    if (c.is_zero()) return;
    TermKey key{alpha, beta};
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BiPolynomial BiPolynomial::operator+(const BiPolynomial& o) const {
    if (o.n_ != n_) throw DimensionMismatch("adding polynomials of different dimension");
    BiPolynomial r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.alpha, k.beta, c);
    return r;
}

BiPolynomial BiPolynomial::operator-(const BiPolynomial& o) const { return *this + (-o); }

BiPolynomial BiPolynomial::operator-() const {
    BiPolynomial r(n_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

BiPolynomial BiPolynomial::operator*(const BiPolynomial& o) const {
    if (o.n_ != n_) throw DimensionMismatch("multiplying polynomials of different dimension");
    BiPolynomial r(n_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.add_term(ka.alpha + kb.alpha, ka.beta + kb.beta, ca * cb);
    return r;
}

BiPolynomial BiPolynomial::scaled(const GaussianRational& c) const {
    BiPolynomial r(n_);
    if (c.is_zero()) return r;
    for (const auto& [k, x] : terms_) r.terms_.emplace(k, x * c);
    return r;
}

BiPolynomial BiPolynomial::pow(int k) const {
    if (k < 0) throw PreconditionViolation("negative polynomial power");
    BiPolynomial acc = constant(n_, GaussianRational(1));
    for (int i = 0; i < k; ++i) acc = acc * (*this);
    return acc;
}

bool BiPolynomial::operator==(const BiPolynomial& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
}

BiPolynomial BiPolynomial::conj() const {
    BiPolynomial r(n_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(TermKey{k.beta, k.alpha}, c.conj());
    return r;
}

bool BiPolynomial::is_holomorphic() const {
    for (const auto& [k, c] : terms_)
        if (k.beta.order() > 0) return false;
    return true;
}

bool BiPolynomial::is_antiholomorphic() const {
    for (const auto& [k, c] : terms_)
        if (k.alpha.order() > 0) return false;
    return true;
}

BiPolynomial BiPolynomial::derivative_z(int j) const {
    if (j < 1 || j > n_) throw DimensionMismatch("derivative index out of range");
    BiPolynomial r(n_);
    for (const auto& [k, c] : terms_) {
        int a = k.alpha[j - 1];
        if (a == 0) continue;
        MultiIndex alpha = k.alpha;
        alpha[j - 1] -= 1;
        r.add_term(alpha, k.beta, c * GaussianRational(a));
    }
    return r;
}

BiPolynomial BiPolynomial::derivative_zbar(int j) const {
    if (j < 1 || j > n_) throw DimensionMismatch("derivative index out of range");
    BiPolynomial r(n_);
    for (const auto& [k, c] : terms_) {
        int b = k.beta[j - 1];
        if (b == 0) continue;
        MultiIndex beta = k.beta;
        beta[j - 1] -= 1;
        r.add_term(k.alpha, beta, c * GaussianRational(b));
    }
    return r;
}

GaussianRational BiPolynomial::eval(const std::vector<GaussianRational>& z,
                                    const std::vector<GaussianRational>& w) const {
    if (static_cast<int>(z.size()) != n_ || static_cast<int>(w.size()) != n_)
        throw DimensionMismatch("evaluation point has wrong dimension");
    GaussianRational acc(0);
    for (const auto& [k, c] : terms_) {
        GaussianRational t = c;
        for (int j = 0; j < n_; ++j) {
            t *= bergball::pow(z[static_cast<size_t>(j)], k.alpha[j]);
            t *= bergball::pow(w[static_cast<size_t>(j)], k.beta[j]);
        }
        acc += t;
    }
    return acc;
}

std::string BiPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
        if (!s.empty()) s += " + ";
        bool has_vars = k.alpha.order() > 0 || k.beta.order() > 0;
        std::string coeff;
        if (!c.is_real()) {
            coeff = "(" + to_text(c) + ")";
        } else if (!has_vars || c.real() != 1) {
            coeff = to_text(c.real());
        }
        std::string vars;
        if (k.alpha.order() > 0) vars += "z^" + k.alpha.to_string();
        if (k.beta.order() > 0) {
            if (!vars.empty()) vars += "*";
            vars += "zbar^" + k.beta.to_string();
        }
        if (!coeff.empty() && !vars.empty())
            s += coeff + "*" + vars;
        else
            s += coeff + vars;
    }
    return s;
}

} // namespace bergball
