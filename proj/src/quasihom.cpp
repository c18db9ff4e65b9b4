#include "bergball/quasihom.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "bergball/errors.hpp"

namespace bergball {

QuasiHomSymbol::QuasiHomSymbol(int dimension) : n_(dimension) {
    if (dimension < 1) throw DimensionMismatch("symbol dimension must be >= 1");
}

QuasiHomSymbol QuasiHomSymbol::constant(int dimension, const GaussianRational& c) {
    QuasiHomSymbol s(dimension);
    s.add_term(MultiIndex(dimension), MultiIndex(dimension), c, RadialProfile::one());
    return s;
}

QuasiHomSymbol QuasiHomSymbol::from_bipoly(const BiPolynomial& p) {
    QuasiHomSymbol s(p.dimension());
    for (const auto& [k, c] : p.terms()) {
        if (p.dimension() == 1) {
            // z^a zbar^b = z^(a-m) zbar^(b-m) t^m with m = min(a, b); this keeps
            // the two normal forms of radial one-dimensional symbols identified.
            int m = std::min(k.alpha[0], k.beta[0]);
            MultiIndex a = k.alpha, b = k.beta;
            a[0] -= m;
            b[0] -= m;
            s.add_term(a, b, c, RadialProfile::power(m));
        } else {
            s.add_term(k.alpha, k.beta, c, RadialProfile::one());
        }
    }
    return s;
}

void QuasiHomSymbol::add_term(const MultiIndex& a, const MultiIndex& b,
                              const GaussianRational& coeff, const RadialProfile& rho) {
    if (a.dimension() != n_ || b.dimension() != n_)
        throw DimensionMismatch("symbol term exponents do not match dimension");
    if (coeff.is_zero() || rho.is_zero()) return;
    int lowest = a.order() + b.order() + 2 * rho.min_power();
    if (lowest <= -2 * n_)
        throw NonIntegrable("term z^" + a.to_string() + " zbar^" + b.to_string() + " " +
                            rho.to_string() + " is not integrable over the ball (exponent " +
                            std::to_string(lowest) + " <= " + std::to_string(-2 * n_) + ")");
    terms_.push_back(QuasiHomTerm{a, b, coeff, rho});
}

QuasiHomSymbol QuasiHomSymbol::operator+(const QuasiHomSymbol& o) const {
    if (o.n_ != n_) throw DimensionMismatch("adding symbols of different dimension");
    QuasiHomSymbol s = *this;
    for (const auto& t : o.terms_) s.terms_.push_back(t);
    return s;
}

QuasiHomSymbol QuasiHomSymbol::operator-(const QuasiHomSymbol& o) const {
    return *this + o.scaled(GaussianRational(-1));
}

QuasiHomSymbol QuasiHomSymbol::operator*(const QuasiHomSymbol& o) const {
    if (o.n_ != n_) throw DimensionMismatch("multiplying symbols of different dimension");
    QuasiHomSymbol s(n_);
    for (const auto& t1 : terms_)
        for (const auto& t2 : o.terms_)
            s.add_term(t1.a + t2.a, t1.b + t2.b, t1.coeff * t2.coeff, t1.rho * t2.rho);
    return s;
}

QuasiHomSymbol QuasiHomSymbol::scaled(const GaussianRational& c) const {
    QuasiHomSymbol s(n_);
    if (c.is_zero()) return s;
    for (const auto& t : terms_) s.terms_.push_back(QuasiHomTerm{t.a, t.b, t.coeff * c, t.rho});
    return s;
}

QuasiHomSymbol QuasiHomSymbol::conj() const {
    QuasiHomSymbol s(n_);
    for (const auto& t : terms_) s.terms_.push_back(QuasiHomTerm{t.b, t.a, t.coeff.conj(), t.rho});
    return s;
}

int QuasiHomSymbol::max_degree_shift() const {
    if (terms_.empty()) return 0;
    int shift = terms_.front().a.order() - terms_.front().b.order();
    for (const auto& t : terms_) shift = std::max(shift, t.a.order() - t.b.order());
    return shift;
}

QuasiHomSymbol QuasiHomSymbol::canonicalized() const {
    // Accumulate, per bidegree key, the complex coefficient of each radial
    // basis element t^k and t^k log(t).  In dimension 1 the shared diagonal
    // power of each term folds into the radial factor first, so z^a zbar^b
    // and z^(a-m) zbar^(b-m) t^m land on the same key.
    std::map<TermKey, std::map<std::pair<int, bool>, GaussianRational>> groups;
    for (const auto& t : terms_) {
        MultiIndex a = t.a, b = t.b;
        int m = 0;
        if (n_ == 1) {
            m = std::min(a[0], b[0]);
            a[0] -= m;
            b[0] -= m;
        }
        auto& slot = groups[TermKey{a, b}];
        for (const auto& [k, c] : t.rho.power_part()) slot[{k + m, false}] += t.coeff * c;
        for (const auto& [k, c] : t.rho.log_part()) slot[{k + m, true}] += t.coeff * c;
    }
    QuasiHomSymbol s(n_);
    for (const auto& [key, slot] : groups) {
        for (const auto& [basis, c] : slot) {
            if (c == GaussianRational(0)) continue;
            RadialProfile rho = basis.second ? RadialProfile::log_power(basis.first)
                                             : RadialProfile::power(basis.first);
            s.add_term(key.alpha, key.beta, c, rho);
        }
    }
    return s;
}

BiPolynomial QuasiHomSymbol::to_bipoly() const {
    BiPolynomial p(n_);
    BiPolynomial t = BiPolynomial::norm_sq(n_);
    for (const auto& term : terms_) {
        if (term.rho.has_log())
            throw ImproperFunction("symbol has a log factor; not a polynomial: " + to_string());
        for (const auto& [k, c] : term.rho.power_part()) {
            if (k < 0)
                throw ImproperFunction("symbol has a negative radial power; not a polynomial: " +
                                       to_string());
            p = p + BiPolynomial::monomial(term.a, term.b, term.coeff * GaussianRational(c)) *
                        t.pow(k);
        }
    }
    return p;
}

std::string QuasiHomSymbol::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    auto emit = [&](const MultiIndex& a, const MultiIndex& b, const GaussianRational& c, int k,
                    bool with_log) {
        if (c.is_zero()) return;
        if (!s.empty()) s += " + ";
        std::string vars;
        if (a.order() > 0) vars += "z^" + a.to_string();
        if (b.order() > 0) {
            if (!vars.empty()) vars += "*";
            vars += "zbar^" + b.to_string();
        }
        if (k != 0) {
            if (!vars.empty()) vars += "*";
            vars += "t^" + std::to_string(k);
        }
        if (with_log) {
            if (!vars.empty()) vars += "*";
            vars += "log(t)";
        }
        std::string coeff;
        if (!c.is_real())
            coeff = "(" + to_text(c) + ")";
        else if (vars.empty() || c.real() != 1)
            coeff = to_text(c.real());
        if (!coeff.empty() && !vars.empty())
            s += coeff + "*" + vars;
        else
            s += coeff + vars;
    };
    for (const auto& term : terms_) {
        for (const auto& [k, c] : term.rho.power_part())
            emit(term.a, term.b, term.coeff * GaussianRational(c), k, false);
        for (const auto& [k, c] : term.rho.log_part())
            emit(term.a, term.b, term.coeff * GaussianRational(c), k, true);
    }
    return s;
}

} // namespace bergball
