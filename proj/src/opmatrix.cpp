#include "bergball/opmatrix.hpp"

#include <algorithm>
#include <set>

#include "bergball/combinatorics.hpp"
#include "bergball/linalg.hpp"

namespace bergball {

OperatorMatrix::OperatorMatrix(int dimension, int d_in, int d_out)
    : n_(dimension), d_in_(d_in), d_out_(d_out) {
    if (dimension < 1) throw DimensionMismatch("matrix dimension must be >= 1");
    if (d_in < 0 || d_out < 0)
        throw PreconditionViolation("matrix degree bounds must be nonnegative");
}

void OperatorMatrix::add_entry(const MultiIndex& row, const MultiIndex& col,
                               const GaussianRational& v) {
    if (row.dimension() != n_ || col.dimension() != n_)
        throw DimensionMismatch("matrix entry index does not match dimension");
    if (col.order() > d_in_)
        throw GuardBandViolation("column degree " + std::to_string(col.order()) +
                                 " exceeds input band " + std::to_string(d_in_));
    if (row.order() > d_out_)
        throw GuardBandViolation("row degree " + std::to_string(row.order()) +
                                 " exceeds output band " + std::to_string(d_out_));
    if (v.is_zero()) return;
    Column& c = cols_[col];
    GaussianRational& cell = c[row];
    cell = cell + v;
    if (cell.is_zero()) {
        c.erase(row);
        if (c.empty()) cols_.erase(col);
    }
}

GaussianRational OperatorMatrix::entry(const MultiIndex& row, const MultiIndex& col) const {
    auto cit = cols_.find(col);
    if (cit == cols_.end()) return GaussianRational(0);
    auto rit = cit->second.find(row);
    return rit == cit->second.end() ? GaussianRational(0) : rit->second;
}

OperatorMatrix OperatorMatrix::operator+(const OperatorMatrix& o) const {
    if (o.n_ != n_) throw DimensionMismatch("adding matrices of different dimension");
    OperatorMatrix s(n_, std::min(d_in_, o.d_in_), std::max(d_out_, o.d_out_));
    for (const auto& [col, column] : cols_)
        if (col.order() <= s.d_in_)
            for (const auto& [row, v] : column) s.add_entry(row, col, v);
    for (const auto& [col, column] : o.cols_)
        if (col.order() <= s.d_in_)
            for (const auto& [row, v] : column) s.add_entry(row, col, v);
    return s;
}

OperatorMatrix OperatorMatrix::operator-(const OperatorMatrix& o) const {
    return *this + o.scaled(GaussianRational(-1));
}

OperatorMatrix OperatorMatrix::scaled(const GaussianRational& c) const {
    OperatorMatrix s(n_, d_in_, d_out_);
    if (c.is_zero()) return s;
    for (const auto& [col, column] : cols_)
        for (const auto& [row, v] : column) s.add_entry(row, col, v * c);
    return s;
}

OperatorMatrix OperatorMatrix::compose(const OperatorMatrix& inner) const {
    if (inner.n_ != n_) throw DimensionMismatch("composing matrices of different dimension");
    if (d_in_ < inner.d_out_)
        throw GuardBandViolation("outer input band " + std::to_string(d_in_) +
                                 " does not cover inner output band " +
                                 std::to_string(inner.d_out_));
    OperatorMatrix s(n_, inner.d_in_, d_out_);
    for (const auto& [col, column] : inner.cols_) {
        for (const auto& [mid, v] : column) {
            auto oit = cols_.find(mid);
            if (oit == cols_.end()) continue;
            for (const auto& [row, w] : oit->second) s.add_entry(row, col, w * v);
        }
    }
    return s;
}

int OperatorMatrix::truncated_rank(int degree) const {
    if (degree < 0) throw PreconditionViolation("truncation degree must be nonnegative");
    if (d_in_ < degree)
        throw GuardBandViolation("columns only exact up to degree " + std::to_string(d_in_) +
                                 ", cannot truncate at " + std::to_string(degree));
    std::vector<MultiIndex> basis = multiindices_up_to(n_, degree);
    std::vector<std::vector<GaussianRational>> m(
        basis.size(), std::vector<GaussianRational>(basis.size(), GaussianRational(0)));
    for (size_t j = 0; j < basis.size(); ++j) {
        auto cit = cols_.find(basis[j]);
        if (cit == cols_.end()) continue;
        for (size_t i = 0; i < basis.size(); ++i) {
            auto rit = cit->second.find(basis[i]);
            if (rit != cit->second.end()) m[i][j] = rit->second;
        }
    }
    return exact_rank(std::move(m));
}

namespace {

int raw_shift(const QuasiHomSymbol& sym) { return sym.max_degree_shift(); }

} // namespace

OperatorMatrix toeplitz_matrix(const QuasiHomSymbol& sym, int d_in) {
    return toeplitz_matrix(sym, d_in, std::max(0, d_in + raw_shift(sym)));
}

OperatorMatrix toeplitz_matrix(const QuasiHomSymbol& sym, int d_in, int d_out) {
    if (d_out < d_in + raw_shift(sym))
        throw PreconditionViolation("output band " + std::to_string(d_out) +
                                    " cannot hold columns of input band " + std::to_string(d_in) +
                                    " shifted by " + std::to_string(raw_shift(sym)));
    const int n = sym.dimension();
    OperatorMatrix m(n, d_in, d_out);
    for (const MultiIndex& alpha : multiindices_up_to(n, d_in)) {
        for (const QuasiHomTerm& t : sym.terms()) {
            MultiIndex sum = alpha + t.a;
            if (!t.b.leq(sum)) continue; // z^(alpha+a) zbar^b projects to zero
            MultiIndex gamma = sum - t.b;
            Rational weight = Rational(n) * radial_mellin(t.rho, n + sum.order()) *
                              sphere_moment(sum) / monomial_norm_sq(gamma);
            m.add_entry(gamma, alpha, t.coeff * GaussianRational(weight));
        }
    }
    return m;
}

OperatorMatrix rank_one_matrix(const BiPolynomial& x, const BiPolynomial& y, int d_in) {
    if (x.dimension() != y.dimension())
        throw DimensionMismatch("tensor factors of different dimension");
    if (!x.is_holomorphic() || !y.is_holomorphic())
        throw NotHolomorphic("rank-one factors must be holomorphic polynomials");
    const int n = x.dimension();
    OperatorMatrix m(n, d_in, std::max(0, x.total_degree()));
    for (const auto& [yk, yc] : y.terms()) {
        if (yk.alpha.order() > d_in) continue; // pairs to zero against the band
        GaussianRational scale = yc.conj() * GaussianRational(monomial_norm_sq(yk.alpha));
        for (const auto& [xk, xc] : x.terms()) m.add_entry(xk.alpha, yk.alpha, xc * scale);
    }
    return m;
}

OperatorMatrix hankel_product(const QuasiHomSymbol& phi, const QuasiHomSymbol& psi, int degree) {
    OperatorMatrix t_psi = toeplitz_matrix(psi, degree);
    OperatorMatrix t_phi = toeplitz_matrix(phi, std::max(degree, t_psi.d_out()));
    OperatorMatrix product = toeplitz_matrix(phi * psi, degree);
    return product - t_phi.compose(t_psi);
}

std::string MatrixEntryDiff::to_string() const {
    return "entry (" + row.to_string() + ", " + col.to_string() + "): " + to_text(lhs) +
           " vs " + to_text(rhs);
}

std::optional<MatrixEntryDiff> operator_difference(const OperatorMatrix& a,
                                                   const OperatorMatrix& b, int degree) {
    if (a.dimension() != b.dimension())
        throw DimensionMismatch("comparing matrices of different dimension");
    if (a.d_in() < degree || b.d_in() < degree)
        throw GuardBandViolation("comparison degree " + std::to_string(degree) +
                                 " exceeds an input band");
    for (const MultiIndex& alpha : multiindices_up_to(a.dimension(), degree)) {
        // merge the two columns' row supports in graded-lex order
        std::set<MultiIndex> support;
        auto ca = a.columns().find(alpha);
        auto cb = b.columns().find(alpha);
        if (ca != a.columns().end())
            for (const auto& [row, v] : ca->second) support.insert(row);
        if (cb != b.columns().end())
            for (const auto& [row, v] : cb->second) support.insert(row);
        for (const MultiIndex& row : support) {
            GaussianRational va = a.entry(row, alpha), vb = b.entry(row, alpha);
            if (va != vb) return MatrixEntryDiff{row, alpha, va, vb};
        }
    }
    return std::nullopt;
}

bool operator_equal(const OperatorMatrix& a, const OperatorMatrix& b, int degree) {
    return !operator_difference(a, b, degree).has_value();
}

} // namespace bergball
