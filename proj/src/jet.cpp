#include "bergball/jet.hpp"

#include <random>
#include <sstream>

#include "bergball/errors.hpp"

namespace bergball {

namespace {

void require_dim(int dimension) {
    if (dimension < 1) throw PreconditionViolation("dimension must be >= 1");
}

void require_j(int dimension, int j) {
    require_dim(dimension);
    if (j < 1 || j > dimension) throw DimensionMismatch("coordinate index out of range");
}

} // namespace

int var_z(int dimension, int j) {
    require_j(dimension, j);
    return j - 1;
}

int var_w(int dimension, int j) {
    require_j(dimension, j);
    return dimension + j - 1;
}

int var_xi(int dimension, int j) {
    require_j(dimension, j);
    return 2 * dimension + j - 1;
}

int var_eta(int dimension, int j) {
    require_j(dimension, j);
    return 3 * dimension + j - 1;
}

int conjugate_var(int dimension, int id) {
    require_dim(dimension);
    if (id < 0 || id >= 4 * dimension) throw DimensionMismatch("variable id out of range");
    int group = id / dimension;
    int offset = id % dimension;
    int swapped[] = {1, 0, 3, 2};
    return swapped[group] * dimension + offset;
}

// ---------------------------------------------------------------- ExprNode

Expr expr_const(const GaussianRational& c) {
    auto n = std::shared_ptr<ExprNode>(new ExprNode());
    n->kind = ExprNode::Kind::Const;
    n->value = c;
    return n;
}

Expr expr_var(int id) {
    if (id < 0) throw DimensionMismatch("negative variable id");
    auto n = std::shared_ptr<ExprNode>(new ExprNode());
    n->kind = ExprNode::Kind::Var;
    n->var_id = id;
    return n;
}

Expr expr_add(const Expr& a, const Expr& b) {
    auto n = std::shared_ptr<ExprNode>(new ExprNode());
    n->kind = ExprNode::Kind::Add;
    n->left = a;
    n->right = b;
    return n;
}

Expr expr_mul(const Expr& a, const Expr& b) {
    auto n = std::shared_ptr<ExprNode>(new ExprNode());
    n->kind = ExprNode::Kind::Mul;
    n->left = a;
    n->right = b;
    return n;
}

Expr expr_neg(const Expr& a) {
    auto n = std::shared_ptr<ExprNode>(new ExprNode());
    n->kind = ExprNode::Kind::Neg;
    n->left = a;
    return n;
}

Expr expr_recip(const Expr& a) {
    auto n = std::shared_ptr<ExprNode>(new ExprNode());
    n->kind = ExprNode::Kind::Recip;
    n->left = a;
    return n;
}

Expr expr_pow(const Expr& a, int k) {
    auto n = std::shared_ptr<ExprNode>(new ExprNode());
    n->kind = ExprNode::Kind::IntPow;
    n->left = a;
    n->exponent = k;
    return n;
}

Expr expr_conjugate(const Expr& e, int dimension) {
    switch (e->kind) {
        case ExprNode::Kind::Const: return expr_const(e->value.conj());
        case ExprNode::Kind::Var: return expr_var(conjugate_var(dimension, e->var_id));
        case ExprNode::Kind::Add:
            return expr_add(expr_conjugate(e->left, dimension),
                            expr_conjugate(e->right, dimension));
        case ExprNode::Kind::Mul:
            return expr_mul(expr_conjugate(e->left, dimension),
                            expr_conjugate(e->right, dimension));
        case ExprNode::Kind::Neg: return expr_neg(expr_conjugate(e->left, dimension));
        case ExprNode::Kind::Recip: return expr_recip(expr_conjugate(e->left, dimension));
        case ExprNode::Kind::IntPow:
            return expr_pow(expr_conjugate(e->left, dimension), e->exponent);
    }
    throw PreconditionViolation("unreachable expression kind");
}

Expr expr_of_bipoly(const BiPolynomial& p) {
    int n = p.dimension();
    Expr acc = expr_const(GaussianRational(0));
    for (const auto& [key, c] : p.terms()) {
        Expr term = expr_const(c);
        for (int j = 1; j <= n; ++j) {
            if (key.alpha[j - 1] > 0)
                term = term * expr_pow(expr_var(var_z(n, j)), key.alpha[j - 1]);
            if (key.beta[j - 1] > 0)
                term = term * expr_pow(expr_var(var_w(n, j)), key.beta[j - 1]);
        }
        acc = acc + term;
    }
    return acc;
}

// ------------------------------------------------------------- SamplePoint

SamplePoint::SamplePoint(int dimension, std::vector<GaussianRational> values, bool diagonal)
    : n_(dimension), values_(std::move(values)), diagonal_(diagonal) {
    require_dim(dimension);
    if (static_cast<int>(values_.size()) != 4 * n_)
        throw DimensionMismatch("sample point needs 4N values");
}

SamplePoint SamplePoint::diagonal(const std::vector<GaussianRational>& z,
                                  const std::vector<GaussianRational>& xi) {
    int n = static_cast<int>(z.size());
    require_dim(n);
    std::vector<GaussianRational> xi_full = xi;
    if (xi_full.empty()) xi_full.assign(n, GaussianRational(0));
    if (static_cast<int>(xi_full.size()) != n)
        throw DimensionMismatch("xi group has wrong length");

    Rational norm_z(0), norm_xi(0);
    for (const auto& c : z) norm_z += c.abs_sq();
    for (const auto& c : xi_full) norm_xi += c.abs_sq();
    if (norm_z >= 1 || norm_xi >= 1)
        throw PreconditionViolation("diagonal sample point must lie inside the unit ball");

    std::vector<GaussianRational> vals(4 * n, GaussianRational(0));
    for (int j = 0; j < n; ++j) {
        vals[j] = z[j];
        vals[n + j] = z[j].conj();
        vals[2 * n + j] = xi_full[j];
        vals[3 * n + j] = xi_full[j].conj();
    }
    return SamplePoint(n, std::move(vals), true);
}

const GaussianRational& SamplePoint::value(int var_id) const {
    if (var_id < 0 || var_id >= static_cast<int>(values_.size()))
        throw DimensionMismatch("variable id out of range for sample point");
    return values_[var_id];
}

std::vector<GaussianRational> SamplePoint::group_z() const {
    return std::vector<GaussianRational>(values_.begin(), values_.begin() + n_);
}

std::vector<GaussianRational> SamplePoint::group_w() const {
    return std::vector<GaussianRational>(values_.begin() + n_, values_.begin() + 2 * n_);
}

std::string SamplePoint::to_string() const {
    std::ostringstream os;
    os << "z=(";
    for (int j = 0; j < n_; ++j) os << (j ? ", " : "") << to_text(values_[j]);
    os << "), xi=(";
    for (int j = 0; j < n_; ++j) os << (j ? ", " : "") << to_text(values_[2 * n_ + j]);
    os << ")";
    return os.str();
}

std::vector<SamplePoint> sample_points(int dimension, int count, unsigned long long seed) {
    require_dim(dimension);
    if (count < 0) throw PreconditionViolation("count must be >= 0");
    std::mt19937_64 eng(seed);
    auto draw_int = [&eng]() { return static_cast<int>(eng() % 25) - 12; };
    auto draw_group = [&](std::vector<GaussianRational>& out) {
        // accept when sum (p^2 + q^2) <= 144, i.e. |z| <= 3/4 with 16ths
        for (;;) {
            std::vector<int> raw(2 * dimension);
            long long norm = 0;
            for (int& v : raw) {
                v = draw_int();
                norm += static_cast<long long>(v) * v;
            }
            if (norm > 144) continue;
            out.clear();
            for (int j = 0; j < dimension; ++j)
                out.push_back(GaussianRational(Rational(raw[2 * j], 16),
                                               Rational(raw[2 * j + 1], 16)));
            return;
        }
    };

    std::vector<SamplePoint> pts;
    pts.reserve(count);
    std::vector<GaussianRational> z, xi;
    for (int i = 0; i < count; ++i) {
        draw_group(z);
        draw_group(xi);
        pts.push_back(SamplePoint::diagonal(z, xi));
    }
    return pts;
}

// --------------------------------------------------------------------- Jet

Jet::Jet(int nvars, int order) : nvars_(nvars), order_(order) {
    if (nvars < 1) throw PreconditionViolation("jet needs at least one variable");
    if (order < 0) throw PreconditionViolation("jet order must be >= 0");
}

Jet Jet::constant(int nvars, int order, const GaussianRational& c) {
    Jet j(nvars, order);
    if (!c.is_zero()) j.coeffs_.emplace(MultiIndex(nvars), c);
    return j;
}

Jet Jet::variable(int nvars, int order, int var_id, const GaussianRational& base, bool active) {
    if (var_id < 0 || var_id >= nvars) throw DimensionMismatch("variable id out of range");
    Jet j = constant(nvars, order, base);
    if (active && order >= 1) j.add(MultiIndex::unit(nvars, var_id + 1), GaussianRational(1));
    return j;
}

void Jet::add(const MultiIndex& gamma, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = coeffs_.find(gamma);
    if (it == coeffs_.end()) {
        coeffs_.emplace(gamma, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
}

GaussianRational Jet::value() const { return coeff(MultiIndex(nvars_)); }

GaussianRational Jet::coeff(const MultiIndex& gamma) const {
    auto it = coeffs_.find(gamma);
    return it == coeffs_.end() ? GaussianRational(0) : it->second;
}

GaussianRational Jet::derivative_value(const MultiIndex& gamma) const {
    if (gamma.order() > order_)
        throw PreconditionViolation("derivative order exceeds the jet's valid order");
    return coeff(gamma) * GaussianRational(Rational(gamma.factorial()));
}

Jet Jet::operator+(const Jet& o) const {
    if (nvars_ != o.nvars_) throw DimensionMismatch("jet variable counts differ");
    Jet r(nvars_, std::min(order_, o.order_));
    for (const auto& [g, c] : coeffs_)
        if (g.order() <= r.order_) r.add(g, c);
    for (const auto& [g, c] : o.coeffs_)
        if (g.order() <= r.order_) r.add(g, c);
    return r;
}

Jet Jet::operator-(const Jet& o) const { return *this + (-o); }

Jet Jet::operator-() const { return scaled(GaussianRational(-1)); }

Jet Jet::scaled(const GaussianRational& c) const {
    Jet r(nvars_, order_);
    if (c.is_zero()) return r;
    for (const auto& [g, v] : coeffs_) r.coeffs_.emplace(g, v * c);
    return r;
}

Jet Jet::operator*(const Jet& o) const {
    if (nvars_ != o.nvars_) throw DimensionMismatch("jet variable counts differ");
    Jet r(nvars_, std::min(order_, o.order_));
    for (const auto& [ga, ca] : coeffs_) {
        if (ga.order() > r.order_) break;  // keys are graded
        for (const auto& [gb, cb] : o.coeffs_) {
            if (ga.order() + gb.order() > r.order_) break;
            r.add(ga + gb, ca * cb);
        }
    }
    return r;
}

Jet Jet::reciprocal() const {
    GaussianRational c = value();
    if (c.is_zero()) throw PoleAtPoint("reciprocal of a jet vanishing at the base point");
    GaussianRational inv = GaussianRational(1) / c;
    // 1/f = (1/c) sum_k (1 - f/c)^k; the series terminates at the jet order
    // because 1 - f/c has no constant term
    Jet rest = Jet::constant(nvars_, order_, GaussianRational(1)) - scaled(inv);
    Jet acc = Jet::constant(nvars_, order_, GaussianRational(1));
    Jet power = Jet::constant(nvars_, order_, GaussianRational(1));
    for (int k = 1; k <= order_; ++k) {
        power = power * rest;
        acc = acc + power;
    }
    return acc.scaled(inv);
}

Jet Jet::pow(int k) const {
    if (k < 0) return reciprocal().pow(-k);
    Jet acc = Jet::constant(nvars_, order_, GaussianRational(1));
    for (int i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

Jet Jet::derivative(int var_id) const {
    if (var_id < 0 || var_id >= nvars_) throw DimensionMismatch("variable id out of range");
    if (order_ == 0)
        throw PreconditionViolation("jet order exhausted: cannot differentiate an order-0 jet");
    Jet r(nvars_, order_ - 1);
    for (const auto& [g, c] : coeffs_) {
        if (g[var_id] == 0) continue;
        MultiIndex d = g;
        d[var_id] -= 1;
        if (d.order() <= r.order_) r.add(d, c * GaussianRational(Rational(g[var_id])));
    }
    return r;
}

// ---------------------------------------------------------------- eval_jet

std::vector<bool> active_all(int dimension) {
    require_dim(dimension);
    return std::vector<bool>(4 * dimension, true);
}

std::vector<bool> active_group_z(int dimension) {
    require_dim(dimension);
    std::vector<bool> m(4 * dimension, false);
    for (int i = 0; i < 2 * dimension; ++i) m[i] = true;
    return m;
}

std::vector<bool> active_group_xi(int dimension) {
    require_dim(dimension);
    std::vector<bool> m(4 * dimension, false);
    for (int i = 2 * dimension; i < 4 * dimension; ++i) m[i] = true;
    return m;
}

namespace {

Jet eval_node(const ExprNode* e, const SamplePoint& pt, int order,
              const std::vector<bool>& active) {
    int nv = 4 * pt.dimension();
    switch (e->kind) {
        case ExprNode::Kind::Const: return Jet::constant(nv, order, e->value);
        case ExprNode::Kind::Var:
            return Jet::variable(nv, order, e->var_id, pt.value(e->var_id),
                                 active[e->var_id]);
        case ExprNode::Kind::Add:
            return eval_node(e->left.get(), pt, order, active) +
                   eval_node(e->right.get(), pt, order, active);
        case ExprNode::Kind::Mul:
            return eval_node(e->left.get(), pt, order, active) *
                   eval_node(e->right.get(), pt, order, active);
        case ExprNode::Kind::Neg: return -eval_node(e->left.get(), pt, order, active);
        case ExprNode::Kind::Recip:
            return eval_node(e->left.get(), pt, order, active).reciprocal();
        case ExprNode::Kind::IntPow:
            return eval_node(e->left.get(), pt, order, active).pow(e->exponent);
    }
    throw PreconditionViolation("unreachable expression kind");
}

} // namespace

Jet eval_jet(const Expr& e, const SamplePoint& pt, int order, const std::vector<bool>& active) {
    if (!e) throw PreconditionViolation("null expression");
    if (order < 0) throw PreconditionViolation("jet order must be >= 0");
    if (static_cast<int>(active.size()) != 4 * pt.dimension())
        throw DimensionMismatch("active mask has wrong length");
    return eval_node(e.get(), pt, order, active);
}

Jet eval_jet(const Expr& e, const SamplePoint& pt, int order) {
    return eval_jet(e, pt, order, active_all(pt.dimension()));
}

// ------------------------------------------------------------ group jet ops

namespace {

int group_var(const SamplePoint& pt, VarGroup g, bool conjugate, int j) {
    int n = pt.dimension();
    if (g == VarGroup::Z) return conjugate ? var_w(n, j) : var_z(n, j);
    return conjugate ? var_eta(n, j) : var_xi(n, j);
}

Jet var_jet_like(const Jet& f, const SamplePoint& pt, int id) {
    return Jet::variable(f.nvars(), f.order(), id, pt.value(id), true);
}

} // namespace

Jet op_E(const Jet& f, const SamplePoint& pt, VarGroup g) {
    int n = pt.dimension();
    Jet acc(f.nvars(), std::max(0, f.order() - 1));
    for (int j = 1; j <= n; ++j) {
        int id = group_var(pt, g, false, j);
        Jet d = f.derivative(id);
        acc = acc + var_jet_like(d, pt, id) * d;
    }
    return acc;
}

Jet op_Ebar(const Jet& f, const SamplePoint& pt, VarGroup g) {
    int n = pt.dimension();
    Jet acc(f.nvars(), std::max(0, f.order() - 1));
    for (int j = 1; j <= n; ++j) {
        int id = group_var(pt, g, true, j);
        Jet d = f.derivative(id);
        acc = acc + var_jet_like(d, pt, id) * d;
    }
    return acc;
}

Jet op_Delta(const Jet& f, const SamplePoint& pt, VarGroup g) {
    int n = pt.dimension();
    Jet acc(f.nvars(), std::max(0, f.order() - 2));
    for (int j = 1; j <= n; ++j) {
        int hol = group_var(pt, g, false, j);
        int anti = group_var(pt, g, true, j);
        acc = acc + f.derivative(hol).derivative(anti);
    }
    return acc;
}

Jet op_shifted_pair(const Jet& f, const SamplePoint& pt, VarGroup g, const Rational& s) {
    GaussianRational sc(s);
    Jet inner = op_Ebar(f, pt, g) + f.scaled(sc);
    Jet outer = op_E(inner, pt, g) + inner.scaled(sc);
    return outer - op_Delta(f, pt, g);
}

Jet op_inv_laplacian(const Jet& f, const SamplePoint& pt, VarGroup g) {
    int n = pt.dimension();
    Jet core = op_Delta(f, pt, g) - op_E(op_Ebar(f, pt, g), pt, g);
    Jet weight = Jet::constant(f.nvars(), core.order(), GaussianRational(1));
    for (int j = 1; j <= n; ++j) {
        int hol = group_var(pt, g, false, j);
        int anti = group_var(pt, g, true, j);
        weight = weight - var_jet_like(core, pt, hol) * var_jet_like(core, pt, anti);
    }
    return weight * core;
}

} // namespace bergball
