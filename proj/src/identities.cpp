#include "bergball/identities.hpp"

#include <sstream>

#include "bergball/combinatorics.hpp"
#include "bergball/errors.hpp"

namespace bergball {

namespace {

Expr one_expr() { return expr_const(GaussianRational(1)); }

Expr rational_expr(const Rational& r) { return expr_const(GaussianRational(r)); }

/** sum_j a_j(j) * b_j(j) for the given variable selectors. */
Expr pair_sum(int n, int (*first)(int, int), int (*second)(int, int)) {
    Expr acc = expr_const(GaussianRational(0));
    for (int j = 1; j <= n; ++j)
        acc = acc + expr_var(first(n, j)) * expr_var(second(n, j));
    return acc;
}

Expr pairing_z_xi(int n) { return pair_sum(n, var_z, var_eta); }   // <z, xi>
Expr pairing_xi_z(int n) { return pair_sum(n, var_xi, var_w); }    // <xi, z>
Expr norm_z(int n) { return pair_sum(n, var_z, var_w); }           // |z|^2
Expr norm_xi(int n) { return pair_sum(n, var_xi, var_eta); }       // |xi|^2

Expr inv_kernel(int n) {
    return expr_recip(one_expr() - pairing_z_xi(n)) * expr_recip(one_expr() - pairing_xi_z(n));
}

// ---- the Moebius automorphism centered at omega = (3/5, 0, ..., 0) ------
// s_omega = 4/5 keeps everything rational; phi(z)_1 = (3/5 - z_1)/(1 - (3/5) z_1)
// and phi(z)_j = -(4/5) z_j / (1 - (3/5) z_1) for j >= 2.

const Rational kOmega1(3, 5);
const Rational kSOmega(4, 5);

Rational omega_coord(int j) { return j == 1 ? kOmega1 : Rational(0); }

Rational omega_norm_sq() { return kOmega1 * kOmega1; }

/** phi(z)_j built over the variable family selected by var (z or eta). */
Expr mobius_component(int n, int j, int (*var)(int, int)) {
    Expr denom = expr_recip(one_expr() - rational_expr(kOmega1) * expr_var(var(n, 1)));
    if (j == 1) return (rational_expr(kOmega1) - expr_var(var(n, 1))) * denom;
    return expr_neg(rational_expr(kSOmega) * expr_var(var(n, j))) * denom;
}

/** phi(e_j) as a vector of rationals (omega is real, so this is real). */
std::vector<Rational> mobius_of_basis(int n, int j) {
    std::vector<Rational> v(n, Rational(0));
    if (j == 1) {
        v[0] = Rational(-1);
        return v;
    }
    v[0] = kOmega1;
    v[j - 1] = -kSOmega;
    return v;
}

Expr mobius_lhs(int n) {
    Expr acc = one_expr();
    for (int j = 1; j <= n; ++j)
        acc = acc - mobius_component(n, j, var_z) * mobius_component(n, j, var_eta);
    return acc;
}

Expr mobius_rhs(int n) {
    Expr scale = rational_expr(Rational(1) - omega_norm_sq());
    Expr num = one_expr() - pairing_z_xi(n);
    Expr den1 = one_expr() - rational_expr(kOmega1) * expr_var(var_z(n, 1));
    Expr den2 = one_expr() - rational_expr(kOmega1) * expr_var(var_eta(n, 1));
    return scale * num * expr_recip(den1) * expr_recip(den2);
}

Expr affine_lhs(int n, int j) {
    if (j < 1 || j > n) throw DimensionMismatch("affine identity index out of range");
    Expr den = expr_recip(one_expr() - rational_expr(kOmega1) * expr_var(var_z(n, 1)));
    return expr_var(var_z(n, j)) * den;
}

Expr affine_rhs(int n, int j) {
    if (j < 1 || j > n) throw DimensionMismatch("affine identity index out of range");
    Rational inv_s_sq = Rational(1) / (Rational(1) - omega_norm_sq());
    // c = -omega + (1 - omega_j) * phi(e_j); the scalar sits outside the product
    std::vector<Rational> phi_e = mobius_of_basis(n, j);
    Rational outer = Rational(1) - omega_coord(j);
    Expr acc = rational_expr(omega_coord(j) * inv_s_sq);
    for (int k = 1; k <= n; ++k) {
        Rational ck = -omega_coord(k) + outer * phi_e[k - 1];
        if (ck == 0) continue;
        acc = acc + rational_expr(inv_s_sq * ck) * mobius_component(n, k, var_z);
    }
    return acc;
}

} // namespace

Expr kernel_expr(const std::string& name, int dimension, int param) {
    if (dimension < 1) throw PreconditionViolation("dimension must be >= 1");
    int n = dimension;
    if (name == "inv_kernel") return inv_kernel(n);
    if (name == "weighted_kernel") return (one_expr() - norm_xi(n)) * inv_kernel(n);
    if (name == "power_kernel") {
        if (param < 1) throw PreconditionViolation("power_kernel needs s >= 1");
        return expr_pow(inv_kernel(n), param);
    }
    if (name == "mobius_lhs") return mobius_lhs(n);
    if (name == "mobius_rhs") return mobius_rhs(n);
    if (name == "affine_lhs") return affine_lhs(n, param);
    if (name == "affine_rhs") return affine_rhs(n, param);
    throw UnknownKernel(name);
}

std::string IdentityInstance::display() const {
    if (param == 0) return name;
    std::ostringstream os;
    os << name << "(" << param << ")";
    return os.str();
}

std::vector<IdentityInstance> identity_registry() {
    std::vector<IdentityInstance> v;
    v.push_back({"E_Delta_a", 0});
    v.push_back({"E_Delta_b", 0});
    for (int s = 1; s <= 4; ++s) v.push_back({"E_s_Delta", s});
    for (int m = 1; m <= 2; ++m) v.push_back({"chain_a", m});
    for (int m = 1; m <= 2; ++m) v.push_back({"chain_b", m});
    for (int m = 1; m <= 2; ++m) v.push_back({"marvelous", m});
    v.push_back({"mobius", 0});
    v.push_back({"affine", 0});
    return v;
}

namespace {

struct SideValues {
    std::vector<GaussianRational> values;  // all must agree for a pass
    std::string note;                      // extra witness context (e.g. j index)
};

GaussianRational value_at(const Expr& e, const SamplePoint& pt) {
    return eval_jet(e, pt, 0).value();
}

/** (m!)^2 (1 - |z|^2)^(m+1) K^(m+1), the right-hand kernel of the chains. */
Expr chain_rhs_expr(int n, int m, bool with_factorial) {
    Expr base = expr_pow(one_expr() - norm_z(n), m + 1) *
                expr_pow(inv_kernel(n), m + 1);
    if (!with_factorial) return base;
    Integer f = factorial(m) * factorial(m);
    return rational_expr(Rational(f)) * base;
}

std::vector<SideValues> evaluate_identity(const std::string& name, int param,
                                          const SamplePoint& pt, int margin) {
    int n = pt.dimension();
    std::vector<bool> in_xi = active_group_xi(n);
    std::vector<bool> in_z = active_group_z(n);
    Expr K = inv_kernel(n);
    Expr Ksq = expr_pow(K, 2);
    Expr weighted = (one_expr() - norm_xi(n)) * K;

    if (name == "E_Delta_a" || name == "E_Delta_a_doubled") {
        Jet lhs = op_shifted_pair(eval_jet(K, pt, 2 + margin, in_xi), pt, VarGroup::Xi,
                                  Rational(0));
        Expr mid = (pairing_z_xi(n) * pairing_xi_z(n) - norm_z(n)) * Ksq;
        Jet rhs_in = eval_jet((one_expr() - norm_z(n)) * K, pt, 2 + margin, in_z);
        Jet rhs = op_E(op_Ebar(rhs_in, pt, VarGroup::Z), pt, VarGroup::Z);
        GaussianRational mid_v = value_at(mid, pt);
        if (name == "E_Delta_a_doubled") mid_v = mid_v * GaussianRational(2);
        return {{{lhs.value(), mid_v, rhs.value()}, ""}};
    }
    if (name == "E_Delta_b") {
        Jet lhs = op_shifted_pair(eval_jet(weighted, pt, 2 + margin, in_xi), pt,
                                  VarGroup::Xi, Rational(0));
        Expr bar_sq = (one_expr() - pairing_z_xi(n)) * (one_expr() - pairing_xi_z(n));
        Expr mid = (rational_expr(Rational(n - 1)) * bar_sq +
                    (one_expr() - norm_z(n)) * (one_expr() - norm_xi(n))) *
                   Ksq;
        Jet rhs_in = eval_jet((one_expr() - norm_z(n)) * K, pt, 2 + margin, in_z);
        Jet rhs = op_shifted_pair(rhs_in, pt, VarGroup::Z, Rational(0));
        return {{{lhs.value(), value_at(mid, pt), rhs.value()}, ""}};
    }
    if (name == "E_s_Delta") {
        int s = param;
        if (s < 1) throw PreconditionViolation("E_s_Delta needs s >= 1");
        Jet lhs = op_shifted_pair(eval_jet(expr_pow(K, s), pt, 2 + margin, in_xi), pt,
                                  VarGroup::Xi, Rational(s));
        Expr rhs = rational_expr(Rational(s) * Rational(s)) * (one_expr() - norm_z(n)) *
                   expr_pow(K, s + 1);
        return {{{lhs.value(), value_at(rhs, pt)}, ""}};
    }
    if (name == "chain_a" || name == "chain_b") {
        int m = param;
        if (m < 1) throw PreconditionViolation("chain identities need m >= 1");
        Expr source = (name == "chain_a") ? K : weighted;
        Jet f = eval_jet(source, pt, 2 * (m + 1) + margin, in_xi);
        for (int s = 0; s <= m; ++s) f = op_shifted_pair(f, pt, VarGroup::Xi, Rational(s));
        Jet rhs_in = eval_jet(chain_rhs_expr(n, m, true), pt, 2 + margin, in_z);
        Jet rhs = (name == "chain_a")
                      ? op_E(op_Ebar(rhs_in, pt, VarGroup::Z), pt, VarGroup::Z)
                      : op_shifted_pair(rhs_in, pt, VarGroup::Z, Rational(0));
        return {{{f.value(), rhs.value()}, ""}};
    }
    if (name == "marvelous") {
        int m = param;
        if (m < 1) throw PreconditionViolation("marvelous needs m >= 1");
        Jet f = eval_jet(weighted, pt, 2 * (m + 1) + margin, in_xi);
        for (int j = 0; j <= m; ++j) {
            GaussianRational eig(Rational(j * (j - n)));
            f = f.scaled(eig) - op_inv_laplacian(f, pt, VarGroup::Xi);
        }
        Integer fact = factorial(m) * factorial(m);
        GaussianRational xi_weight = value_at(one_expr() - norm_xi(n), pt);
        GaussianRational scale = GaussianRational(Rational(1) / Rational(fact));
        for (int k = 0; k <= m; ++k) scale = scale / xi_weight;
        GaussianRational lhs = f.value() * scale;
        Jet rhs_in = eval_jet(chain_rhs_expr(n, m, false), pt, 2 + margin, in_z);
        Jet rhs = op_shifted_pair(rhs_in, pt, VarGroup::Z, Rational(0));
        return {{{lhs, rhs.value()}, ""}};
    }
    if (name == "mobius") {
        return {{{value_at(mobius_lhs(n), pt), value_at(mobius_rhs(n), pt)}, ""}};
    }
    if (name == "affine") {
        std::vector<SideValues> out;
        for (int j = 1; j <= n; ++j) {
            std::ostringstream os;
            os << "component j=" << j;
            out.push_back({{value_at(affine_lhs(n, j), pt), value_at(affine_rhs(n, j), pt)},
                           os.str()});
        }
        return out;
    }
    throw UnknownKernel("identity '" + name + "' is not registered");
}

} // namespace

CheckResult verify_pointwise_identity(const std::string& name, int param,
                                      const std::vector<SamplePoint>& points,
                                      int order_margin) {
    if (points.empty()) throw PreconditionViolation("identity check needs sample points");
    IdentityInstance inst{name, param};
    std::ostringstream label;
    label << inst.display() << " N=" << points[0].dimension();
    for (const SamplePoint& pt : points) {
        if (pt.dimension() != points[0].dimension())
            throw DimensionMismatch("sample points of mixed dimension");
        for (const SideValues& side : evaluate_identity(name, param, pt, order_margin)) {
            for (std::size_t i = 1; i < side.values.size(); ++i) {
                if (side.values[i] == side.values[0]) continue;
                std::ostringstream w;
                w << "at " << pt.to_string();
                if (!side.note.empty()) w << " (" << side.note << ")";
                w << ": side 0 = " << to_text(side.values[0]) << ", side " << i << " = "
                  << to_text(side.values[i]);
                return fail_check(label.str(), w.str());
            }
        }
    }
    return pass_check(label.str(), Label::VerifiedAtPoints, static_cast<int>(points.size()));
}

CheckSuite identity_suite(int dimension, int count, unsigned long long seed) {
    std::vector<SamplePoint> pts = sample_points(dimension, count, seed);
    std::ostringstream name;
    name << "kernel identities N=" << dimension;
    CheckSuite suite{name.str(), {}};
    for (const IdentityInstance& inst : identity_registry())
        suite.add(verify_pointwise_identity(inst.name, inst.param, pts));
    return suite;
}

Expr mharmonic_example(int dimension) {
    if (dimension >= 3) {
        int n = dimension;
        return expr_var(var_z(n, 2)) * expr_var(var_w(n, 3)) *
               expr_recip(one_expr() - expr_var(var_z(n, 1))) *
               expr_recip(one_expr() - expr_var(var_w(n, 1)));
    }
    if (dimension == 2) {
        Expr gz = expr_recip(one_expr() - expr_var(var_z(2, 1)));
        Expr gw = expr_recip(one_expr() - expr_var(var_w(2, 1)));
        Expr first = expr_var(var_z(2, 1)) * expr_var(var_w(2, 2)) * gz * gw;
        Expr second = expr_const(GaussianRational(Rational(-1, 2))) *
                      expr_pow(expr_var(var_w(2, 2)), 2) * expr_var(var_z(2, 2)) * gz *
                      expr_pow(gw, 2);
        return first + second;
    }
    throw PreconditionViolation("no registered example below dimension 2");
}

CheckResult check_mharmonic(const std::string& name, const Expr& u,
                            const std::vector<SamplePoint>& points) {
    if (points.empty()) throw PreconditionViolation("check needs sample points");
    for (const SamplePoint& pt : points) {
        Jet f = eval_jet(u, pt, 2, active_group_z(pt.dimension()));
        GaussianRational v = op_inv_laplacian(f, pt, VarGroup::Z).value();
        if (!v.is_zero()) {
            std::ostringstream w;
            w << "invariant Laplacian = " << to_text(v) << " at " << pt.to_string();
            return fail_check(name, w.str());
        }
    }
    return pass_check(name, Label::VerifiedAtPoints, static_cast<int>(points.size()));
}

std::optional<std::string> mixed_derivative_witness(const Expr& u,
                                                    const std::vector<SamplePoint>& points) {
    for (const SamplePoint& pt : points) {
        int n = pt.dimension();
        Jet f = eval_jet(u, pt, 2, active_group_z(n));
        for (int j = 1; j <= n; ++j) {
            for (int l = 1; l <= n; ++l) {
                MultiIndex gamma(4 * n);
                gamma[var_z(n, j)] = 1;
                gamma[var_w(n, l)] = 1;
                GaussianRational v = f.derivative_value(gamma);
                if (v.is_zero()) continue;
                std::ostringstream os;
                os << "d/dz_" << j << " d/dzbar_" << l << " = " << to_text(v) << " at "
                   << pt.to_string();
                return os.str();
            }
        }
    }
    return std::nullopt;
}

EigenResult check_eigen(const Expr& u, const std::vector<SamplePoint>& points, int dimension) {
    EigenResult r;
    bool have_lambda = false;
    for (const SamplePoint& pt : points) {
        if (pt.dimension() != dimension)
            throw DimensionMismatch("sample point dimension mismatch");
        Jet f = eval_jet(u, pt, 2, active_group_z(dimension));
        GaussianRational uval = f.value();
        if (uval.is_zero()) continue;
        ++r.valid_points;
        GaussianRational ratio = op_inv_laplacian(f, pt, VarGroup::Z).value() / uval;
        if (!have_lambda) {
            r.lambda = ratio;
            have_lambda = true;
            continue;
        }
        if (ratio != r.lambda) {
            std::ostringstream os;
            os << "ratio " << to_text(ratio) << " at " << pt.to_string()
               << " differs from " << to_text(r.lambda);
            r.detail = os.str();
            r.is_eigen = false;
            return r;
        }
    }
    if (r.valid_points < 5) {
        r.detail = "fewer than 5 points with a nonzero value";
        return r;
    }
    r.is_eigen = true;
    for (int j = 0; j <= dimension; ++j) {
        if (r.lambda == GaussianRational(Rational(j * (j - dimension)))) {
            r.in_spectrum = true;
            break;
        }
    }
    return r;
}

} // namespace bergball
