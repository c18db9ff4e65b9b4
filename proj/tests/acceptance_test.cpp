// Acceptance runner: every release gate runs here, one verdict line each.
// Each gate is an exact identity or property at fixed parameters, with a
// wall-clock budget; the process exits nonzero when any line fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bergball/berezin.hpp"
#include "bergball/bhsuite.hpp"
#include "bergball/errors.hpp"
#include "bergball/identities.hpp"
#include "bergball/mellin.hpp"
#include "bergball/operators.hpp"
#include "bergball/opmatrix.hpp"

using namespace bergball;

namespace {

OperatorMatrix toeplitz_product(const QuasiHomSymbol& a, const QuasiHomSymbol& b, int d_in) {
    OperatorMatrix tb = toeplitz_matrix(b, d_in);
    OperatorMatrix ta = toeplitz_matrix(a, std::max(d_in, tb.d_out()));
    return ta.compose(tb);
}

MultiIndex single(int k) { return MultiIndex({k}); }

struct Gate {
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&)> body;
};

bool suite_all_passed(const CheckSuite& s, std::string& why) {
    for (const CheckResult& c : s.checks) {
        if (!c.failed()) continue;
        why = s.name + " / " + c.name + ": " + c.detail;
        return false;
    }
    return true;
}

} // namespace

int main() {
    std::vector<Gate> gates;

    gates.push_back({"derivation identity on all monomials of degree <= 6 for "
                     "(N,m) in {(1,0),(1,1),(2,0),(2,1),(2,2)}",
                     60.0, [](std::string& why) {
                         const std::vector<std::pair<int, int>> cases{
                             {1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}};
                         for (auto [n, m] : cases) {
                             CheckResult r = verify_do_identity(m, n, 6);
                             if (r.passed()) continue;
                             why = r.name + ": " + r.detail;
                             return false;
                         }
                         return true;
                     }});

    gates.push_back({"radial recursion j^2 h^(j+1) = (j(j-N) - invariant Laplacian)(h^j) "
                     "for j <= 5, N <= 3",
                     5.0, [](std::string& why) {
                         for (int n = 1; n <= 3; ++n) {
                             for (int j = 1; j <= 5; ++j) {
                                 CheckResult r = verify_h_recursion(j, n);
                                 if (r.passed()) continue;
                                 why = r.name + ": " + r.detail;
                                 return false;
                             }
                         }
                         return true;
                     }});

    gates.push_back({"kernel identity registry (14 instances) exact at 20 seeded points, "
                     "N in {1,2}",
                     120.0, [](std::string& why) {
                         for (int n : {1, 2}) {
                             CheckSuite s = identity_suite(n, 20, 7);
                             if (s.checks.size() != 14) {
                                 why = "registry enumerated " +
                                       std::to_string(s.checks.size()) +
                                       " instances, expected 14";
                                 return false;
                             }
                             if (!suite_all_passed(s, why)) return false;
                         }
                         return true;
                     }});

    gates.push_back({"invariantly harmonic examples vanish under the invariant Laplacian "
                     "at 20 points and carry non-pluriharmonicity witnesses (N=2,3)",
                     60.0, [](std::string& why) {
                         for (int n : {2, 3}) {
                             std::vector<SamplePoint> pts = sample_points(n, 20, 7);
                             Expr u = mharmonic_example(n);
                             CheckResult r = check_mharmonic(
                                 "invariant Laplacian at N=" + std::to_string(n), u, pts);
                             if (!r.passed()) {
                                 why = r.name + ": " + r.detail;
                                 return false;
                             }
                             std::optional<std::string> w = mixed_derivative_witness(u, pts);
                             if (!w) {
                                 why = "no nonzero mixed derivative found at N=" +
                                       std::to_string(n);
                                 return false;
                             }
                         }
                         return true;
                     }});

    gates.push_back({"transform of |z1|^2 t^-1 equals (1-|z|^2)/2 + |z1|^2 at N=2 (series, "
                     "D=6) and the matching operator identity holds at D=6 for N in {2,3}",
                     60.0, [](std::string& why) {
                         {
                             QuasiHomSymbol u(2);
                             u.add_term(MultiIndex::unit(2, 1), MultiIndex::unit(2, 1),
                                        GaussianRational(1), RadialProfile::power(-1));
                             BiPolynomial target =
                                 BiPolynomial::one_minus_norm_sq(2).scaled(
                                     GaussianRational(Rational(1, 2))) +
                                 BiPolynomial::variable_z(2, 1) *
                                     BiPolynomial::variable_zbar(2, 1);
                             auto diff = series_difference(berezin_series(u, 6),
                                                           series_of_bipoly(target, 6));
                             if (diff) {
                                 why = "series mismatch: " + diff->to_string();
                                 return false;
                             }
                         }
                         for (int n : {2, 3}) {
                             MultiIndex zero(n);
                             OperatorMatrix lhs(n, 6, 0);
                             for (int j = 1; j <= n; ++j) {
                                 QuasiHomSymbol zj =
                                     QuasiHomSymbol::from_bipoly(BiPolynomial::variable_z(n, j));
                                 QuasiHomSymbol zbj = QuasiHomSymbol::from_bipoly(
                                     BiPolynomial::variable_zbar(n, j));
                                 OperatorMatrix prod = toeplitz_product(zj, zbj, 6);
                                 lhs = lhs + prod.scaled(GaussianRational(j == 1 ? n - 1 : -1));
                             }
                             QuasiHomSymbol h(n);
                             h.add_term(zero, zero, GaussianRational(-1), RadialProfile::one());
                             h.add_term(MultiIndex::unit(n, 1), MultiIndex::unit(n, 1),
                                        GaussianRational(n), RadialProfile::power(-1));
                             if (!operator_equal(lhs, toeplitz_matrix(h, 6), 6)) {
                                 auto diff = operator_difference(lhs, toeplitz_matrix(h, 6), 6);
                                 why = "operator mismatch at N=" + std::to_string(n) +
                                       (diff ? ": " + diff->to_string() : "");
                                 return false;
                             }
                         }
                         return true;
                     }});

    gates.push_back({"every admissible preimage (|alpha|+|beta|+2l <= 2N+1, N in {1,2}) "
                     "reproduces its target at D=6; preimage of z zbar is 1 + log(t) and "
                     "T_z T_zbar = T_{1+log t} at D=8 with diagonal k/(k+1)",
                     180.0, [](std::string& why) {
                         for (int n : {1, 2}) {
                             for (const MultiIndex& alpha : multiindices_up_to(n, 2 * n + 1)) {
                                 for (const MultiIndex& beta : multiindices_up_to(
                                          n, 2 * n + 1 - alpha.order())) {
                                     for (int ell = 0;
                                          alpha.order() + beta.order() + 2 * ell <= 2 * n + 1;
                                          ++ell) {
                                         QuasiHomSymbol u =
                                             preimage_monomial(alpha, beta, ell, n);
                                         BiPolynomial target =
                                             BiPolynomial::monomial(beta, alpha,
                                                                    GaussianRational(1)) *
                                             BiPolynomial::one_minus_norm_sq(n).pow(ell);
                                         auto diff = series_difference(
                                             berezin_series(u, 6), series_of_bipoly(target, 6));
                                         if (!diff) continue;
                                         why = "preimage alpha=" + alpha.to_string() +
                                               " beta=" + beta.to_string() +
                                               " l=" + std::to_string(ell) +
                                               " N=" + std::to_string(n) + ": " +
                                               diff->to_string();
                                         return false;
                                     }
                                 }
                             }
                         }
                         QuasiHomSymbol pre = preimage_monomial(single(1), single(1), 0, 1);
                         if (pre.canonicalized().to_string() != "1 + log(t)") {
                             why = "preimage of z zbar printed as '" +
                                   pre.canonicalized().to_string() + "'";
                             return false;
                         }
                         QuasiHomSymbol z = QuasiHomSymbol::from_bipoly(
                             BiPolynomial::variable_z(1, 1));
                         QuasiHomSymbol zb = QuasiHomSymbol::from_bipoly(
                             BiPolynomial::variable_zbar(1, 1));
                         OperatorMatrix lhs = toeplitz_product(z, zb, 8);
                         if (!operator_equal(lhs, toeplitz_matrix(pre, 8), 8)) {
                             why = "T_z T_zbar differs from the Toeplitz operator of "
                                   "1 + log(t) on the degree-8 band";
                             return false;
                         }
                         for (int k = 0; k <= 8; ++k) {
                             GaussianRational want(Rational(k, k + 1));
                             if (lhs.entry(single(k), single(k)) == want) continue;
                             why = "diagonal entry at degree " + std::to_string(k) +
                                   " is " + to_text(lhs.entry(single(k), single(k))) +
                                   ", expected " + to_text(want);
                             return false;
                         }
                         return true;
                     }});

    gates.push_back({"the product symbol for exponent pair ((2),(2)) at N=1 is refused, "
                     "citing a mixed derivative of degree 2 over the bound 1",
                     5.0, [](std::string& why) {
                         try {
                             product_symbol(single(2), single(2), 1);
                         } catch (const NotRepresentable& e) {
                             if (e.witness_degree == 2 && e.degree_bound == 1) return true;
                             why = std::string("wrong citation: degree ") +
                                   std::to_string(e.witness_degree) + " bound " +
                                   std::to_string(e.degree_bound);
                             return false;
                         }
                         why = "no refusal was raised";
                         return false;
                     }});

    gates.push_back({"commutator of T_z and T_zbar at N=1 has truncated rank D+1 for "
                     "D in {2,4,6} with diagonal entries -1/((k+1)(k+2))",
                     10.0, [](std::string& why) {
                         QuasiHomSymbol z = QuasiHomSymbol::from_bipoly(
                             BiPolynomial::variable_z(1, 1));
                         QuasiHomSymbol zb = QuasiHomSymbol::from_bipoly(
                             BiPolynomial::variable_zbar(1, 1));
                         for (int d : {2, 4, 6}) {
                             OperatorMatrix comm =
                                 toeplitz_product(z, zb, d) - toeplitz_product(zb, z, d);
                             int r = comm.truncated_rank(d);
                             if (r != d + 1) {
                                 why = "rank at D=" + std::to_string(d) + " is " +
                                       std::to_string(r) + ", expected " +
                                       std::to_string(d + 1);
                                 return false;
                             }
                             for (int k = 0; k <= d; ++k) {
                                 GaussianRational want(Rational(-1, (k + 1) * (k + 2)));
                                 if (comm.entry(single(k), single(k)) == want) continue;
                                 why = "entry at degree " + std::to_string(k) + " is " +
                                       to_text(comm.entry(single(k), single(k))) +
                                       ", expected " + to_text(want);
                                 return false;
                             }
                             for (const auto& [col, column] : comm.columns()) {
                                 if (column.size() == 1 && column.count(col)) continue;
                                 why = "off-diagonal entry in column " + col.to_string();
                                 return false;
                             }
                         }
                         return true;
                     }});

    gates.push_back({"the constructed unit scenario factors through T_{-1} + 1 (x) 1 "
                     "exactly at D=8, and 20 seeded scenarios show no biconditional "
                     "inconsistency at D=5, N <= 2",
                     300.0, [](std::string& why) {
                         BiPolynomial one = BiPolynomial::constant(1, GaussianRational(1));
                         BHScenario sc = construct_bh_example({one}, {one}, 1);
                         OperatorMatrix lhs(1, 8, 0);
                         for (const BHPair& pr : sc.pairs) {
                             QuasiHomSymbol phi =
                                 QuasiHomSymbol::from_bipoly(pr.phi.combined());
                             QuasiHomSymbol psi =
                                 QuasiHomSymbol::from_bipoly(pr.psi.combined());
                             lhs = lhs + toeplitz_product(phi, psi, 8);
                         }
                         OperatorMatrix rhs =
                             toeplitz_matrix(QuasiHomSymbol::from_bipoly(
                                                 BiPolynomial::constant(
                                                     1, GaussianRational(-1))),
                                             8) +
                             rank_one_matrix(one, one, 8);
                         if (!operator_equal(lhs, rhs, 8)) {
                             auto diff = operator_difference(lhs, rhs, 8);
                             why = std::string("operator mismatch") +
                                   (diff ? ": " + diff->to_string() : "");
                             return false;
                         }
                         CheckSuite direct = verify_bh_scenario(sc, 8);
                         if (!suite_all_passed(direct, why)) return false;
                         for (unsigned long long seed = 1; seed <= 20; ++seed) {
                             int n = 1 + static_cast<int>(seed % 2);
                             BHScenario r = random_bh_scenario(n, seed);
                             CheckSuite s = verify_bh_scenario(r, 5);
                             bool found = false;
                             for (const CheckResult& c : s.checks) {
                                 if (c.name.find("<=>") == std::string::npos) continue;
                                 found = true;
                                 if (c.passed()) continue;
                                 why = "seed " + std::to_string(seed) + ": " + c.name +
                                       ": " + c.detail;
                                 return false;
                             }
                             if (!found) {
                                 why = "seed " + std::to_string(seed) +
                                       ": no biconditional row in the suite";
                                 return false;
                             }
                             if (!suite_all_passed(s, why)) return false;
                         }
                         return true;
                     }});

    gates.push_back({"radial-correction transform identity for all 1 <= |alpha| < 2N, "
                     "N in {1,2}, exact at D=6",
                     60.0, [](std::string& why) {
                         for (int n : {1, 2}) {
                             MultiIndex zero(n);
                             for (const MultiIndex& alpha : multiindices_up_to(n, 2 * n - 1)) {
                                 if (alpha.order() < 1) continue;
                                 QuasiHomSymbol u(n);
                                 u.add_term(zero, alpha,
                                            GaussianRational(
                                                Rational(alpha.order() + n, n)),
                                            RadialProfile::one());
                                 u.add_term(zero, alpha, GaussianRational(-1),
                                            RadialProfile::power(-alpha.order()));
                                 BiPolynomial target =
                                     BiPolynomial::monomial(
                                         zero, alpha,
                                         GaussianRational(Rational(alpha.order(), n))) *
                                     BiPolynomial::norm_sq(n);
                                 auto diff = series_difference(berezin_series(u, 6),
                                                               series_of_bipoly(target, 6));
                                 if (!diff) continue;
                                 why = "alpha=" + alpha.to_string() +
                                       " N=" + std::to_string(n) + ": " + diff->to_string();
                                 return false;
                             }
                         }
                         return true;
                     }});

    int failures = 0;
    for (size_t i = 0; i < gates.size(); ++i) {
        const Gate& g = gates[i];
        std::string why;
        bool ok = false;
        auto t0 = std::chrono::steady_clock::now();
        try {
            ok = g.body(why);
        } catch (const std::exception& e) {
            ok = false;
            why = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                          .count();
        bool in_budget = secs < g.budget_seconds;
        bool pass = ok && in_budget;
        if (ok && !in_budget) why = "exceeded the time budget";
        std::ostringstream line;
        line << (pass ? "PASS" : "FAIL") << "  [" << std::setw(2) << (i + 1) << "/"
             << gates.size() << "] " << g.name << "  (" << std::fixed
             << std::setprecision(2) << secs << "s, budget " << std::setprecision(0)
             << g.budget_seconds << "s)";
        if (!pass && !why.empty()) line << "  -- " << why;
        std::cout << line.str() << "\n";
        failures += pass ? 0 : 1;
    }
    std::cout << (failures == 0 ? "all gates passed"
                                : std::to_string(failures) + " gate(s) failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
