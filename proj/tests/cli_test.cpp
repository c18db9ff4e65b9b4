#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bergball/cli.hpp"
#include "bergball/errors.hpp"
#include "bergball/mellin.hpp"

using namespace bergball;

namespace {

struct RunOutcome {
    int code;
    std::string out;
    std::string err;
};

RunOutcome run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    REQUIRE(f.good());
    f << text;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("bidegree term grammar: frozen examples") {
    BiPolynomial p = parse_bipoly_text("z^(1)*zbar^(1)", 1);
    CHECK(p == BiPolynomial::monomial(MultiIndex({1}), MultiIndex({1}), GaussianRational(1)));

    BiPolynomial q = parse_bipoly_text("3*z^(1,0)", 2);
    CHECK(q == BiPolynomial::monomial(MultiIndex({1, 0}), MultiIndex(2), GaussianRational(3)));

    BiPolynomial r = parse_bipoly_text("(1/2+3/4*i)*zbar^(0,2) + -2", 2);
    BiPolynomial r_expect(2);
    r_expect.add_term(MultiIndex(2), MultiIndex({0, 2}),
                      GaussianRational(Rational(1, 2), Rational(3, 4)));
    r_expect.add_term(MultiIndex(2), MultiIndex(2), GaussianRational(-2));
    CHECK(r == r_expect);

    CHECK(parse_bipoly_text("  z^(1) * zbar^(1) ", 1) == parse_bipoly_text("z^(1)*zbar^(1)", 1));
    CHECK(parse_bipoly_text("z^(1)*z^(1)", 1) ==
          BiPolynomial::monomial(MultiIndex({2}), MultiIndex(1), GaussianRational(1)));
    CHECK(parse_bipoly_text("5/3", 1) ==
          BiPolynomial::constant(1, GaussianRational(Rational(5, 3))));
    CHECK(parse_bipoly_text("1 + -1", 1).is_zero());
    CHECK(parse_bipoly_text("2*3*z^(1)", 1) ==
          BiPolynomial::monomial(MultiIndex({1}), MultiIndex(1), GaussianRational(6)));
}

TEST_CASE("bidegree term grammar: round-trips the printer") {
    std::vector<BiPolynomial> cases;
    cases.push_back(BiPolynomial::constant(1, GaussianRational(Rational(-7, 3))));
    cases.push_back(BiPolynomial::one_minus_norm_sq(2).pow(2));
    {
        BiPolynomial p(2);
        p.add_term(MultiIndex({1, 0}), MultiIndex({0, 1}),
                   GaussianRational(Rational(1, 2), Rational(-3, 4)));
        p.add_term(MultiIndex({0, 0}), MultiIndex({2, 1}), GaussianRational(5));
        p.add_term(MultiIndex({3, 0}), MultiIndex({0, 0}), GaussianRational(Rational(0), Rational(1)));
        cases.push_back(p);
    }
    {
        BiPolynomial p(3);
        p.add_term(MultiIndex({1, 1, 1}), MultiIndex({0, 2, 0}), GaussianRational(Rational(-1)));
        p.add_term(MultiIndex(3), MultiIndex(3), GaussianRational(Rational(9, 7)));
        cases.push_back(p);
    }
    for (const BiPolynomial& p : cases) {
        CAPTURE(p.to_string());
        CHECK(parse_bipoly_text(p.to_string(), p.dimension()) == p);
    }
}

TEST_CASE("bidegree term grammar: malformed input") {
    CHECK_THROWS_AS(parse_bipoly_text("z^(1,0)", 1), DimensionMismatch);
    CHECK_THROWS_AS(parse_bipoly_text("z^(1)", 2), DimensionMismatch);
    CHECK_THROWS_AS(parse_bipoly_text("z^(-1)", 1), ParseError);
    CHECK_THROWS_AS(parse_bipoly_text("garbage", 1), ParseError);
    CHECK_THROWS_AS(parse_bipoly_text("", 1), ParseError);
    CHECK_THROWS_AS(parse_bipoly_text("   ", 1), ParseError);
    CHECK_THROWS_AS(parse_bipoly_text("z^(1)-1", 1), ParseError);
    CHECK_THROWS_AS(parse_bipoly_text("z^(1", 1), ParseError);
    CHECK_THROWS_AS(parse_bipoly_text("(1/2", 1), ParseError);
    CHECK_THROWS_AS(parse_bipoly_text("+", 1), ParseError);
    CHECK_THROWS_AS(parse_bipoly_text("z^(1)**2", 1), ParseError);
    CHECK_THROWS_AS(parse_bipoly_text("1", 0), DimensionMismatch);
}

TEST_CASE("scenario JSON round-trip") {
    BiPolynomial one = BiPolynomial::constant(1, GaussianRational(1));
    BHScenario sc = construct_bh_example({one}, {one}, 1);
    std::string text = scenario_to_json(sc);
    BHScenario back = scenario_from_json(text);

    CHECK(back.dimension == sc.dimension);
    REQUIRE(back.pairs.size() == sc.pairs.size());
    for (size_t i = 0; i < sc.pairs.size(); ++i) {
        CHECK(back.pairs[i].phi.f == sc.pairs[i].phi.f);
        CHECK(back.pairs[i].phi.g == sc.pairs[i].phi.g);
        CHECK(back.pairs[i].psi.f == sc.pairs[i].psi.f);
        CHECK(back.pairs[i].psi.g == sc.pairs[i].psi.g);
    }
    CHECK(back.h.to_bipoly() == sc.h.to_bipoly());
    REQUIRE(back.rank_one.size() == sc.rank_one.size());
    for (size_t i = 0; i < sc.rank_one.size(); ++i) {
        CHECK(back.rank_one[i].x == sc.rank_one[i].x);
        CHECK(back.rank_one[i].y == sc.rank_one[i].y);
    }

    // Serialization is canonical, so a second round trip is byte-identical.
    CHECK(scenario_to_json(back) == text);

    // A randomized scenario survives the same loop.
    BHScenario rnd = random_bh_scenario(2, 424242);
    BHScenario rnd_back = scenario_from_json(scenario_to_json(rnd));
    CHECK(scenario_to_json(rnd_back) == scenario_to_json(rnd));
    CHECK(verify_bh_scenario(rnd_back, 4).all_passed());
}

TEST_CASE("scenario JSON rejects malformed input") {
    CHECK_THROWS_AS(scenario_from_json("not json"), ParseError);
    CHECK_THROWS_AS(scenario_from_json("[]"), ParseError);
    CHECK_THROWS_AS(scenario_from_json("{}"), ParseError);
    CHECK_THROWS_AS(scenario_from_json(R"({"dimension": 0})"), DimensionMismatch);
    CHECK_THROWS_AS(scenario_from_json(R"({"dimension": 1, "pairs": 3})"), ParseError);
    CHECK_THROWS_AS(
        scenario_from_json(
            R"({"dimension": 1, "h": [{"coeff": "1", "alpha": [1, 0], "beta": [0]}]})"),
        DimensionMismatch);
    CHECK_THROWS_AS(
        scenario_from_json(R"({"dimension": 1, "h": [{"coeff": "x", "alpha": [1], "beta": [0]}]})"),
        ParseError);
    // g must be holomorphic and so must the rank-one factors.
    CHECK_THROWS_AS(
        scenario_from_json(
            R"({"dimension": 1,
                "pairs": [{"g": [{"coeff": "1", "alpha": [0], "beta": [1]}]}]})"),
        NotHolomorphic);
    CHECK_THROWS_AS(
        scenario_from_json(
            R"({"dimension": 1,
                "rank_one": [{"x": [{"coeff": "1", "alpha": [0], "beta": [1]}],
                              "y": [{"coeff": "1", "alpha": [0], "beta": [0]}]}]})"),
        NotHolomorphic);
    // Plain integer coefficients are accepted.
    BHScenario sc = scenario_from_json(
        R"({"dimension": 1, "h": [{"coeff": 2, "alpha": [1], "beta": [1]}]})");
    CHECK(sc.h.to_bipoly() ==
          BiPolynomial::monomial(MultiIndex({1}), MultiIndex({1}), GaussianRational(2)));
}

TEST_CASE("construct subcommand: preimage and range refusal") {
    RunOutcome ok = run({"construct", "--target", "z^(1)*zbar^(1)", "--n", "1"});
    CHECK(ok.code == 0);
    CHECK(contains(ok.out, "1 + log(t)"));
    CHECK(contains(ok.out, "\"in_range\": true"));
    CHECK(ok.err.empty());

    RunOutcome bad = run({"construct", "--target", "z^(2)*zbar^(2)", "--n", "1"});
    CHECK(bad.code == 1);
    CHECK(contains(bad.out, "\"in_range\": false"));
    CHECK(contains(bad.out, "\"witness_degree\": 2"));
    CHECK(contains(bad.out, "\"degree_bound\": 1"));
    CHECK(contains(bad.err, "total degree 2, exceeding the admissible bound 1"));

    // The same target is inside the range one dimension up.
    RunOutcome ok2 = run({"construct", "--target", "z^(2,0)*zbar^(2,0)", "--n", "2"});
    CHECK(ok2.code == 0);
    CHECK(contains(ok2.out, "\"in_range\": true"));

    RunOutcome garbled = run({"construct", "--target", "z^^", "--n", "1"});
    CHECK(garbled.code == 2);
    CHECK(!garbled.err.empty());
}

TEST_CASE("identities subcommand: spec example and selectors") {
    RunOutcome r = run({"identities", "--n", "2", "--d", "6", "--samples", "20", "--seed", "7",
                        "--format", "json"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"command\": \"identities\""));
    CHECK(contains(r.out, "kernel identities N=2"));
    CHECK(contains(r.out, "\"all_passed\": true"));
    CHECK(!contains(r.out, "\"verdict\": \"fail\""));

    RunOutcome again = run({"identities", "--n", "2", "--d", "6", "--samples", "20", "--seed",
                            "7", "--format", "json"});
    CHECK(again.code == 0);
    CHECK(again.out == r.out);  // byte-identical for an identical configuration

    RunOutcome only = run({"identities", "--only", "E_Delta_a,marvelous", "--n", "1",
                           "--samples", "6", "--seed", "5", "--format", "json"});
    CHECK(only.code == 0);
    CHECK(contains(only.out, "E_Delta_a"));
    CHECK(contains(only.out, "marvelous(2)"));
    CHECK(!contains(only.out, "mobius"));

    RunOutcome unknown = run({"identities", "--only", "E_bogus", "--n", "1"});
    CHECK(unknown.code == 2);
    CHECK(contains(unknown.err, "unknown identity selector 'E_bogus'"));
}

TEST_CASE("operators subcommand: consistency suites pass") {
    for (int n : {1, 2}) {
        RunOutcome r = run({"operators", "--n", std::to_string(n), "--d", "5", "--format",
                            "json"});
        CAPTURE(n);
        CHECK(r.code == 0);
        CHECK(contains(r.out, "adjoint symmetry"));
        CHECK(contains(r.out, "transform via matrix entries"));
        CHECK(contains(r.out, "Hankel product detects the mixed pair"));
        CHECK(contains(r.out, "ball average"));
        CHECK(!contains(r.out, "\"verdict\": \"fail\""));
    }
}

TEST_CASE("suite subcommand and markdown rendering") {
    RunOutcome r = run({"suite", "--n", "1", "--d", "5", "--seed", "9"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "# bergball report"));
    CHECK(contains(r.out, "## builtin N=1 D=5 seed=9"));
    CHECK(contains(r.out, "| check | verdict | label | witness |"));
    CHECK(contains(r.out, "| skip |"));  // the dimension-gated rows
    // Pipes inside check names are escaped so the table stays well-formed.
    CHECK(contains(r.out, "\\|z1\\|^2"));

    RunOutcome bad_n = run({"suite", "--n", "4"});
    CHECK(bad_n.code == 2);
}

TEST_CASE("verify-bh subcommand: pass, refute, and reject") {
    BiPolynomial one = BiPolynomial::constant(1, GaussianRational(1));
    write_text("cli_test_scenario.json", scenario_to_json(construct_bh_example({one}, {one}, 1)));

    RunOutcome good = run({"verify-bh", "--scenario", "cli_test_scenario.json", "--d", "6",
                           "--format", "json"});
    CHECK(good.code == 0);
    CHECK(contains(good.out, "\"all_passed\": true"));
    CHECK(contains(good.out, "(A) operator identity"));

    // Same pairs but a wrong h: the operator identity is refuted exactly.
    write_text("cli_test_bad.json", R"({
      "dimension": 1,
      "pairs": [{"f": [{"coeff": "1", "alpha": [1], "beta": [0]}],
                 "v": [{"coeff": "1", "alpha": [1], "beta": [0]}]}],
      "h": [{"coeff": "1", "alpha": [1], "beta": [1]}],
      "rank_one": []
    })");
    RunOutcome bad = run({"verify-bh", "--scenario", "cli_test_bad.json", "--d", "4"});
    CHECK(bad.code == 1);
    CHECK(contains(bad.out, "refuted-with-witness"));
    CHECK(contains(bad.out, "fail"));

    RunOutcome missing = run({"verify-bh", "--scenario", "cli_test_absent.json"});
    CHECK(missing.code == 2);
    CHECK(contains(missing.err, "cannot open file"));

    write_text("cli_test_mangled.json", "{\"dimension\": ");
    RunOutcome mangled = run({"verify-bh", "--scenario", "cli_test_mangled.json"});
    CHECK(mangled.code == 2);
    CHECK(contains(mangled.err, "invalid scenario JSON"));

    std::remove("cli_test_scenario.json");
    std::remove("cli_test_bad.json");
    std::remove("cli_test_mangled.json");
}

TEST_CASE("report subcommand re-renders JSON reports") {
    RunOutcome made = run({"suite", "--n", "1", "--d", "4", "--seed", "2", "--format", "json",
                           "--out", "cli_test_report.json"});
    CHECK(made.code == 0);
    CHECK(contains(made.out, "wrote cli_test_report.json"));

    RunOutcome md = run({"report", "--in", "cli_test_report.json"});
    CHECK(md.code == 0);
    CHECK(contains(md.out, "# bergball report"));
    CHECK(contains(md.out, "## builtin N=1 D=4 seed=2"));

    // The markdown rendering of the file matches the direct markdown output.
    RunOutcome direct = run({"suite", "--n", "1", "--d", "4", "--seed", "2"});
    CHECK(direct.code == 0);
    CHECK(md.out == direct.out);

    write_text("cli_test_badreport.json", R"({"suites": 3})");
    RunOutcome bad = run({"report", "--in", "cli_test_badreport.json"});
    CHECK(bad.code == 2);

    std::remove("cli_test_report.json");
    std::remove("cli_test_badreport.json");
}

TEST_CASE("usage errors and help") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"identities", "--bogus"}).code == 2);
    CHECK(run({"identities", "--n", "99"}).code == 2);
    CHECK(run({"identities", "--format", "yaml"}).code == 2);
    CHECK(run({"construct"}).code == 2);  // --target is required
    CHECK(run({"suite", "--out", "/nonexistent_dir_zz/x.json"}).code == 2);

    RunOutcome help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(contains(help.out, "Usage"));
    CHECK(contains(help.out, "verify-bh"));

    RunOutcome noise = run({"identities", "--n", "99"});
    CHECK(!noise.err.empty());
}

TEST_CASE("canonical symbol form") {
    QuasiHomSymbol u = product_symbol(MultiIndex({1}), MultiIndex({1}), 1);
    CHECK(u.canonicalized().to_string() == "1 + log(t)");

    // The dimension-1 fold merges a diagonal piece into a plain constant.
    QuasiHomSymbol v(1);
    v.add_term(MultiIndex({1}), MultiIndex({1}), GaussianRational(1), RadialProfile::power(-1));
    v.add_term(MultiIndex(1), MultiIndex(1), GaussianRational(1), RadialProfile::one());
    CHECK(v.canonicalized().to_string() == "2");

    // Exact cancellation leaves the empty symbol.
    QuasiHomSymbol w(1);
    w.add_term(MultiIndex({1}), MultiIndex({1}), GaussianRational(1), RadialProfile::power(-1));
    w.add_term(MultiIndex(1), MultiIndex(1), GaussianRational(-1), RadialProfile::one());
    CHECK(w.canonicalized().terms().empty());

    // No fold in higher dimensions, but duplicate keys still merge.
    QuasiHomSymbol x(2);
    x.add_term(MultiIndex({1, 0}), MultiIndex({1, 0}), GaussianRational(1),
               RadialProfile::power(1));
    x.add_term(MultiIndex({1, 0}), MultiIndex({1, 0}), GaussianRational(2),
               RadialProfile::power(1));
    QuasiHomSymbol xc = x.canonicalized();
    REQUIRE(xc.terms().size() == 1);
    CHECK(xc.terms()[0].coeff == GaussianRational(3));
    CHECK(xc.terms()[0].a == MultiIndex({1, 0}));
}
