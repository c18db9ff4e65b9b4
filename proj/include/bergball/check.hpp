#ifndef BERGBALL_CHECK_HPP
#define BERGBALL_CHECK_HPP

#include <string>
#include <vector>

namespace bergball {

enum class Verdict { Pass, Fail, Skip };

/**
 * Epistemic strength of a passing check.  Exact symbolic identities earn
 * ExactProof; truncated or sampled checks only ever claim the weaker labels,
 * and a refutation (exact mismatch, nonzero witness) is always definitive.
 */
enum class Label {
    ExactProof,
    VerifiedAtDegree,   // parameterized by the truncation degree D
    VerifiedAtPoints,   // parameterized by the sample count S
    RefutedWithWitness,
};

struct CheckResult {
    std::string name;
    Verdict verdict = Verdict::Skip;
    Label label = Label::ExactProof;
    int label_param = -1;  // D or S when the label carries one
    std::string detail;    // witness text, parameters, or skip reason

    bool passed() const { return verdict == Verdict::Pass; }
    bool failed() const { return verdict == Verdict::Fail; }
};

std::string verdict_text(Verdict v);
std::string label_text(const CheckResult& c);

/** A named batch of checks (one suite of the final report). */
struct CheckSuite {
    std::string name;
    std::vector<CheckResult> checks;

    void add(CheckResult c) { checks.push_back(std::move(c)); }
    int count(Verdict v) const;
    bool all_passed() const;  // no failures (skips allowed)
};

CheckResult pass_check(std::string name, Label label, int param = -1, std::string detail = "");
CheckResult fail_check(std::string name, std::string witness);
CheckResult skip_check(std::string name, std::string reason);

} // namespace bergball

#endif
