#include "bergball/check.hpp"

namespace bergball {

std::string verdict_text(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Skip: return "skip";
    }
    return "?";
}

std::string label_text(const CheckResult& c) {
    switch (c.label) {
        case Label::ExactProof:
            return "exact-proof";
        case Label::VerifiedAtDegree:
            return "verified-at-degree-" + std::to_string(c.label_param);
        case Label::VerifiedAtPoints:
            return "verified-at-" + std::to_string(c.label_param) + "-points";
        case Label::RefutedWithWitness:
            return "refuted-with-witness";
    }
    return "?";
}

int CheckSuite::count(Verdict v) const {
    int n = 0;
    for (const auto& c : checks)
        if (c.verdict == v) ++n;
    return n;
}

bool CheckSuite::all_passed() const { return count(Verdict::Fail) == 0; }

CheckResult pass_check(std::string name, Label label, int param, std::string detail) {
    CheckResult c;
    c.name = std::move(name);
    c.verdict = Verdict::Pass;
    c.label = label;
    c.label_param = param;
    c.detail = std::move(detail);
    return c;
}

CheckResult fail_check(std::string name, std::string witness) {
    CheckResult c;
    c.name = std::move(name);
    c.verdict = Verdict::Fail;
    c.label = Label::RefutedWithWitness;
    c.detail = std::move(witness);
    return c;
}

CheckResult skip_check(std::string name, std::string reason) {
    CheckResult c;
    c.name = std::move(name);
    c.verdict = Verdict::Skip;
    c.detail = std::move(reason);
    return c;
}

} // namespace bergball
