#include "bergball/radial.hpp"

#include <algorithm>

#include "bergball/errors.hpp"

namespace bergball {

RadialProfile RadialProfile::one() { return power(0); }

RadialProfile RadialProfile::power(int k, const Rational& c) {
    RadialProfile r;
    r.add_power(k, c);
    return r;
}

RadialProfile RadialProfile::log_power(int k, const Rational& c) {
    RadialProfile r;
    r.add_log_power(k, c);
    return r;
}

int RadialProfile::min_power() const {
    if (is_zero()) throw PreconditionViolation("min_power of zero profile");
    int m = 0;
    bool first = true;
    for (const auto& [k, c] : power_) {
        m = first ? k : std::min(m, k);
        first = false;
    }
    for (const auto& [k, c] : log_) {
        m = first ? k : std::min(m, k);
        first = false;
    }
    return m;
}

void RadialProfile::add_power(int k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = power_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) power_.erase(it);
    }
}

void RadialProfile::add_log_power(int k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = log_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) log_.erase(it);
    }
}

RadialProfile RadialProfile::operator+(const RadialProfile& o) const {
    RadialProfile r = *this;
    for (const auto& [k, c] : o.power_) r.add_power(k, c);
    for (const auto& [k, c] : o.log_) r.add_log_power(k, c);
    return r;
}

RadialProfile RadialProfile::operator-(const RadialProfile& o) const {
    return *this + o.scaled(Rational(-1));
}

RadialProfile RadialProfile::operator*(const RadialProfile& o) const {
    if (has_log() && o.has_log())
        throw PreconditionViolation(
            "product of two log-carrying radial profiles leaves the class (log^2)");
    RadialProfile r;
    for (const auto& [k1, c1] : power_)
        for (const auto& [k2, c2] : o.power_) r.add_power(k1 + k2, c1 * c2);
    for (const auto& [k1, c1] : power_)
        for (const auto& [k2, c2] : o.log_) r.add_log_power(k1 + k2, c1 * c2);
    for (const auto& [k1, c1] : log_)
        for (const auto& [k2, c2] : o.power_) r.add_log_power(k1 + k2, c1 * c2);
    return r;
}

RadialProfile RadialProfile::scaled(const Rational& c) const {
    RadialProfile r;
    if (c == 0) return r;
    for (const auto& [k, x] : power_) r.power_.emplace(k, x * c);
    for (const auto& [k, x] : log_) r.log_.emplace(k, x * c);
    return r;
}

std::string RadialProfile::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    auto piece = [&s](const Rational& c, int k, bool with_log) {
        if (!s.empty()) s += " + ";
        std::string body;
        if (k != 0) body = "t^" + std::to_string(k);
        if (with_log) {
            if (!body.empty()) body += "*";
            body += "log(t)";
        }
        if (body.empty()) {
            s += to_text(c);
        } else if (c == 1) {
            s += body;
        } else {
            s += to_text(c) + "*" + body;
        }
    };
    for (const auto& [k, c] : power_) piece(c, k, false);
    for (const auto& [k, c] : log_) piece(c, k, true);
    return s;
}

Rational radial_mellin(const RadialProfile& rho, int zeta) {
    Rational out = 0;
    for (const auto& [k, c] : rho.power_part()) {
        if (zeta + k < 1)
            throw NonIntegrable("Mellin moment of t^" + std::to_string(k) + " at zeta=" +
                                std::to_string(zeta));
        out += c / Rational(zeta + k);
    }
    for (const auto& [k, c] : rho.log_part()) {
        if (zeta + k < 1)
            throw NonIntegrable("Mellin moment of t^" + std::to_string(k) + " log t at zeta=" +
                                std::to_string(zeta));
        out -= c / (Rational(zeta + k) * Rational(zeta + k));
    }
    return out;
}

} // namespace bergball
