#ifndef BERGBALL_RADIAL_HPP
#define BERGBALL_RADIAL_HPP

#include <map>
#include <string>

#include "bergball/scalar.hpp"

namespace bergball {

/**
 * A radial factor rho(t) on (0,1], t = |z|^2, of the shape
 *
 *   rho(t) = sum_k c_k t^k  +  sum_k d_k t^k log(t),   k in Z (finitely many).
 *
 * Negative powers are allowed (integrability is the symbol's concern, not
 * this container's); log^2 and beyond are outside the class and products
 * that would produce them are rejected.
 */
class RadialProfile {
public:
    RadialProfile() = default;

    static RadialProfile one();
    static RadialProfile power(int k, const Rational& c = Rational(1));       // c t^k
    static RadialProfile log_power(int k, const Rational& c = Rational(1));   // c t^k log t

    bool is_zero() const { return power_.empty() && log_.empty(); }
    bool has_log() const { return !log_.empty(); }

    /** Smallest exponent appearing in either part; requires a nonzero profile. */
    int min_power() const;

    const std::map<int, Rational>& power_part() const { return power_; }
    const std::map<int, Rational>& log_part() const { return log_; }

    void add_power(int k, const Rational& c);
    void add_log_power(int k, const Rational& c);

    RadialProfile operator+(const RadialProfile& o) const;
    RadialProfile operator-(const RadialProfile& o) const;
    RadialProfile operator*(const RadialProfile& o) const;  // rejects log * log
    RadialProfile scaled(const Rational& c) const;

    bool operator==(const RadialProfile& o) const {
        return power_ == o.power_ && log_ == o.log_;
    }
    bool operator!=(const RadialProfile& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::map<int, Rational> power_;
    std::map<int, Rational> log_;
};

/**
 * Mellin moment over [0,1]:  int_0^1 t^(zeta-1) rho(t) dt, evaluated exactly:
 * t^k contributes c/(zeta+k) and t^k log t contributes -c/(zeta+k)^2.
 * Requires zeta + k >= 1 for every exponent; raises NonIntegrable otherwise.
 */
Rational radial_mellin(const RadialProfile& rho, int zeta);

} // namespace bergball

#endif
