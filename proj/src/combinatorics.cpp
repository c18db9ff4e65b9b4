#include "bergball/combinatorics.hpp"

namespace bergball {

Integer factorial(int n) {
    if (n < 0) throw PreconditionViolation("factorial of negative integer");
    Integer f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    // multiplicative form keeps intermediates integral
    Integer num = 1;
    for (int j = 0; j < k; ++j) num *= (n - j);
    return num / factorial(k);
}

Integer multinomial(const MultiIndex& k) {
    return factorial(k.order()) / k.factorial();
}

Rational monomial_norm_sq(const MultiIndex& alpha) {
    int n = alpha.dimension();
    return Rational(factorial(n) * alpha.factorial(), factorial(n + alpha.order()));
}

Rational sphere_moment(const MultiIndex& mu) {
    int n = mu.dimension();
    return Rational(factorial(n - 1) * mu.factorial(), factorial(n - 1 + mu.order()));
}

} // namespace bergball
