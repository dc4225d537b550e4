#include "irreg/bounds.hpp"

#include <cmath>
#include <numeric>

namespace irreg {

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) {
        throw std::invalid_argument("zero denominator");
    }
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const auto g = std::gcd(n, d);
    num = n / g;
    den = d / g;
}

std::string Rational::str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

BoundSet bounds(std::int64_t n, std::int64_t d, double beta) {
    if (n < 2 || d < 1 || d > n - 1) {
        throw std::invalid_argument("bounds need n >= 2 and 1 <= d <= n-1");
    }
    if (!(beta > 0.0 && beta < 0.25)) {
        throw std::invalid_argument("beta must lie in (0, 1/4)");
    }
    BoundSet b;
    b.beta = beta;
    b.safe_lower = (n + d - 1 + d - 1) / d;
    b.paper_lower = (n + d + 1 + d - 1) / d;
    b.thm_dense = Rational(n + 28 * d, d);
    const long double dl = static_cast<long double>(d);
    b.thm_dense_applicable = std::pow(dl, 1.0L + beta) >= static_cast<long double>(n);
    b.thm_general = static_cast<double>(static_cast<long double>(n) / dl * (1.0L + 14.0L / std::pow(dl, static_cast<long double>(beta))) + 28.0L);
    return b;
}

} // namespace irreg
