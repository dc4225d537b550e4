#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace irreg {

// Reduced fraction with positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);

    [[nodiscard]] double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    [[nodiscard]] std::string str() const;

    // Exact comparison of an integer against this value.
    [[nodiscard]] bool exceeds(std::int64_t k) const { return num > static_cast<__int128>(k) * den; }

    friend bool operator==(const Rational&, const Rational&) = default;
};

struct BoundSet {
    std::int64_t safe_lower = 0;  // ceil((n+d-1)/d)
    std::int64_t paper_lower = 0; // ceil((n+d+1)/d)
    Rational thm_dense;           // n/d + 28
    bool thm_dense_applicable = false; // d^(1+beta) >= n
    double thm_general = 0.0;     // n/d * (1 + 14/d^beta) + 28
    double beta = 0.0;
};

// Requires n >= 2, 1 <= d <= n-1 and beta in (0, 1/4); throws std::invalid_argument otherwise.
BoundSet bounds(std::int64_t n, std::int64_t d, double beta);

} // namespace irreg
