#pragma once

#include <cstdint>

namespace irreg {

// Scale-dependent constants of the three-step construction for an n-vertex
// d-regular graph. Integer fields are exact; powers of d are evaluated in
// long double and snapped to an integer when within 1e-9 relative of one.
struct ConstructionParams {
    std::int64_t n = 0;
    std::int64_t d = 0;
    double epsilon = 0.0;
    double gamma = 0.0;

    std::int64_t s_star = 0;        // 13 * ceil(d^(1/2+eps) / 13)
    std::int64_t omega = 0;         // max(ceil(n / d^(1+eps-2*gamma)), 2)
    std::int64_t q = 0;             // ceil(n / (3d)), base of the AP classes
    std::int64_t step2_offset = 0;  // d + (7*omega + ceil(n/d) - 1)*s_star + ceil(250 n / d^(1/2-gamma))
    std::int64_t f2_cap = 0;        // ceil(1000 n / d^(1+eps-gamma))
    std::int64_t forward_range = 0; // ceil(3n/d)

    // alpha = max({n/d}, 1-{n/d}) = alpha_num / d.
    std::int64_t alpha_num = 0;

    [[nodiscard]] double alpha() const { return static_cast<double>(alpha_num) / static_cast<double>(d); }
    [[nodiscard]] std::int64_t group_width() const { return s_star / 13; }
    [[nodiscard]] std::int64_t floor_ratio() const { return n / d; }
    [[nodiscard]] std::int64_t ceil_ratio() const { return (n + d - 1) / d; }
    // {n/d} >= 1/2
    [[nodiscard]] bool upper_fraction() const { return 2 * (n % d) >= d; }
    // d^(1/2+gamma), the deviation allowed in the per-vertex degree conditions.
    [[nodiscard]] long double local_slack() const;
    // n d^gamma / sqrt(d), the deviation allowed in the bin-prefix conditions.
    [[nodiscard]] long double global_slack() const;
    // epsilon - 2 gamma, the exponent of the resulting bounds.
    [[nodiscard]] double beta() const { return epsilon - 2.0 * gamma; }
};

// Requires 0 < 2*gamma < epsilon < 1/4 and 1 <= d <= n-1; throws StageError(params) otherwise.
ConstructionParams derive_params(std::int64_t n, std::int64_t d, double epsilon, double gamma);

} // namespace irreg
