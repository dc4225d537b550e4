#include "irreg/params.hpp"

#include <algorithm>
#include <cmath>

#include "irreg/stage_error.hpp"

namespace irreg {
namespace {

long double snapped(long double x) {
    const long double r = std::round(x);
    return std::fabs(x - r) <= 1e-9L * std::max(1.0L, std::fabs(x)) ? r : x;
}

std::int64_t ceil_of(long double x) { return static_cast<std::int64_t>(std::ceil(snapped(x))); }

long double powd(std::int64_t d, long double e) { return std::pow(static_cast<long double>(d), e); }

} // namespace

std::string_view stage_name(Stage s) {
    switch (s) {
    case Stage::params: return "params";
    case Stage::partition: return "partition";
    case Stage::step1: return "step1";
    case Stage::step2: return "step2";
    case Stage::buffer: return "buffer";
    case Stage::step3: return "step3";
    case Stage::verify: return "verify";
    }
    return "?";
}

long double ConstructionParams::local_slack() const { return powd(d, 0.5L + gamma); }

long double ConstructionParams::global_slack() const {
    return static_cast<long double>(n) * powd(d, gamma) / std::sqrt(static_cast<long double>(d));
}

ConstructionParams derive_params(std::int64_t n, std::int64_t d, double epsilon, double gamma) {
    if (!(epsilon > 0.0 && epsilon < 0.25 && gamma > 0.0 && 2.0 * gamma < epsilon)) {
        throw StageError(Stage::params, "need 0 < 2*gamma < epsilon < 1/4");
    }
    if (d < 1 || d > n - 1) {
        throw StageError(Stage::params, "need 1 <= d <= n-1");
    }
    ConstructionParams p;
    p.n = n;
    p.d = d;
    p.epsilon = epsilon;
    p.gamma = gamma;

    const long double eps = epsilon;
    const long double gam = gamma;
    const long double nl = static_cast<long double>(n);

    p.s_star = 13 * ceil_of(powd(d, 0.5L + eps) / 13.0L);
    p.omega = std::max<std::int64_t>(ceil_of(nl / powd(d, 1.0L + eps - 2.0L * gam)), 2);
    p.q = (n + 3 * d - 1) / (3 * d);
    p.forward_range = (3 * n + d - 1) / d;
    p.step2_offset = d + (7 * p.omega + p.ceil_ratio() - 1) * p.s_star + ceil_of(250.0L * nl / powd(d, 0.5L - gam));
    p.f2_cap = ceil_of(1000.0L * nl / powd(d, 1.0L + eps - gam));
    const auto frac = n % d;
    p.alpha_num = std::max(frac, d - frac);
    return p;
}

} // namespace irreg
