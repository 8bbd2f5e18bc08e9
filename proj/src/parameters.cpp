#include "frc/parameters.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace frc {

namespace {
__extension__ using u128 = unsigned __int128;
}

OmegaPair smallest_multiplier(std::uint64_t d, std::uint64_t theta) {
    if (d == 0 || theta == 0) {
        throw std::invalid_argument("smallest_multiplier: d and theta must be positive");
    }
    const auto g = std::gcd(d, theta);
    return {theta / g, d / g};
}

bool binomial_at_least(std::uint64_t theta, std::uint64_t d, std::uint64_t bound) noexcept {
    if (bound == 0) return true;
    if (d > theta) return false;
    const std::uint64_t k = std::min(d, theta - d);
    // C(theta - k + i, i) is nondecreasing in i, so the first time it reaches
    // bound the answer is settled.
    u128 running = 1;
    if (running >= bound) return true;
    const std::uint64_t base = theta - k;
    for (std::uint64_t i = 1; i <= k; ++i) {
        running = running * (base + i) / i;
        if (running >= bound) return true;
    }
    return false;
}

bool balance_holds(const Parameters& params) noexcept {
    return static_cast<u128>(params.theta) * params.rho == static_cast<u128>(params.n) * params.d;
}

FeasibilityReport check_feasibility(const Parameters& params) {
    if (!params.well_formed()) {
        throw std::invalid_argument("check_feasibility: parameters must be positive integers");
    }
    FeasibilityReport report;
    report.params = params;
    report.balance_ok = balance_holds(params);
    report.capacity_ok = binomial_at_least(params.theta, params.d, params.n);
    report.feasible = report.balance_ok && report.capacity_ok;
    report.omega_pair = smallest_multiplier(params.d, params.theta);
    report.g = std::gcd(params.d, params.theta);
    return report;
}

}  // namespace frc
