#pragma once

#include <cstdint>
#include <optional>

namespace frc {

/// Problem instance: n node subsets of size d drawn from {1, ..., theta},
/// each element repeated rho times. k is carried through untouched.
struct Parameters {
    std::uint64_t n = 0;
    std::uint64_t d = 0;
    std::uint64_t theta = 0;
    std::uint64_t rho = 0;
    std::optional<std::uint64_t> k;

    bool well_formed() const noexcept {
        return n >= 1 && d >= 1 && theta >= 1 && rho >= 1 && (!k || *k >= 1);
    }

    friend bool operator==(const Parameters&, const Parameters&) = default;
};

/// omega is the least positive integer with d * omega = 0 (mod theta),
/// and a = d * omega / theta.
struct OmegaPair {
    std::uint64_t omega = 0;
    std::uint64_t a = 0;

    friend bool operator==(const OmegaPair&, const OmegaPair&) = default;
};

OmegaPair smallest_multiplier(std::uint64_t d, std::uint64_t theta);

/// True iff C(theta, d) >= bound. Stops as soon as the running binomial
/// reaches bound, so nothing wider than 128 bits is ever formed.
bool binomial_at_least(std::uint64_t theta, std::uint64_t d, std::uint64_t bound) noexcept;

/// theta * rho == n * d without wrapping.
bool balance_holds(const Parameters& params) noexcept;

struct FeasibilityReport {
    Parameters params;
    bool feasible = false;
    bool balance_ok = false;   // theta * rho == n * d
    bool capacity_ok = false;  // n <= C(theta, d)
    OmegaPair omega_pair;
    std::uint64_t g = 0;       // gcd(d, theta)
};

/// Throws std::invalid_argument if params is not well formed.
FeasibilityReport check_feasibility(const Parameters& params);

}  // namespace frc
