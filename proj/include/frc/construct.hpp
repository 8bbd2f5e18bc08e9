#pragma once

#include <stdexcept>

#include "frc/code.hpp"
#include "frc/parameters.hpp"

namespace frc {

class InfeasibleParameters : public std::runtime_error {
public:
    explicit InfeasibleParameters(FeasibilityReport report);
    const FeasibilityReport& report() const noexcept { return report_; }

private:
    FeasibilityReport report_;
};

/// Builds an FR code for feasible parameters by the cyclic-shift method:
/// whole orbits [A] (A not in [S]) are taken in ascending canonical order
/// while more than theta sets remain, and the remaining omega*e sets come
/// from the first e tail families of [S].
///
/// The result is deterministic in params. Throws InfeasibleParameters when
/// check_feasibility rejects params, std::invalid_argument for malformed
/// params or theta beyond 32 bits.
FrCode construct(const Parameters& params);

}  // namespace frc
