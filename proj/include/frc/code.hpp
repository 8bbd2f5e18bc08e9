#pragma once

#include <vector>

#include "frc/parameters.hpp"
#include "frc/subset.hpp"

namespace frc {

/// A collection of n distinct d-subsets of {1, ..., theta} in which every
/// element occurs exactly rho times. Holding an FrCode does not imply those
/// properties; run verify() to check them.
struct FrCode {
    Parameters params;
    std::vector<Subset> sets;

    friend bool operator==(const FrCode&, const FrCode&) = default;
};

}  // namespace frc
