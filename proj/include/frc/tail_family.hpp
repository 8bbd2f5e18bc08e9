#pragma once

#include <cstdint>
#include <vector>

#include "frc/subset.hpp"

namespace frc {

/// The orbit of S = {1, ..., d} split into g = gcd(d, theta) families.
/// Family j holds S + m*d + j for m = 0, ..., omega-1; each family covers
/// every element exactly a times and the families partition [S].
struct TailFamily {
    Subset base;
    std::vector<std::vector<Subset>> families;
    std::uint64_t omega = 0;
    std::uint64_t a = 0;
    std::uint64_t g = 0;
};

/// Builds the families and checks the partition and per-family coverage
/// before returning (std::logic_error if either fails). d == theta gives a
/// single family {Omega}. Throws std::invalid_argument unless 1 <= d <= theta.
TailFamily tail_family(std::uint32_t d, std::uint32_t theta);

}  // namespace frc
