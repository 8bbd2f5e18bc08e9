#pragma once

#include <cstdint>
#include <map>

#include "frc/code.hpp"

namespace frc {

struct VerificationReport {
    bool valid = false;
    bool count_ok = false;        // |C| == n
    bool cardinality_ok = false;  // every |V_i| == d
    bool distinct_ok = false;     // no repeated subset
    bool coverage_ok = false;     // every element of {1..theta} occurs rho times
    std::map<std::uint64_t, std::uint64_t> coverage_histogram;  // element -> occurrences
};

/// Checks the FR-code definition by direct counting. Never throws on a bad
/// code; every failure shows up as a cleared flag. Elements from a subset
/// built over a different theta that fall outside {1..params.theta} clear
/// coverage_ok.
VerificationReport verify(const FrCode& code);

}  // namespace frc
