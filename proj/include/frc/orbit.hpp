#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "frc/subset.hpp"

namespace frc {

/// Equivalence class [A] of a subset under cyclic shift.
struct CyclicOrbit {
    std::vector<Subset> members;  // A, A+1, ..., A+(size-1)
    std::uint64_t size = 0;
    Subset canonical;             // lexicographically smallest member

    /// Number of members containing each element: d * size / theta.
    std::uint64_t balance() const noexcept;
};

CyclicOrbit orbit(const Subset& start);

/// Least s >= 1 with shift(A, s) == A.
std::uint64_t orbit_size(const Subset& subset);

/// True if no cyclic shift of subset is lexicographically smaller.
bool is_canonical(const Subset& subset);

/// Walks the d-subsets of {1, ..., theta} in lexicographic order and yields
/// each orbit once, at its canonical representative.
class OrbitEnumerator {
public:
    /// Throws std::invalid_argument unless 1 <= d <= theta.
    OrbitEnumerator(std::uint32_t d, std::uint32_t theta);

    std::optional<CyclicOrbit> next();

private:
    bool advance();

    std::uint32_t d_;
    std::uint32_t theta_;
    std::vector<Residue> current_;
    bool started_ = false;
    bool exhausted_ = false;
};

/// All orbits (or the first limit of them) in ascending canonical order.
std::vector<CyclicOrbit> enumerate_orbits(std::uint32_t d, std::uint32_t theta,
                                          std::optional<std::uint64_t> limit = std::nullopt);

}  // namespace frc
