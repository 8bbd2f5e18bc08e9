#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace frc {

using Residue = std::uint32_t;

/// A set of distinct elements of {1, ..., theta}.
///
/// Elements are stored as sorted 0-based residues (element x is residue x - 1),
/// so ordering on residues coincides with lexicographic ordering on the
/// 1-based element lists. Two subsets compare equal only if they live in the
/// same ambient set and hold the same elements.
class Subset {
public:
    Subset() = default;

    /// Throws std::invalid_argument on a residue >= theta or a repeated residue.
    static Subset from_residues(std::uint32_t theta, std::vector<Residue> residues);
    /// Same, from 1-based elements.
    static Subset from_elements(std::uint32_t theta, std::span<const std::uint64_t> elements);
    static Subset from_elements(std::uint32_t theta, std::initializer_list<std::uint64_t> elements);
    /// {1, ..., d}.
    static Subset prefix(std::uint32_t theta, std::uint32_t d);

    std::uint32_t theta() const noexcept { return theta_; }
    std::size_t size() const noexcept { return residues_.size(); }
    bool empty() const noexcept { return residues_.empty(); }
    std::span<const Residue> residues() const noexcept { return residues_; }
    std::vector<std::uint64_t> elements() const;
    bool contains_element(std::uint64_t element) const noexcept;

    /// Space-separated 1-based elements, e.g. "1 2 4".
    std::string to_string() const;

    friend bool operator==(const Subset&, const Subset&) = default;
    friend std::strong_ordering operator<=>(const Subset& lhs, const Subset& rhs) noexcept;

private:
    Subset(std::uint32_t theta, std::vector<Residue> residues)
        : theta_(theta), residues_(std::move(residues)) {}

    std::uint32_t theta_ = 0;
    std::vector<Residue> residues_;

    friend Subset shift(const Subset& subset, std::int64_t offset);
};

/// Adds offset to every element and reduces modulo theta into {1, ..., theta}.
/// Negative offsets and offsets beyond theta are allowed.
Subset shift(const Subset& subset, std::int64_t offset);

}  // namespace frc
