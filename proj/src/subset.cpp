#include "frc/subset.hpp"

#include <algorithm>
#include <stdexcept>

namespace frc {

Subset Subset::from_residues(std::uint32_t theta, std::vector<Residue> residues) {
    std::sort(residues.begin(), residues.end());
    if (std::adjacent_find(residues.begin(), residues.end()) != residues.end()) {
        throw std::invalid_argument("Subset: repeated element");
    }
    if (!residues.empty() && residues.back() >= theta) {
        throw std::invalid_argument("Subset: element outside {1, ..., theta}");
    }
    return Subset(theta, std::move(residues));
}

Subset Subset::from_elements(std::uint32_t theta, std::span<const std::uint64_t> elements) {
    std::vector<Residue> residues;
    residues.reserve(elements.size());
    for (const auto element : elements) {
        if (element < 1 || element > theta) {
            throw std::invalid_argument("Subset: element outside {1, ..., theta}");
        }
        residues.push_back(static_cast<Residue>(element - 1));
    }
    return from_residues(theta, std::move(residues));
}

Subset Subset::from_elements(std::uint32_t theta, std::initializer_list<std::uint64_t> elements) {
    return from_elements(theta, std::span<const std::uint64_t>(elements.begin(), elements.size()));
}

Subset Subset::prefix(std::uint32_t theta, std::uint32_t d) {
    if (d > theta) throw std::invalid_argument("Subset::prefix: d exceeds theta");
    std::vector<Residue> residues(d);
    for (std::uint32_t i = 0; i < d; ++i) residues[i] = i;
    return Subset(theta, std::move(residues));
}

std::vector<std::uint64_t> Subset::elements() const {
    std::vector<std::uint64_t> out;
    out.reserve(residues_.size());
    for (const auto r : residues_) out.push_back(std::uint64_t{r} + 1);
    return out;
}

bool Subset::contains_element(std::uint64_t element) const noexcept {
    if (element < 1 || element > theta_) return false;
    return std::binary_search(residues_.begin(), residues_.end(), static_cast<Residue>(element - 1));
}

std::string Subset::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < residues_.size(); ++i) {
        if (i != 0) out += ' ';
        out += std::to_string(std::uint64_t{residues_[i]} + 1);
    }
    return out;
}

std::strong_ordering operator<=>(const Subset& lhs, const Subset& rhs) noexcept {
    if (auto c = lhs.theta_ <=> rhs.theta_; c != 0) return c;
    return std::lexicographical_compare_three_way(lhs.residues_.begin(), lhs.residues_.end(),
                                                  rhs.residues_.begin(), rhs.residues_.end());
}

Subset shift(const Subset& subset, std::int64_t offset) {
    const auto theta = static_cast<std::int64_t>(subset.theta_);
    if (theta == 0) return subset;
    const auto step = static_cast<std::uint64_t>(((offset % theta) + theta) % theta);
    std::vector<Residue> shifted;
    shifted.reserve(subset.residues_.size());
    for (const auto r : subset.residues_) {
        shifted.push_back(static_cast<Residue>((r + step) % static_cast<std::uint64_t>(theta)));
    }
    // Elements that wrapped past theta form a sorted prefix after rotation.
    std::rotate(shifted.begin(),
                std::min_element(shifted.begin(), shifted.end()),
                shifted.end());
    return Subset(subset.theta_, std::move(shifted));
}

}  // namespace frc
