#include "frc/orbit.hpp"

#include <algorithm>
#include <stdexcept>

namespace frc {

std::uint64_t CyclicOrbit::balance() const noexcept {
    if (members.empty() || canonical.theta() == 0) return 0;
    return canonical.size() * size / canonical.theta();
}

std::uint64_t orbit_size(const Subset& subset) {
    const std::uint64_t theta = subset.theta();
    for (std::uint64_t s = 1; s < theta; ++s) {
        if (shift(subset, static_cast<std::int64_t>(s)) == subset) return s;
    }
    return theta == 0 ? 1 : theta;
}

CyclicOrbit orbit(const Subset& start) {
    if (start.empty()) throw std::invalid_argument("orbit: subset must be nonempty");
    CyclicOrbit result;
    result.members.push_back(start);
    for (std::int64_t s = 1;; ++s) {
        auto next = shift(start, s);
        if (next == start) break;
        result.members.push_back(std::move(next));
    }
    result.size = result.members.size();
    result.canonical = *std::min_element(result.members.begin(), result.members.end());
    return result;
}

bool is_canonical(const Subset& subset) {
    const std::int64_t theta = subset.theta();
    for (std::int64_t s = 1; s < theta; ++s) {
        const auto shifted = shift(subset, s);
        if (shifted == subset) return true;
        if (shifted < subset) return false;
    }
    return true;
}

OrbitEnumerator::OrbitEnumerator(std::uint32_t d, std::uint32_t theta) : d_(d), theta_(theta) {
    if (d == 0 || d > theta) {
        throw std::invalid_argument("enumerate_orbits: requires 1 <= d <= theta");
    }
}

bool OrbitEnumerator::advance() {
    if (exhausted_) return false;
    if (!started_) {
        started_ = true;
        current_.resize(d_);
        for (std::uint32_t i = 0; i < d_; ++i) current_[i] = i;
        return true;
    }
    // Rightmost position that can still move up.
    std::int64_t i = static_cast<std::int64_t>(d_) - 1;
    while (i >= 0 && current_[i] == theta_ - d_ + static_cast<std::uint32_t>(i)) --i;
    if (i < 0) {
        exhausted_ = true;
        return false;
    }
    ++current_[i];
    for (auto j = static_cast<std::size_t>(i) + 1; j < d_; ++j) current_[j] = current_[j - 1] + 1;
    return true;
}

std::optional<CyclicOrbit> OrbitEnumerator::next() {
    while (advance()) {
        auto candidate = Subset::from_residues(theta_, current_);
        if (is_canonical(candidate)) return orbit(candidate);
    }
    return std::nullopt;
}

std::vector<CyclicOrbit> enumerate_orbits(std::uint32_t d, std::uint32_t theta,
                                          std::optional<std::uint64_t> limit) {
    OrbitEnumerator enumerator(d, theta);
    std::vector<CyclicOrbit> out;
    while (!limit || out.size() < *limit) {
        auto next = enumerator.next();
        if (!next) break;
        out.push_back(std::move(*next));
    }
    return out;
}

}  // namespace frc
