#include "frc/tail_family.hpp"

#include <algorithm>
#include <stdexcept>

#include "frc/orbit.hpp"
#include "frc/parameters.hpp"

namespace frc {

namespace {

void check_partition(const TailFamily& tail) {
    const auto theta = tail.base.theta();
    std::vector<Subset> pooled;
    for (const auto& family : tail.families) {
        if (family.size() != tail.omega) throw std::logic_error("tail_family: family size is not omega");
        std::vector<std::uint64_t> counts(theta, 0);
        for (const auto& member : family) {
            for (const auto r : member.residues()) ++counts[r];
            pooled.push_back(member);
        }
        if (std::any_of(counts.begin(), counts.end(), [&](auto c) { return c != tail.a; })) {
            throw std::logic_error("tail_family: uneven element coverage within a family");
        }
    }
    std::sort(pooled.begin(), pooled.end());
    if (std::adjacent_find(pooled.begin(), pooled.end()) != pooled.end()) {
        throw std::logic_error("tail_family: families overlap");
    }
    auto full = orbit(tail.base).members;
    std::sort(full.begin(), full.end());
    if (pooled != full) throw std::logic_error("tail_family: families do not cover [S]");
}

}  // namespace

TailFamily tail_family(std::uint32_t d, std::uint32_t theta) {
    if (d == 0 || d > theta) throw std::invalid_argument("tail_family: requires 1 <= d <= theta");

    TailFamily tail;
    tail.base = Subset::prefix(theta, d);
    if (d == theta) {
        tail.omega = 1;
        tail.a = 1;
        tail.g = 1;
        tail.families.push_back({tail.base});
        return tail;
    }

    const auto pair = smallest_multiplier(d, theta);
    tail.omega = pair.omega;
    tail.a = pair.a;
    tail.g = theta / pair.omega;
    tail.families.reserve(tail.g);
    for (std::uint64_t j = 0; j < tail.g; ++j) {
        std::vector<Subset> family;
        family.reserve(tail.omega);
        for (std::uint64_t m = 0; m < tail.omega; ++m) {
            const auto offset = (m * d + j) % theta;
            family.push_back(shift(tail.base, static_cast<std::int64_t>(offset)));
        }
        tail.families.push_back(std::move(family));
    }
    check_partition(tail);
    return tail;
}

}  // namespace frc
