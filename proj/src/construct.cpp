#include "frc/construct.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "frc/orbit.hpp"
#include "frc/tail_family.hpp"

namespace frc {

namespace {

std::string describe(const FeasibilityReport& report) {
    std::string msg = "infeasible parameters (n=" + std::to_string(report.params.n) +
                      " d=" + std::to_string(report.params.d) +
                      " theta=" + std::to_string(report.params.theta) +
                      " rho=" + std::to_string(report.params.rho) + ")";
    if (!report.balance_ok) msg += ": theta*rho != n*d";
    if (!report.capacity_ok) msg += report.balance_ok ? ": n > C(theta, d)" : ", n > C(theta, d)";
    return msg;
}

}  // namespace

InfeasibleParameters::InfeasibleParameters(FeasibilityReport report)
    : std::runtime_error(describe(report)), report_(std::move(report)) {}

FrCode construct(const Parameters& params) {
    auto report = check_feasibility(params);
    if (!report.feasible) throw InfeasibleParameters(std::move(report));
    if (params.theta > std::numeric_limits<std::uint32_t>::max()) {
        throw std::invalid_argument("construct: theta exceeds the supported range");
    }
    const auto theta = static_cast<std::uint32_t>(params.theta);
    const auto d = static_cast<std::uint32_t>(params.d);

    FrCode code{params, {}};
    code.sets.reserve(std::min<std::uint64_t>(params.n, 1u << 20));

    if (theta == d) {
        code.sets.push_back(Subset::prefix(theta, d));
        return code;
    }

    const auto base = Subset::prefix(theta, d);
    std::uint64_t remaining = params.n;
    OrbitEnumerator orbits(d, theta);
    while (remaining > theta) {
        auto next = orbits.next();
        // Lexicographic enumeration starts at S itself.
        if (next && next->canonical == base) next = orbits.next();
        if (!next) throw std::logic_error("construct: ran out of orbits outside [S]");
        remaining -= next->size;
        for (auto& member : next->members) code.sets.push_back(std::move(member));
    }

    if (remaining > 0) {
        auto tail = tail_family(d, theta);
        if (remaining % tail.omega != 0) {
            throw std::logic_error("construct: omega does not divide the remaining count");
        }
        const auto e = remaining / tail.omega;
        if (e > tail.g) throw std::logic_error("construct: more tail families needed than exist");
        for (std::uint64_t j = 0; j < e; ++j) {
            for (auto& member : tail.families[j]) code.sets.push_back(std::move(member));
        }
    }
    return code;
}

}  // namespace frc
