#include "frc/verify.hpp"

#include <set>

namespace frc {

VerificationReport verify(const FrCode& code) {
    const auto& params = code.params;
    VerificationReport report;
    report.count_ok = code.sets.size() == params.n;

    for (std::uint64_t element = 1; element <= params.theta; ++element) {
        report.coverage_histogram.emplace(element, 0);
    }

    bool stray_element = false;
    bool all_sized = true;
    std::set<std::vector<std::uint64_t>> seen;
    bool distinct = true;
    for (const auto& set : code.sets) {
        if (set.size() != params.d) all_sized = false;
        auto elements = set.elements();
        for (const auto element : elements) {
            auto it = report.coverage_histogram.find(element);
            if (it == report.coverage_histogram.end()) {
                stray_element = true;
            } else {
                ++it->second;
            }
        }
        if (!seen.insert(std::move(elements)).second) distinct = false;
    }

    report.cardinality_ok = all_sized;
    report.distinct_ok = distinct;
    report.coverage_ok = !stray_element;
    for (const auto& [element, count] : report.coverage_histogram) {
        if (count != params.rho) report.coverage_ok = false;
    }
    report.valid = report.count_ok && report.cardinality_ok && report.distinct_ok && report.coverage_ok;
    return report;
}

}  // namespace frc
