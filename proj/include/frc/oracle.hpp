#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "frc/code.hpp"

namespace frc {

/// Limits for exhaustive_search, counted in search-tree nodes so runs are
/// reproducible.
struct SearchBudget {
    std::uint64_t max_nodes = 50'000'000;
    std::uint64_t max_subsets = 1u << 20;  // C(theta, d) above this is refused
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Decides existence of an FR code by backtracking over the d-subsets of
/// {1, ..., theta} in lexicographic order, choosing each next subset after
/// the previous one. Uses nothing from the constructor or the feasibility
/// checker. Returns std::nullopt when no code exists; throws BudgetExceeded
/// when the budget runs out first. theta must be at most 64.
std::optional<FrCode> exhaustive_search(const Parameters& params, const SearchBudget& budget = {});

struct Discrepancy {
    Parameters params;
    std::string what;
};

struct CrosscheckOptions {
    SearchBudget budget;
    /// Also probe rho one above and one below n*d/theta (or both sides of
    /// the fraction when it is not an integer); both routes must reject these.
    bool off_balance = false;
};

struct CrosscheckResult {
    std::vector<Discrepancy> discrepancies;
    std::vector<Parameters> skipped;  // oracle budget exhausted
    std::uint64_t points = 0;
    std::uint64_t feasible_points = 0;
};

/// Compares check_feasibility, construct + verify, and exhaustive_search on
/// every theta <= theta_max, 1 <= d <= theta, and n up to
/// min(C(theta, d) + 1, n_cap) with theta | n*d. The extra n = C(theta, d) + 1
/// keeps one capacity-infeasible point per (theta, d) in the grid.
CrosscheckResult theorem_crosscheck(std::uint64_t theta_max, std::uint64_t n_cap,
                                    const CrosscheckOptions& options = {});

}  // namespace frc
