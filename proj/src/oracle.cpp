#include "frc/oracle.hpp"

#include <algorithm>
#include <bit>

#include "frc/construct.hpp"
#include "frc/verify.hpp"

namespace frc {

namespace {

using Mask = std::uint64_t;

// All d-subsets of {0..theta-1} as bitmasks, in lexicographic order of their
// sorted element lists. Returns false if there are more than cap of them.
bool lexicographic_subsets(std::uint32_t theta, std::uint32_t d, std::uint64_t cap,
                           std::vector<Mask>& out) {
    out.clear();
    if (d > theta) return true;
    std::vector<std::uint32_t> pick(d);
    for (std::uint32_t i = 0; i < d; ++i) pick[i] = i;
    while (true) {
        if (out.size() >= cap) return false;
        Mask m = 0;
        for (const auto p : pick) m |= Mask{1} << p;
        out.push_back(m);
        std::int64_t i = static_cast<std::int64_t>(d) - 1;
        while (i >= 0 && pick[i] == theta - d + static_cast<std::uint32_t>(i)) --i;
        if (i < 0) return true;
        ++pick[i];
        for (auto j = static_cast<std::size_t>(i) + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
    }
}

class Search {
public:
    Search(std::vector<Mask> subsets, std::uint32_t theta, std::uint32_t d, std::uint64_t rho,
           std::uint64_t max_nodes)
        : subsets_(std::move(subsets)), theta_(theta), d_(d), need_(theta, rho), total_need_(theta * rho),
          max_nodes_(max_nodes) {
        // first_with_min_[e]: index of the first subset whose smallest element is >= e.
        first_with_min_.assign(theta + 1, subsets_.size());
        for (std::size_t i = subsets_.size(); i-- > 0;) {
            const auto low = static_cast<std::uint32_t>(std::countr_zero(subsets_[i]));
            for (std::uint32_t e = 0; e <= low; ++e) first_with_min_[e] = i;
        }
    }

    bool run(std::uint64_t slots) { return descend(0, slots); }
    const std::vector<std::size_t>& chosen() const { return chosen_; }
    Mask subset(std::size_t index) const { return subsets_[index]; }

private:
    bool descend(std::size_t start, std::uint64_t slots) {
        if (slots == 0) {
            return std::all_of(need_.begin(), need_.end(), [](auto n) { return n == 0; });
        }
        if (++nodes_ > max_nodes_) throw BudgetExceeded("exhaustive_search: node budget exhausted");
        // Each remaining pick covers exactly d elements.
        if (total_need_ != slots * d_) return false;

        // Later subsets never have a smaller minimum, so the smallest element
        // still in need must be the minimum of the very next pick.
        std::uint32_t lowest = theta_;
        Mask saturated = 0;
        for (std::uint32_t e = 0; e < theta_; ++e) {
            if (need_[e] > slots) return false;
            if (need_[e] == 0) {
                saturated |= Mask{1} << e;
            } else if (lowest == theta_) {
                lowest = e;
            }
        }
        if (lowest == theta_) return false;

        for (std::size_t i = std::max(start, first_with_min_[lowest]); i < subsets_.size(); ++i) {
            const Mask candidate = subsets_[i];
            if (static_cast<std::uint32_t>(std::countr_zero(candidate)) != lowest) break;
            if (subsets_.size() - i < slots) break;
            if (candidate & saturated) continue;
            apply(candidate, -1);
            chosen_.push_back(i);
            if (descend(i + 1, slots - 1)) return true;
            chosen_.pop_back();
            apply(candidate, +1);
        }
        return false;
    }

    void apply(Mask m, int delta) {
        while (m) {
            const auto e = std::countr_zero(m);
            need_[e] = static_cast<std::uint64_t>(static_cast<std::int64_t>(need_[e]) + delta);
            total_need_ = static_cast<std::uint64_t>(static_cast<std::int64_t>(total_need_) + delta);
            m &= m - 1;
        }
    }

    std::vector<Mask> subsets_;
    std::uint32_t theta_;
    std::uint32_t d_;
    std::vector<std::uint64_t> need_;
    std::uint64_t total_need_;
    std::vector<std::size_t> first_with_min_;
    std::vector<std::size_t> chosen_;
    std::uint64_t nodes_ = 0;
    std::uint64_t max_nodes_;
};

}  // namespace

std::optional<FrCode> exhaustive_search(const Parameters& params, const SearchBudget& budget) {
    if (!params.well_formed()) throw std::invalid_argument("exhaustive_search: malformed parameters");
    if (params.theta > 64) throw std::invalid_argument("exhaustive_search: theta must be at most 64");
    const auto theta = static_cast<std::uint32_t>(params.theta);
    if (params.d > theta) return std::nullopt;
    const auto d = static_cast<std::uint32_t>(params.d);

    std::vector<Mask> subsets;
    if (!lexicographic_subsets(theta, d, budget.max_subsets, subsets)) {
        throw BudgetExceeded("exhaustive_search: too many candidate subsets");
    }
    if (params.n > subsets.size()) return std::nullopt;
    // No element can sit in more sets than there are.
    if (params.rho > params.n) return std::nullopt;

    Search search(std::move(subsets), theta, d, params.rho, budget.max_nodes);
    if (!search.run(params.n)) return std::nullopt;

    FrCode code{params, {}};
    for (const auto index : search.chosen()) {
        std::vector<Residue> residues;
        for (Mask m = search.subset(index); m; m &= m - 1) residues.push_back(static_cast<Residue>(std::countr_zero(m)));
        code.sets.push_back(Subset::from_residues(theta, std::move(residues)));
    }
    return code;
}

namespace {

void check_point(const Parameters& params, const CrosscheckOptions& options, bool expect_balance,
                 CrosscheckResult& result) {
    ++result.points;
    const auto report = check_feasibility(params);
    auto flag = [&](std::string what) { result.discrepancies.push_back({params, std::move(what)}); };

    if (report.balance_ok != expect_balance) flag("balance flag disagrees with grid arithmetic");
    if (report.feasible) {
        ++result.feasible_points;
        try {
            const auto code = construct(params);
            if (!verify(code).valid) flag("constructed code fails verification");
        } catch (const std::exception& e) {
            flag(std::string("construct threw on feasible parameters: ") + e.what());
        }
    } else {
        try {
            (void)construct(params);
            flag("construct accepted infeasible parameters");
        } catch (const InfeasibleParameters&) {
        }
    }

    try {
        const auto found = exhaustive_search(params, options.budget);
        if (found && !verify(*found).valid) flag("oracle returned an invalid code");
        if (found.has_value() != report.feasible) {
            flag(found ? "oracle found a code for infeasible parameters"
                       : "oracle found no code for feasible parameters");
        }
    } catch (const BudgetExceeded&) {
        result.skipped.push_back(params);
    }
}

}  // namespace

CrosscheckResult theorem_crosscheck(std::uint64_t theta_max, std::uint64_t n_cap,
                                    const CrosscheckOptions& options) {
    CrosscheckResult result;
    for (std::uint64_t theta = 1; theta <= theta_max; ++theta) {
        for (std::uint64_t d = 1; d <= theta; ++d) {
            // Runs through n = C(theta, d) + 1, the first capacity failure.
            for (std::uint64_t n = 1; n <= n_cap && binomial_at_least(theta, d, n - 1); ++n) {
                const auto total = n * d;
                const bool integral = total % theta == 0;
                if (integral) check_point({n, d, theta, total / theta, std::nullopt}, options, true, result);
                if (!options.off_balance) continue;
                const auto low = total / theta;
                const auto high = low + 1;
                const auto below = integral ? low - 1 : low;
                if (below >= 1) check_point({n, d, theta, below, std::nullopt}, options, false, result);
                check_point({n, d, theta, high, std::nullopt}, options, false, result);
            }
        }
    }
    return result;
}

}  // namespace frc
