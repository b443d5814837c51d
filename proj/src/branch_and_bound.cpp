#include "forman/solver.hpp"

#include <algorithm>
#include <limits>

namespace forman {

namespace {

constexpr double kTie = 1e-9;

// Depth-first search that always branches on the smallest uncovered cell and
// tries its variables in index order. The sequence of choices along a branch is
// then the sorted selection itself, so branches are visited in lexicographic
// order, and replacing the incumbent only on strict improvement keeps the
// lexicographically smallest optimum.
class BranchAndBound {
public:
    BranchAndBound(const MatchingProblem& p, std::span<const CycleConstraint> constraints,
                   BranchAndBoundOptions options)
        : p_(p), constraints_(constraints), options_(options), covered_(p.num_cells, 0),
          in_constraints_(p.variables.size()), load_(constraints.size(), 0), cheapest_(p.num_cells)
    {
        for (std::size_t k = 0; k < constraints.size(); ++k)
            for (int v : constraints[k].variables) in_constraints_.at(static_cast<std::size_t>(v)).push_back(k);

        // Per-cell lower bound: a pair's cost is split between its two cells.
        for (std::size_t c = 0; c < p.num_cells; ++c) {
            double best = std::numeric_limits<double>::infinity();
            for (int v : p.incidence[c]) {
                const auto& var = p.variables[v];
                best = std::min(best, var.is_diagonal() ? var.cost : var.cost / 2.0);
            }
            cheapest_[c] = best;
            remaining_bound_ += best;
        }
    }

    std::vector<int> run()
    {
        search(0, 0.0);
        return best_selection_;
    }

private:
    bool admissible_under_constraints(int v) const
    {
        for (std::size_t k : in_constraints_[v])
            if (load_[k] + 1 > constraints_[k].max_selected) return false;
        return true;
    }

    void take(int v, int delta)
    {
        for (std::size_t k : in_constraints_[v]) load_[k] = static_cast<std::size_t>(static_cast<long>(load_[k]) + delta);
        const auto& var = p_.variables[v];
        const char flag = delta > 0 ? 1 : 0;
        covered_[var.lower] = flag;
        covered_[var.upper] = flag;
        const double bound = cheapest_[var.lower] + (var.is_diagonal() ? 0.0 : cheapest_[var.upper]);
        remaining_bound_ += delta > 0 ? -bound : bound;
    }

    void search(std::size_t next, double cost)
    {
        if (options_.max_nodes && ++nodes_ > options_.max_nodes)
            throw Error("branch and bound exceeded the node limit");
        while (next < p_.num_cells && covered_[next]) ++next;
        if (next == p_.num_cells) {
            if (cost < best_cost_ - kTie) {
                best_cost_ = cost;
                best_selection_ = chosen_;
            }
            return;
        }
        const auto c = static_cast<CellId>(next);
        for (int v : p_.incidence[c]) {
            const auto& var = p_.variables[v];
            if (var.lower != c) continue;  // (p, c) with p < c: p is already covered
            if (!var.is_diagonal() && covered_[var.upper]) continue;
            if (!admissible_under_constraints(v)) continue;
            const double bound_after =
                remaining_bound_ - cheapest_[c] - (var.is_diagonal() ? 0.0 : cheapest_[var.upper]);
            if (cost + var.cost + bound_after >= best_cost_ - kTie) continue;
            take(v, +1);
            chosen_.push_back(v);
            search(next + 1, cost + var.cost);
            chosen_.pop_back();
            take(v, -1);
        }
    }

    const MatchingProblem& p_;
    std::span<const CycleConstraint> constraints_;
    BranchAndBoundOptions options_;
    std::vector<char> covered_;
    std::vector<std::vector<std::size_t>> in_constraints_;
    std::vector<std::size_t> load_;
    std::vector<double> cheapest_;
    double remaining_bound_ = 0.0;
    std::vector<int> chosen_;
    std::vector<int> best_selection_;
    double best_cost_ = std::numeric_limits<double>::infinity();
    std::size_t nodes_ = 0;
};

}  // namespace

Matching solve_branch_and_bound(const MatchingProblem& problem, std::span<const CycleConstraint> constraints,
                                BranchAndBoundOptions options)
{
    BranchAndBound bb(problem, constraints, options);
    auto selected = bb.run();
    if (selected.empty() && problem.num_cells > 0) throw Error("branch and bound found no feasible selection");
    return decode_selection(problem, std::move(selected));
}

}  // namespace forman
