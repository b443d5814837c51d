#include "forman/solver.hpp"

#include <algorithm>

namespace forman {

MatchingProblem build_problem(const CostModel& costs, const CellComplex& complex)
{
    if (costs.num_cells != complex.size()) throw ParameterError("cost model does not match the complex");
    MatchingProblem p;
    p.num_cells = complex.size();
    p.alpha = costs.alpha;
    p.variables.reserve(costs.pairs.size() + p.num_cells);

    // Merge diagonals into the (lower, upper)-sorted pair list.
    std::size_t k = 0;
    for (CellId c = 0; c < static_cast<CellId>(p.num_cells); ++c) {
        p.variables.push_back({c, c, costs.alpha});
        for (; k < costs.pairs.size() && costs.pairs[k].lower == c; ++k)
            p.variables.push_back({c, costs.pairs[k].upper, costs.pair_costs[k]});
    }
    if (k != costs.pairs.size()) throw ParameterError("cost model pairs are not sorted");

    p.incidence.assign(p.num_cells, {});
    for (std::size_t v = 0; v < p.variables.size(); ++v) {
        const auto& var = p.variables[v];
        p.incidence[var.lower].push_back(static_cast<int>(v));
        if (!var.is_diagonal()) p.incidence[var.upper].push_back(static_cast<int>(v));
    }
    for (auto& inc : p.incidence) std::sort(inc.begin(), inc.end());
    return p;
}

Matching decode_selection(const MatchingProblem& problem, std::vector<int> selected)
{
    std::sort(selected.begin(), selected.end());
    Matching m;
    for (int v : selected) {
        const auto& var = problem.variables.at(static_cast<std::size_t>(v));
        if (var.is_diagonal())
            m.critical.push_back(var.lower);
        else
            m.pairs.push_back({var.lower, var.upper});
        m.objective += var.cost;
    }
    std::sort(m.critical.begin(), m.critical.end());
    return m;
}

std::vector<int> selection_of(const MatchingProblem& problem, const Matching& matching)
{
    auto index_of = [&](CellId lower, CellId upper) {
        if (lower < 0 || static_cast<std::size_t>(lower) >= problem.num_cells)
            throw LookupError("cell " + std::to_string(lower) + " is not in the problem");
        for (int v : problem.incidence[lower])
            if (problem.variables[v].lower == lower && problem.variables[v].upper == upper) return v;
        throw LookupError("(" + std::to_string(lower) + ", " + std::to_string(upper) + ") is not a variable");
    };
    std::vector<int> out;
    for (const auto& p : matching.pairs) out.push_back(index_of(p.lower, p.upper));
    for (CellId c : matching.critical) out.push_back(index_of(c, c));
    std::sort(out.begin(), out.end());
    return out;
}

double evaluate(const Matching& matching, const CostModel& costs)
{
    double f = 0.0;
    for (const auto& p : matching.pairs) f += costs.full_cost(p.lower, p.upper);
    f += costs.alpha * static_cast<double>(matching.critical.size());
    return f;
}

Matching all_critical(std::size_t num_cells, double alpha)
{
    Matching m;
    for (std::size_t c = 0; c < num_cells; ++c) m.critical.push_back(static_cast<CellId>(c));
    m.objective = alpha * static_cast<double>(num_cells);
    return m;
}

Matching solve_exact(const MatchingProblem& problem, Backend backend)
{
    switch (backend) {
    case Backend::bipartite:
        return solve_bipartite(problem);
    case Backend::branch_and_bound:
        return solve_branch_and_bound(problem);
    }
    throw ParameterError("unknown backend");
}

ObjectiveTerms objective_decomposition(const Matching& matching, const CostModel& costs)
{
    ObjectiveTerms t;
    t.matched = matching.pairs.size();
    t.critical = matching.critical.size();
    for (const auto& p : matching.pairs) t.cosine_sum += 1.0 - costs.full_cost(p.lower, p.upper);
    return t;
}

}  // namespace forman
