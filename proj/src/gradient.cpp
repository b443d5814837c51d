#include "forman/gradient.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace forman {

namespace {

constexpr CellId kNone = -1;

struct VPathGraph {
    std::vector<std::vector<CellId>> next;
};

VPathGraph vpath_graph(const CellComplex& complex, const Matching& matching)
{
    const std::size_t n = complex.size();
    std::vector<CellId> image(n, kNone), preimage(n, kNone);
    for (const auto& p : matching.pairs) {
        image[p.lower] = p.upper;
        preimage[p.upper] = p.lower;
    }
    VPathGraph g;
    g.next.resize(n);
    for (std::size_t c = 0; c < n; ++c) {
        if (image[c] != kNone) {
            g.next[c].push_back(image[c]);
        } else if (preimage[c] != kNone) {
            // Only facets that are themselves lower cells can continue a path.
            for (CellId f : complex.facets(static_cast<CellId>(c)))
                if (f != preimage[c] && image[f] != kNone) g.next[c].push_back(f);
        }
    }
    return g;
}

// Nodes left after repeatedly deleting nodes of in-degree 0. Every cycle
// survives; so may nodes downstream of one.
std::vector<char> cyclic_core(const VPathGraph& g)
{
    const std::size_t n = g.next.size();
    std::vector<int> indeg(n, 0);
    for (const auto& out : g.next)
        for (CellId t : out) ++indeg[t];
    std::vector<CellId> stack;
    for (std::size_t c = 0; c < n; ++c)
        if (indeg[c] == 0) stack.push_back(static_cast<CellId>(c));
    std::vector<char> alive(n, 1);
    while (!stack.empty()) {
        const CellId c = stack.back();
        stack.pop_back();
        alive[c] = 0;
        for (CellId t : g.next[c])
            if (--indeg[t] == 0) stack.push_back(t);
    }
    return alive;
}

// Shortest cycle through `start` within the alive set, empty if none.
std::vector<CellId> shortest_cycle_through(const VPathGraph& g, const std::vector<char>& alive, CellId start,
                                           std::size_t limit)
{
    std::vector<CellId> parent(g.next.size(), kNone);
    std::vector<std::size_t> depth(g.next.size(), 0);
    std::vector<char> seen(g.next.size(), 0);
    std::deque<CellId> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
        const CellId c = queue.front();
        queue.pop_front();
        if (depth[c] + 1 >= limit) continue;
        for (CellId t : g.next[c]) {
            if (!alive[t]) continue;
            if (t == start) {
                std::vector<CellId> cycle;
                for (CellId x = c; x != kNone; x = parent[x]) cycle.push_back(x);
                std::reverse(cycle.begin(), cycle.end());
                return cycle;
            }
            if (seen[t]) continue;
            seen[t] = 1;
            parent[t] = c;
            depth[t] = depth[c] + 1;
            queue.push_back(t);
        }
    }
    return {};
}

}  // namespace

GradientCheck is_gradient(const CellComplex& complex, const Matching& matching)
{
    const auto report = verify_matching(complex, matching);
    if (!report.ok()) throw PreconditionError("matching is not admissible: " + report.summary());

    const auto g = vpath_graph(complex, matching);
    const auto alive = cyclic_core(g);
    GradientCheck check;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t c = 0; c < alive.size(); ++c) {
        if (!alive[c]) continue;
        auto cycle = shortest_cycle_through(g, alive, static_cast<CellId>(c), best);
        if (!cycle.empty() && cycle.size() < best) {
            best = cycle.size();
            check.cycle = std::move(cycle);
        }
    }
    if (check.cycle.empty()) return check;

    check.gradient = false;
    // A cycle alternates lower and upper; start it at a lower cell.
    if (complex.cell(check.cycle[0]).dim > complex.cell(check.cycle[1]).dim)
        std::rotate(check.cycle.begin(), check.cycle.begin() + 1, check.cycle.end());
    for (std::size_t i = 0; i + 1 < check.cycle.size(); i += 2) check.arcs.push_back({check.cycle[i], check.cycle[i + 1]});
    std::sort(check.arcs.begin(), check.arcs.end());
    return check;
}

Threshold all_critical_threshold(const CostModel& costs)
{
    double l = 2.0;
    for (double c : costs.pair_costs) l = std::min(l, c);
    Threshold t;
    t.value = l / 2.0;
    t.degenerate = l <= 0.0;
    return t;
}

std::vector<double> default_alpha_grid()
{
    std::vector<double> grid;
    for (int k = 200; k >= 0; --k) grid.push_back(k / 100.0);
    return grid;
}

SweepResult alpha_sweep(const CellComplex& complex, const VectorAssignment& vectors,
                        std::span<const double> alpha_grid, Backend backend)
{
    if (alpha_grid.empty()) throw ParameterError("alpha grid is empty");
    for (std::size_t i = 0; i < alpha_grid.size(); ++i) {
        if (!(alpha_grid[i] >= 0.0 && alpha_grid[i] <= 2.0))
            throw ParameterError("alpha grid value outside [0, 2]");
        if (i > 0 && alpha_grid[i] > alpha_grid[i - 1]) throw ParameterError("alpha grid is not descending");
    }

    const CostModel base = build_cost_model(complex, vectors, alpha_grid.front());
    for (double alpha : alpha_grid) {
        const CostModel costs = base.with_alpha(alpha);
        const auto problem = build_problem(costs, complex);
        auto m = solve_exact(problem, backend);
        if (is_gradient(complex, m).gradient) return {alpha, std::move(m), false};
    }

    const auto t = all_critical_threshold(base);
    SweepResult r;
    r.alpha = t.value > 0.0 ? std::nextafter(t.value, 0.0) : 0.0;
    r.matching = all_critical(complex.size(), r.alpha);
    r.fallback = true;
    return r;
}

ConstrainedResult solve_gradient_constrained(const MatchingProblem& problem, const CellComplex& complex,
                                             BranchAndBoundOptions options)
{
    ConstrainedResult result;
    // Without rows the bipartite backend gives the same lexicographic optimum faster.
    result.matching = solve_bipartite(problem);
    for (;;) {
        const auto check = is_gradient(complex, result.matching);
        if (check.gradient) return result;
        Matching arcs;
        arcs.pairs = check.arcs;
        CycleConstraint row;
        row.variables = selection_of(problem, arcs);
        row.max_selected = row.variables.size() - 1;
        result.constraints.push_back(std::move(row));
        result.matching = solve_branch_and_bound(problem, result.constraints, options);
    }
}

}  // namespace forman
