#include "forman/dynamics.hpp"

#include <algorithm>
#include <numeric>

namespace forman {

std::size_t FlowGraph::arc_count() const noexcept
{
    std::size_t n = 0;
    for (const auto& s : successors) n += s.size();
    return n;
}

FlowGraph multiflow(const CellComplex& complex, const Matching& matching)
{
    const auto report = verify_matching(complex, matching);
    if (!report.ok()) throw PreconditionError("matching is not admissible: " + report.summary());

    const std::size_t n = complex.size();
    FlowGraph g;
    g.role.assign(n, FlowRole::critical);
    g.successors.resize(n);
    std::vector<CellId> partner(n, -1);
    for (const auto& p : matching.pairs) {
        g.role[p.lower] = FlowRole::lower;
        g.role[p.upper] = FlowRole::upper;
        partner[p.lower] = p.upper;
        partner[p.upper] = p.lower;
    }
    for (std::size_t c = 0; c < n; ++c) {
        const auto id = static_cast<CellId>(c);
        switch (g.role[c]) {
        case FlowRole::critical:
            g.successors[c] = complex.closure(id);
            break;
        case FlowRole::upper:
            for (CellId f : complex.faces(id))
                if (f != partner[c]) g.successors[c].push_back(f);
            break;
        case FlowRole::lower:
            g.successors[c].push_back(partner[c]);
            break;
        }
    }
    return g;
}

SccDecomposition strongly_connected_components(const FlowGraph& flow)
{
    // Iterative Tarjan.
    const std::size_t n = flow.size();
    constexpr int kUnvisited = -1;
    std::vector<int> index(n, kUnvisited), low(n, 0), raw(n, -1);
    std::vector<char> on_stack(n, 0);
    std::vector<CellId> stack;
    std::vector<std::pair<CellId, std::size_t>> call;
    int counter = 0, found = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        call.push_back({static_cast<CellId>(root), 0});
        while (!call.empty()) {
            auto& [v, edge] = call.back();
            if (edge == 0 && index[v] == kUnvisited) {
                index[v] = low[v] = counter++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            const auto& out = flow.successors[v];
            if (edge < out.size()) {
                const CellId w = out[edge++];
                if (index[w] == kUnvisited) {
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                CellId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    raw[w] = found;
                } while (w != v);
                ++found;
            }
            const CellId done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
        }
    }

    // Renumber by smallest member; scanning cells in order meets each
    // component first at its smallest cell.
    SccDecomposition out;
    out.component_of.assign(n, -1);
    std::vector<int> renamed(static_cast<std::size_t>(found), -1);
    for (std::size_t c = 0; c < n; ++c) {
        int& r = renamed[raw[c]];
        if (r < 0) {
            r = static_cast<int>(out.components.size());
            out.components.emplace_back();
        }
        out.component_of[c] = r;
        out.components[r].push_back(static_cast<CellId>(c));
    }
    return out;
}

CycleReport classify_recurrence(const CellComplex& complex, const FlowGraph& flow)
{
    if (flow.size() != complex.size()) throw PreconditionError("flow graph does not match the complex");
    CycleReport report;
    report.scc = strongly_connected_components(flow);
    report.critical_census.assign(static_cast<std::size_t>(std::max(complex.dimension() + 1, 0)), 0);

    for (std::size_t k = 0; k < report.scc.components.size(); ++k) {
        const auto& cells = report.scc.components[k];
        if (cells.size() == 1) {
            const CellId c = cells.front();
            if (flow.role[c] == FlowRole::critical) {
                report.critical_singletons.push_back(c);
                ++report.critical_census[complex.cell(c).dim];
            }
            continue;
        }
        CycleComponent cyc;
        cyc.id = static_cast<int>(k);
        cyc.cells = cells;
        cyc.d = complex.dimension();
        for (CellId c : cells) {
            const int dim = complex.cell(c).dim;
            if (cyc.dims.size() <= static_cast<std::size_t>(dim)) cyc.dims.resize(dim + 1, 0);
            ++cyc.dims[dim];
            cyc.d = std::min(cyc.d, dim);
            const auto inside = std::count_if(flow.successors[c].begin(), flow.successors[c].end(), [&](CellId t) {
                return report.scc.component_of[t] == static_cast<int>(k);
            });
            if (inside > 1) ++cyc.self_intersections;
        }
        report.cycles.push_back(std::move(cyc));
    }
    return report;
}

}  // namespace forman
