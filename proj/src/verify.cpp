#include "forman/solver.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace forman {

std::string to_string(ViolationKind kind)
{
    switch (kind) {
    case ViolationKind::unknown_cell: return "unknown cell";
    case ViolationKind::two_out: return "not a partial map";
    case ViolationKind::two_in: return "not injective";
    case ViolationKind::in_and_out: return "third condition: Dom and Im meet outside Crit";
    case ViolationKind::uncovered: return "second condition: cell in neither Dom nor Im";
    case ViolationKind::non_admissible: return "first condition: non-admissible pair";
    }
    return "unknown violation";
}

bool VerificationReport::has(ViolationKind kind) const noexcept
{
    return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

std::string VerificationReport::summary() const
{
    if (ok()) return "ok";
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) os << "; ";
        os << to_string(violations[i].kind) << " at cell " << violations[i].cell;
        if (!violations[i].detail.empty()) os << " (" << violations[i].detail << ")";
    }
    return os.str();
}

VerificationReport verify_matching(const CellComplex& complex, const Matching& matching)
{
    VerificationReport report;
    auto add = [&](ViolationKind k, CellId c, std::string detail = {}) {
        report.violations.push_back({k, c, std::move(detail)});
    };

    // All arrows, critical cells as self-arrows.
    std::vector<std::pair<CellId, CellId>> arrows;
    for (const auto& p : matching.pairs) arrows.emplace_back(p.lower, p.upper);
    for (CellId c : matching.critical) arrows.emplace_back(c, c);

    std::vector<std::pair<CellId, CellId>> known;
    for (const auto& [a, b] : arrows) {
        if (!complex.contains(a) || !complex.contains(b)) {
            add(ViolationKind::unknown_cell, complex.contains(a) ? b : a);
            continue;
        }
        known.emplace_back(a, b);
    }

    const std::size_t n = complex.size();
    std::vector<int> out_degree(n, 0), in_degree(n, 0);
    std::vector<char> moves_out(n, 0), moved_into(n, 0);
    for (const auto& [a, b] : known) {
        ++out_degree[a];
        ++in_degree[b];
        if (a != b) {
            moves_out[a] = 1;
            moved_into[b] = 1;
            if (!complex.is_admissible(a, b))
                add(ViolationKind::non_admissible, a, std::to_string(a) + " -> " + std::to_string(b));
        }
    }
    for (std::size_t c = 0; c < n; ++c) {
        const auto id = static_cast<CellId>(c);
        if (out_degree[c] > 1) add(ViolationKind::two_out, id);
        if (in_degree[c] > 1) add(ViolationKind::two_in, id);
        if (moves_out[c] && moved_into[c]) add(ViolationKind::in_and_out, id);
        if (out_degree[c] == 0 && in_degree[c] == 0) add(ViolationKind::uncovered, id);
    }
    return report;
}

bool satisfies_constraints(std::size_t num_cells, const FullAssignment& assignment)
{
    std::vector<int> touch(num_cells, 0);
    std::map<std::pair<CellId, CellId>, int> seen;
    for (const auto& [i, j] : assignment.entries) {
        if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= num_cells || static_cast<std::size_t>(j) >= num_cells)
            return false;
        if (++seen[{i, j}] > 1) return false;  // a 0/1 matrix holds each entry once
        ++touch[i];
        if (i != j) ++touch[j];
    }
    return std::all_of(touch.begin(), touch.end(), [](int t) { return t == 1; });
}

double full_objective(const CostModel& costs, const FullAssignment& assignment)
{
    double f = 0.0;
    for (const auto& [i, j] : assignment.entries) f += costs.full_cost(i, j);
    return f;
}

Matching repair(const CellComplex& complex, const CostModel& costs, const FullAssignment& assignment)
{
    if (!satisfies_constraints(complex.size(), assignment))
        throw PreconditionError("assignment violates the one-incidence-per-cell constraints");
    Matching m;
    for (const auto& [i, j] : assignment.entries) {
        if (i == j) {
            m.critical.push_back(i);
        } else if (complex.is_admissible(i, j)) {
            m.pairs.push_back({i, j});
        } else {
            m.critical.push_back(i);
            m.critical.push_back(j);
        }
    }
    std::sort(m.pairs.begin(), m.pairs.end());
    std::sort(m.critical.begin(), m.critical.end());
    m.objective = evaluate(m, costs);
    return m;
}

}  // namespace forman
