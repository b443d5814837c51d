#pragma once

#include <cstddef>
#include <vector>

#include "forman/complex.hpp"
#include "forman/solver.hpp"

namespace forman {

/// Which branch of the multi-flow a cell takes.
enum class FlowRole { critical, upper, lower };

/// Directed graph of the multi-flow: critical cells point to their closure,
/// matched upper cells to their proper faces except their partner, matched
/// lower cells to their partner only.
struct FlowGraph {
    std::vector<FlowRole> role;
    std::vector<std::vector<CellId>> successors;  // ascending

    std::size_t size() const noexcept { return role.size(); }
    std::size_t arc_count() const noexcept;
};

/// Throws PreconditionError when the matching fails verify_matching.
FlowGraph multiflow(const CellComplex& complex, const Matching& matching);

/// Strongly connected components numbered by ascending smallest cell id.
struct SccDecomposition {
    std::vector<int> component_of;               // per cell
    std::vector<std::vector<CellId>> components;  // cells ascending
};

SccDecomposition strongly_connected_components(const FlowGraph& flow);

/// A component of size > 1: a recurrent set of non-critical cells.
struct CycleComponent {
    int id = 0;  // index into SccDecomposition::components
    std::vector<CellId> cells;
    /// dims[k] = number of cells of dimension k.
    std::vector<std::size_t> dims;
    /// Smallest cell dimension; the component is a d-cycle when it only
    /// holds dims d and d + 1.
    int d = 0;
    /// Cells with more than one successor inside the component.
    std::size_t self_intersections = 0;
    /// No self-intersection: the component is one simple closed path.
    bool elementary() const noexcept { return self_intersections == 0; }
};

struct CycleReport {
    SccDecomposition scc;
    std::vector<CycleComponent> cycles;
    /// Critical cells, each its own component through its self-loop.
    std::vector<CellId> critical_singletons;
    /// census[k] = critical cells of dimension k, k = 0..complex dimension.
    std::vector<std::size_t> critical_census;
};

CycleReport classify_recurrence(const CellComplex& complex, const FlowGraph& flow);

}  // namespace forman
