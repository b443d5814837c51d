#pragma once

#include <span>
#include <vector>

#include "forman/complex.hpp"
#include "forman/cost.hpp"
#include "forman/solver.hpp"
#include "forman/vector_assignment.hpp"

namespace forman {

/// Outcome of the acyclicity test. When the field is not gradient, `cycle`
/// is a shortest closed V-path (alternating lower, upper, lower, ...) and
/// `arcs` are its matched pairs, sorted.
struct GradientCheck {
    bool gradient = true;
    std::vector<CellId> cycle;
    std::vector<AdmissiblePair> arcs;
};

/// True iff the V-path graph (lower -> V(lower), upper -> its other facets)
/// has no directed cycle. Critical cells only carry their own self-loop and
/// never lie on a longer cycle, so they are left out.
/// Throws PreconditionError for a matching that fails verify_matching.
GradientCheck is_gradient(const CellComplex& complex, const Matching& matching);

struct Threshold {
    /// l / 2 with l the smallest pair cost.
    double value = 0.0;
    /// Some pair costs 0; no positive alpha forces the all-critical optimum.
    bool degenerate = false;
};

/// For every alpha strictly below the threshold the all-critical matching is
/// the unique optimum. With no pairs at all the threshold is 1 (l = 2).
Threshold all_critical_threshold(const CostModel& costs);

/// 2.00, 1.99, ..., 0.00.
std::vector<double> default_alpha_grid();

struct SweepResult {
    double alpha = 0.0;
    Matching matching;
    /// No grid value gave a gradient optimum; alpha sits just below the
    /// all-critical threshold and the matching is all-critical.
    bool fallback = false;
};

/// First value of a non-increasing grid in [0, 2] whose optimum is gradient.
/// Throws ParameterError for an empty or malformed grid.
SweepResult alpha_sweep(const CellComplex& complex, const VectorAssignment& vectors,
                        std::span<const double> alpha_grid, Backend backend = Backend::bipartite);

struct ConstrainedResult {
    Matching matching;
    /// Rows added during lazy generation, in order.
    std::vector<CycleConstraint> constraints;
};

/// Optimum over gradient matchings: solve, forbid the shortest cycle found
/// (its pairs may not all be selected together), and repeat.
ConstrainedResult solve_gradient_constrained(const MatchingProblem& problem, const CellComplex& complex,
                                             BranchAndBoundOptions options = {});

}  // namespace forman
