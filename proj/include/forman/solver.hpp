#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "forman/complex.hpp"
#include "forman/cost.hpp"

namespace forman {

/// Binary variable of the reduced program: an admissible pair, or a diagonal
/// (lower == upper) that leaves the cell critical.
struct Variable {
    CellId lower = 0;
    CellId upper = 0;
    double cost = 0.0;

    bool is_diagonal() const noexcept { return lower == upper; }
};

/// Reduced 0/1 program: minimize sum cost_k z_k subject to every cell being
/// covered by exactly one selected variable.
///
/// Variables are sorted by (lower, upper) with the diagonal (i, i) first among
/// those of cell i; this order defines the lexicographic tie-break.
struct MatchingProblem {
    std::size_t num_cells = 0;
    double alpha = 0.0;
    std::vector<Variable> variables;
    /// incidence[cell] = indices of the variables touching the cell, ascending.
    std::vector<std::vector<int>> incidence;
};

MatchingProblem build_problem(const CostModel& costs, const CellComplex& complex);

/// A combinatorial vector field: arrows lower -> upper plus fixed (critical)
/// cells. verify_matching also accepts malformed instances, so nothing here is
/// enforced on construction.
struct Matching {
    std::vector<AdmissiblePair> pairs;  // sorted
    std::vector<CellId> critical;       // sorted
    double objective = 0.0;
};

/// At most `max_selected` of `variables` may be selected at once.
struct CycleConstraint {
    std::vector<int> variables;
    std::size_t max_selected = 0;
};

enum class Backend {
    /// Min-cost perfect matching on the dimension-parity bipartite graph.
    bipartite,
    /// Depth-first branch and bound over cells.
    branch_and_bound,
};

struct BranchAndBoundOptions {
    /// Abort with Error after exploring this many nodes; 0 means no limit.
    std::size_t max_nodes = 0;
};

/// Global minimizer of the program. Among optimal selections the one whose
/// ascending variable-index list is lexicographically smallest is returned;
/// costs within 1e-9 count as ties.
Matching solve_exact(const MatchingProblem& problem, Backend backend = Backend::bipartite);

Matching solve_bipartite(const MatchingProblem& problem);
Matching solve_branch_and_bound(const MatchingProblem& problem,
                                std::span<const CycleConstraint> constraints = {},
                                BranchAndBoundOptions options = {});

/// Turns a set of selected variable indices into a Matching.
Matching decode_selection(const MatchingProblem& problem, std::vector<int> selected);

/// Selected variable indices of a matching, ascending. Throws LookupError if
/// a pair is not a variable of the problem.
std::vector<int> selection_of(const MatchingProblem& problem, const Matching& matching);

/// Objective of `matching` under `costs` (pairs priced by costs, cells alpha).
double evaluate(const Matching& matching, const CostModel& costs);

/// Every cell critical.
Matching all_critical(std::size_t num_cells, double alpha);

// ---------------------------------------------------------------------------
// Verification

enum class ViolationKind {
    unknown_cell,     // id outside the complex
    two_out,          // a cell has two images: not a partial map
    two_in,           // a cell is the image of two cells: not injective
    in_and_out,       // Dom and Im meet outside Crit (third condition)
    uncovered,        // a cell in neither Dom nor Im (second condition)
    non_admissible,   // an arrow that is not a codim-1 face -> coface (first condition)
};

std::string to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    CellId cell = 0;
    std::string detail;
};

struct VerificationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    bool has(ViolationKind kind) const noexcept;
    std::string summary() const;
};

/// Checks the three defining conditions of a combinatorial dynamical system
/// and the admissibility of every arrow.
VerificationReport verify_matching(const CellComplex& complex, const Matching& matching);

// ---------------------------------------------------------------------------
// Full N x N program

/// Selected entries (i, j) of a 0/1 matching matrix; (i, i) marks a critical cell.
struct FullAssignment {
    std::vector<std::pair<CellId, CellId>> entries;
};

/// True iff every cell k satisfies sum_i a_ik + sum_j a_kj - a_kk = 1.
bool satisfies_constraints(std::size_t num_cells, const FullAssignment& assignment);

double full_objective(const CostModel& costs, const FullAssignment& assignment);

/// Replaces every inadmissible selected entry (i, j) by the diagonals (i, i)
/// and (j, j). Throws PreconditionError if the input violates the equality
/// constraints.
Matching repair(const CellComplex& complex, const CostModel& costs, const FullAssignment& assignment);

// ---------------------------------------------------------------------------

/// f = matched - cosine_sum + critical * alpha.
struct ObjectiveTerms {
    std::size_t matched = 0;
    double cosine_sum = 0.0;  // sum of 1 - c over matched pairs
    std::size_t critical = 0;
};

ObjectiveTerms objective_decomposition(const Matching& matching, const CostModel& costs);

}  // namespace forman
