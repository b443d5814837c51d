#pragma once

#include <optional>
#include <vector>

#include "forman/complex.hpp"
#include "forman/vector_assignment.hpp"

namespace forman {

/// 1 - cos(angle(u, v)), clamped to [0, 2]. Throws DomainError if either
/// vector has zero norm.
double cosine_distance(const Vector& u, const Vector& v);

/// b(upper) - b(lower): the arrow drawn for a matched pair.
Vector displacement(const CellComplex& complex, AdmissiblePair pair);

/// arccos(1 - alpha): a pair whose displacement deviates from V(lower) by
/// more than this angle costs more than alpha.
double critical_angle(double alpha);

/// Costs of the reduced matching program: one entry per admissible pair plus
/// the diagonal value alpha shared by every cell.
struct CostModel {
    double alpha = 0.0;
    std::size_t num_cells = 0;
    std::vector<AdmissiblePair> pairs;  // sorted by (lower, upper)
    std::vector<double> pair_costs;     // parallel to pairs

    /// Cost of an inadmissible off-diagonal entry in the full N x N program.
    double penalty() const noexcept;

    std::optional<std::size_t> pair_index(CellId lower, CellId upper) const;

    /// Entry (i, j) of the full cost matrix: pair cost when (i, j) is an
    /// admissible pair, alpha on the diagonal, penalty() elsewhere.
    double full_cost(CellId i, CellId j) const;

    /// Same pair costs with a different diagonal.
    CostModel with_alpha(double new_alpha) const;
};

/// Builds the cost model. A pair whose lower cell carries the zero vector costs
/// 2; otherwise it costs cosine_distance(V(lower), displacement(pair)).
/// Throws ParameterError for alpha outside [0, 2]. Pair costs are evaluated on
/// FORMAN_THREADS worker threads when that variable is set above 1.
CostModel build_cost_model(const CellComplex& complex, const VectorAssignment& vectors, double alpha);

}  // namespace forman
