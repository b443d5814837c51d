#pragma once

#include <utility>

#include "forman/complex.hpp"
#include "forman/vector_assignment.hpp"

namespace forman {

/// Barycentric subdivision of a simplicial complex.
///
/// Point i of the result is the barycenter of original cell i; each simplex of
/// the result is a chain sigma_0 < ... < sigma_k of original cells. The
/// subdivided simplex lies in the interior of the chain's largest cell, whose
/// vector it inherits. Throws UnsupportedKindError for cubical input.
std::pair<CellComplex, VectorAssignment> barycentric_subdivision(const CellComplex& complex,
                                                                 const VectorAssignment& vectors);

}  // namespace forman
