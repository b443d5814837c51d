#pragma once

#include <span>
#include <vector>

#include "forman/complex.hpp"

namespace forman {

/// Norm below which a cell vector counts as the zero vector.
inline constexpr double kZeroVectorTolerance = 1e-12;

bool is_zero_vector(const Vector& v) noexcept;

/// One vector per cell, indexed by cell id.
struct VectorAssignment {
    std::vector<Vector> values;

    const Vector& operator[](CellId id) const { return values.at(static_cast<std::size_t>(id)); }
    std::size_t size() const noexcept { return values.size(); }
};

/// V(cell) = mean of the data vectors at the cell's vertices (2^dim corners
/// for cubes). `data_vectors[i]` belongs to complex point i; an empty vector
/// marks a point without data.
VectorAssignment assign_vertex_average(const CellComplex& complex, std::span<const Vector> data_vectors);

/// V(cell) = mean of the data vectors of the cell's witnesses.
/// `witnesses[id]` lists data-point indices into `data_vectors`.
VectorAssignment assign_dowker_average(const CellComplex& complex,
                                       const std::vector<std::vector<int>>& witnesses,
                                       std::span<const Vector> data_vectors);

}  // namespace forman
