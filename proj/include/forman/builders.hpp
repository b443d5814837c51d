#pragma once

#include <span>
#include <vector>

#include "forman/complex.hpp"

namespace forman {

/// Delaunay complex of distinct points in the plane.
///
/// Incremental Bowyer-Watson with exact predicates. Cocircular quadruples are
/// resolved by symbolically lifting point i by eps^(i+1): among the four points
/// the one with the smallest index decides, which yields a unique, valid
/// triangulation for any input. Collinear input (at least 3 points) gives the
/// path of edges along the line. Throws DegenerateInputError for fewer than
/// three points or duplicates.
CellComplex delaunay_2d(std::span<const Vector> points);

/// In-circle test under the symbolic perturbation used by delaunay_2d.
/// Indices select points from `points`; (a, b, c) must be counter-clockwise.
/// Never returns "cocircular": true iff d is inside.
bool delaunay_conflict(std::span<const Vector> points, int a, int b, int c, int d);

/// Cubical complex of lattice data: every elementary cube of pitch `side`
/// whose corners are all data points, together with its faces. Each point
/// must lie within 1e-9*side of a lattice vertex; the lattice origin is the
/// first point. Throws SnapError naming the offending point otherwise, and
/// ParameterError for duplicate lattice vertices or d outside {2, 3}.
CellComplex cubical_grid(std::span<const Vector> points, double side);

/// Result of binning scattered samples onto a cubical lattice.
struct VoxelComplex {
    CellComplex complex;
    /// Data vector for each lattice vertex (complex point), averaged over the
    /// samples in the occupied cubes around it.
    std::vector<Vector> vertex_vectors;
};

/// Cubical complex made of every lattice cube of pitch `side` that contains at
/// least one sample, plus faces. Lattice anchored at the componentwise minimum.
VoxelComplex voxel_grid(std::span<const Vector> points, std::span<const Vector> vectors, double side);

/// Dowker complex of a relation between landmarks Y and data points X.
struct DowkerComplex {
    CellComplex complex;
    /// witnesses[cell] = data points related to every landmark of the cell.
    std::vector<std::vector<int>> witnesses;
};

/// Metric relation: y R x iff |y - x| < radius.
DowkerComplex dowker_complex(std::span<const Vector> data_points, std::span<const Vector> landmarks,
                             double radius);

/// Explicit relation: related[y][x] says whether landmark y relates to point x.
DowkerComplex dowker_complex(std::span<const Vector> landmarks,
                             const std::vector<std::vector<bool>>& related);

}  // namespace forman
