#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "forman/error.hpp"

namespace forman {

using Vector = Eigen::VectorXd;
using CellId = std::int32_t;

enum class CellKind { simplex, cube };

/// One cell of a complex. Vertices are indices into the complex point list,
/// strictly increasing; a d-simplex has d+1 of them, a d-cube 2^d.
struct Cell {
    CellId id = 0;
    int dim = 0;
    std::vector<int> vertices;
    CellKind kind = CellKind::simplex;
};

/// (lower, upper) with lower a codimension-1 face of upper.
struct AdmissiblePair {
    CellId lower = 0;
    CellId upper = 0;

    auto operator<=>(const AdmissiblePair&) const = default;
};

/// Integer lattice coordinates of a cubical vertex.
using LatticePoint = std::vector<long>;

/// Finite cell complex in R^d, simplicial or cubical.
///
/// Cells are stored in one dense array sorted by (dim, vertices); a cell's id
/// is its index in that array. Only codimension-1 incidence is stored
/// explicitly (facets / cofacets); full face sets are derived from it.
/// Instances are immutable once built.
class CellComplex {
public:
    CellComplex() = default;

    /// Complex generated by the given simplices and all their faces.
    static CellComplex from_simplices(std::vector<Vector> points,
                                      const std::vector<std::vector<int>>& simplices);

    /// Complex generated by axis-aligned cubes (each listed by its 2^k corner
    /// point indices) and all their faces. `lattice[i]` is the integer lattice
    /// position of point i and decides which corners share a face.
    static CellComplex from_cubes(std::vector<Vector> points,
                                  const std::vector<LatticePoint>& lattice,
                                  const std::vector<std::vector<int>>& cubes);

    std::size_t size() const noexcept { return cells_.size(); }
    bool empty() const noexcept { return cells_.empty(); }
    int ambient_dim() const noexcept { return ambient_dim_; }
    /// Largest cell dimension, -1 for the empty complex.
    int dimension() const noexcept;
    CellKind kind() const noexcept { return kind_; }

    std::span<const Cell> cells() const noexcept { return cells_; }
    const Cell& cell(CellId id) const;
    std::span<const Vector> points() const noexcept { return points_; }
    bool contains(CellId id) const noexcept
    {
        return id >= 0 && static_cast<std::size_t>(id) < cells_.size();
    }

    /// Codimension-1 faces, ascending.
    std::span<const CellId> facets(CellId id) const;
    /// Codimension-1 cofaces, ascending.
    std::span<const CellId> cofacets(CellId id) const;

    /// All proper faces of every codimension, ascending.
    std::vector<CellId> faces(CellId id) const;
    /// All cells having `id` as a proper face, ascending.
    std::vector<CellId> cofaces(CellId id) const;
    /// faces(id) together with id itself.
    std::vector<CellId> closure(CellId id) const;
    /// Proper faces only; same set as faces().
    std::vector<CellId> boundary(CellId id) const { return faces(id); }

    /// Every (codim-1 face, cell) pair, sorted by (lower, upper).
    std::vector<AdmissiblePair> admissible_pairs() const;
    bool is_admissible(CellId lower, CellId upper) const;

    /// Arithmetic mean of the cell's vertex coordinates.
    Vector barycenter(CellId id) const;

    /// Cell with exactly this (sorted) vertex list, if present.
    std::optional<CellId> find(const std::vector<int>& vertices) const;

    /// Number of cells of each dimension 0..dimension().
    std::vector<std::size_t> counts_per_dim() const;
    long euler_characteristic() const;

    /// Re-checks the structural invariants; throws Error on the first breach.
    void validate() const;

private:
    void index_cells(std::vector<Cell> cells);

    std::vector<Vector> points_;
    std::vector<Cell> cells_;
    std::vector<std::vector<CellId>> facets_;
    std::vector<std::vector<CellId>> cofacets_;
    std::map<std::vector<int>, CellId> by_vertices_;
    int ambient_dim_ = 0;
    CellKind kind_ = CellKind::simplex;
};

}  // namespace forman
