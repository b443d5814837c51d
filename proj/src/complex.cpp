#include "forman/complex.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace forman {

namespace {

std::string describe(const std::vector<int>& vertices)
{
    std::string s = "[";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(vertices[i]);
    }
    return s + "]";
}

int check_points(const std::vector<Vector>& points)
{
    if (points.empty()) return 0;
    const auto d = points.front().size();
    for (const auto& p : points)
        if (p.size() != d) throw ParameterError("points have inconsistent dimension");
    return static_cast<int>(d);
}

std::vector<int> normalized(const std::vector<int>& raw, std::size_t npoints)
{
    if (raw.empty()) throw ParameterError("cell with no vertices");
    std::vector<int> v = raw;
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw ParameterError("repeated vertex in cell " + describe(raw));
    if (v.front() < 0 || static_cast<std::size_t>(v.back()) >= npoints)
        throw ParameterError("vertex index out of range in cell " + describe(raw));
    return v;
}

// Axes along which the corners of a cube are spread, with the low/high
// lattice coordinate on each.
struct CubeShape {
    std::vector<int> axes;
    std::vector<long> lo, hi;
};

CubeShape cube_shape(const std::vector<int>& corners, const std::vector<LatticePoint>& lattice)
{
    CubeShape s;
    const auto d = lattice[corners.front()].size();
    for (std::size_t a = 0; a < d; ++a) {
        long lo = lattice[corners.front()][a], hi = lo;
        for (int c : corners) {
            lo = std::min(lo, lattice[c][a]);
            hi = std::max(hi, lattice[c][a]);
        }
        if (lo != hi) {
            s.axes.push_back(static_cast<int>(a));
            s.lo.push_back(lo);
            s.hi.push_back(hi);
        }
    }
    return s;
}

std::vector<std::vector<int>> cube_facets(const std::vector<int>& corners,
                                          const std::vector<LatticePoint>& lattice)
{
    const CubeShape s = cube_shape(corners, lattice);
    std::vector<std::vector<int>> out;
    for (std::size_t k = 0; k < s.axes.size(); ++k) {
        for (long side : {s.lo[k], s.hi[k]}) {
            std::vector<int> f;
            for (int c : corners)
                if (lattice[c][s.axes[k]] == side) f.push_back(c);
            out.push_back(std::move(f));
        }
    }
    return out;
}

}  // namespace

int CellComplex::dimension() const noexcept
{
    return cells_.empty() ? -1 : cells_.back().dim;
}

const Cell& CellComplex::cell(CellId id) const
{
    if (!contains(id)) throw LookupError("unknown cell id " + std::to_string(id));
    return cells_[id];
}

std::span<const CellId> CellComplex::facets(CellId id) const
{
    cell(id);
    return facets_[id];
}

std::span<const CellId> CellComplex::cofacets(CellId id) const
{
    cell(id);
    return cofacets_[id];
}

CellComplex CellComplex::from_simplices(std::vector<Vector> points,
                                        const std::vector<std::vector<int>>& simplices)
{
    CellComplex k;
    k.ambient_dim_ = check_points(points);
    k.kind_ = CellKind::simplex;

    std::set<std::vector<int>> all;
    for (const auto& raw : simplices) {
        const auto s = normalized(raw, points.size());
        if (s.size() > 20) throw ParameterError("simplex too large: " + describe(s));
        if (all.contains(s)) continue;
        const unsigned n = static_cast<unsigned>(s.size());
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> face;
            for (unsigned i = 0; i < n; ++i)
                if (mask & (1u << i)) face.push_back(s[i]);
            all.insert(std::move(face));
        }
    }

    std::vector<Cell> cells;
    cells.reserve(all.size());
    for (const auto& v : all)
        cells.push_back(Cell{0, static_cast<int>(v.size()) - 1, v, CellKind::simplex});

    k.points_ = std::move(points);
    k.index_cells(std::move(cells));

    for (const auto& c : k.cells_) {
        if (c.dim == 0) continue;
        auto& fl = k.facets_[c.id];
        for (std::size_t skip = 0; skip < c.vertices.size(); ++skip) {
            std::vector<int> f;
            for (std::size_t i = 0; i < c.vertices.size(); ++i)
                if (i != skip) f.push_back(c.vertices[i]);
            fl.push_back(k.by_vertices_.at(f));
        }
        std::sort(fl.begin(), fl.end());
        for (CellId f : fl) k.cofacets_[f].push_back(c.id);
    }
    for (auto& cf : k.cofacets_) std::sort(cf.begin(), cf.end());
    return k;
}

CellComplex CellComplex::from_cubes(std::vector<Vector> points,
                                    const std::vector<LatticePoint>& lattice,
                                    const std::vector<std::vector<int>>& cubes)
{
    CellComplex k;
    k.ambient_dim_ = check_points(points);
    k.kind_ = CellKind::cube;
    if (lattice.size() != points.size())
        throw ParameterError("lattice coordinates must be given for every point");

    std::set<std::vector<int>> all;
    std::function<void(const std::vector<int>&)> add = [&](const std::vector<int>& corners) {
        if (!all.insert(corners).second) return;
        for (auto& f : cube_facets(corners, lattice)) add(f);
    };
    for (const auto& raw : cubes) {
        const auto c = normalized(raw, points.size());
        const auto shape = cube_shape(c, lattice);
        if (c.size() != (std::size_t{1} << shape.axes.size()))
            throw ParameterError("corner set is not an axis-aligned cube: " + describe(c));
        for (std::size_t a = 0; a < shape.axes.size(); ++a)
            if (shape.hi[a] - shape.lo[a] != 1)
                throw ParameterError("cube is not elementary: " + describe(c));
        add(c);
    }

    std::vector<Cell> cells;
    cells.reserve(all.size());
    for (const auto& v : all) {
        int dim = 0;
        while ((std::size_t{1} << dim) < v.size()) ++dim;
        cells.push_back(Cell{0, dim, v, CellKind::cube});
    }

    k.points_ = std::move(points);
    k.index_cells(std::move(cells));

    for (const auto& c : k.cells_) {
        if (c.dim == 0) continue;
        auto& fl = k.facets_[c.id];
        for (const auto& f : cube_facets(c.vertices, lattice)) fl.push_back(k.by_vertices_.at(f));
        std::sort(fl.begin(), fl.end());
        for (CellId f : fl) k.cofacets_[f].push_back(c.id);
    }
    for (auto& cf : k.cofacets_) std::sort(cf.begin(), cf.end());
    return k;
}

void CellComplex::index_cells(std::vector<Cell> cells)
{
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
        return a.dim != b.dim ? a.dim < b.dim : a.vertices < b.vertices;
    });
    for (std::size_t i = 0; i < cells.size(); ++i) {
        cells[i].id = static_cast<CellId>(i);
        by_vertices_.emplace(cells[i].vertices, cells[i].id);
    }
    cells_ = std::move(cells);
    facets_.assign(cells_.size(), {});
    cofacets_.assign(cells_.size(), {});
}

std::vector<CellId> CellComplex::faces(CellId id) const
{
    cell(id);
    std::set<CellId> seen;
    std::vector<CellId> stack(facets_[id].begin(), facets_[id].end());
    while (!stack.empty()) {
        const CellId f = stack.back();
        stack.pop_back();
        if (!seen.insert(f).second) continue;
        stack.insert(stack.end(), facets_[f].begin(), facets_[f].end());
    }
    return {seen.begin(), seen.end()};
}

std::vector<CellId> CellComplex::cofaces(CellId id) const
{
    cell(id);
    std::set<CellId> seen;
    std::vector<CellId> stack(cofacets_[id].begin(), cofacets_[id].end());
    while (!stack.empty()) {
        const CellId f = stack.back();
        stack.pop_back();
        if (!seen.insert(f).second) continue;
        stack.insert(stack.end(), cofacets_[f].begin(), cofacets_[f].end());
    }
    return {seen.begin(), seen.end()};
}

std::vector<CellId> CellComplex::closure(CellId id) const
{
    auto out = faces(id);
    out.insert(std::upper_bound(out.begin(), out.end(), id), id);
    return out;
}

std::vector<AdmissiblePair> CellComplex::admissible_pairs() const
{
    std::vector<AdmissiblePair> out;
    for (const auto& c : cells_)
        for (CellId up : cofacets_[c.id]) out.push_back({c.id, up});
    return out;
}

bool CellComplex::is_admissible(CellId lower, CellId upper) const
{
    if (!contains(lower) || !contains(upper)) return false;
    const auto& cf = cofacets_[lower];
    return std::binary_search(cf.begin(), cf.end(), upper);
}

Vector CellComplex::barycenter(CellId id) const
{
    const Cell& c = cell(id);
    Vector b = Vector::Zero(ambient_dim_);
    for (int v : c.vertices) b += points_[v];
    return b / static_cast<double>(c.vertices.size());
}

std::optional<CellId> CellComplex::find(const std::vector<int>& vertices) const
{
    auto it = by_vertices_.find(vertices);
    if (it == by_vertices_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::size_t> CellComplex::counts_per_dim() const
{
    std::vector<std::size_t> counts(static_cast<std::size_t>(dimension() + 1), 0);
    for (const auto& c : cells_) ++counts[c.dim];
    return counts;
}

long CellComplex::euler_characteristic() const
{
    long chi = 0;
    for (const auto& c : cells_) chi += (c.dim % 2 == 0) ? 1 : -1;
    return chi;
}

void CellComplex::validate() const
{
    for (const auto& c : cells_) {
        const std::size_t expected =
            c.kind == CellKind::simplex ? static_cast<std::size_t>(c.dim + 1) : (std::size_t{1} << c.dim);
        if (c.vertices.size() != expected)
            throw Error("cell " + std::to_string(c.id) + " has the wrong vertex count");
        if (!std::is_sorted(c.vertices.begin(), c.vertices.end()) ||
            std::adjacent_find(c.vertices.begin(), c.vertices.end()) != c.vertices.end())
            throw Error("cell " + std::to_string(c.id) + " vertices not strictly sorted");
        const std::size_t nfacets = c.dim == 0 ? 0 : (c.kind == CellKind::simplex ? c.dim + 1 : 2 * c.dim);
        if (facets_[c.id].size() != nfacets)
            throw Error("cell " + std::to_string(c.id) + " is missing facets");
        for (CellId f : facets_[c.id]) {
            if (!contains(f)) throw Error("dangling facet link");
            if (cells_[f].dim + 1 != c.dim) throw Error("facet link across non-adjacent dimensions");
            const auto& back = cofacets_[f];
            if (!std::binary_search(back.begin(), back.end(), c.id))
                throw Error("facet relation is not mutual");
            if (!std::includes(c.vertices.begin(), c.vertices.end(), cells_[f].vertices.begin(),
                               cells_[f].vertices.end()))
                throw Error("facet vertices are not a subset");
        }
        for (CellId up : cofacets_[c.id]) {
            const auto& fl = facets_[up];
            if (std::find(fl.begin(), fl.end(), c.id) == fl.end())
                throw Error("coface relation is not mutual");
        }
    }
}

}  // namespace forman
