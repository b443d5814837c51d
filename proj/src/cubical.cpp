#include "forman/builders.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace forman {

namespace {

std::string format_point(const Vector& p)
{
    std::ostringstream os;
    os << "(";
    for (Eigen::Index i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p(i);
    os << ")";
    return os.str();
}

// Every elementary cube whose corners all appear in `at`, as corner lists.
std::vector<std::vector<int>> elementary_cubes(const std::map<LatticePoint, int>& at, int d)
{
    std::vector<std::vector<int>> cubes;
    for (const auto& [base, _] : at) {
        for (unsigned axes = 0; axes < (1u << d); ++axes) {
            std::vector<int> corners;
            bool complete = true;
            for (unsigned corner = 0; corner < (1u << d) && complete; ++corner) {
                if (corner & ~axes) continue;
                LatticePoint q = base;
                for (int a = 0; a < d; ++a)
                    if (corner & (1u << a)) ++q[a];
                auto it = at.find(q);
                if (it == at.end())
                    complete = false;
                else
                    corners.push_back(it->second);
            }
            if (complete) cubes.push_back(std::move(corners));
        }
    }
    return cubes;
}

}  // namespace

CellComplex cubical_grid(std::span<const Vector> points, double side)
{
    if (!(side > 0.0) || !std::isfinite(side)) throw ParameterError("cubical side must be positive");
    if (points.empty()) return CellComplex::from_cubes({}, {}, {});
    const int d = static_cast<int>(points.front().size());
    if (d != 2 && d != 3) throw ParameterError("cubical_grid supports dimension 2 or 3, got " + std::to_string(d));

    const Vector origin = points.front();
    const double tol = 1e-9 * side;
    std::vector<LatticePoint> lattice;
    std::map<LatticePoint, int> at;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Vector& p = points[i];
        if (p.size() != d) throw ParameterError("points have inconsistent dimension");
        LatticePoint q(d);
        for (int a = 0; a < d; ++a) {
            const double t = (p(a) - origin(a)) / side;
            q[a] = std::lround(t);
            if (std::abs(p(a) - (origin(a) + static_cast<double>(q[a]) * side)) > tol)
                throw SnapError("point " + std::to_string(i) + " " + format_point(p) +
                                " is off the lattice of pitch " + std::to_string(side));
        }
        if (!at.emplace(q, static_cast<int>(i)).second)
            throw ParameterError("points " + std::to_string(at[q]) + " and " + std::to_string(i) +
                                 " snap to the same lattice vertex");
        lattice.push_back(std::move(q));
    }
    auto cubes = elementary_cubes(at, d);
    return CellComplex::from_cubes(std::vector<Vector>(points.begin(), points.end()), lattice, cubes);
}

VoxelComplex voxel_grid(std::span<const Vector> points, std::span<const Vector> vectors, double side)
{
    if (!(side > 0.0) || !std::isfinite(side)) throw ParameterError("voxel side must be positive");
    if (points.size() != vectors.size()) throw ParameterError("points and vectors differ in length");
    if (points.empty()) return {CellComplex::from_cubes({}, {}, {}), {}};
    const int d = static_cast<int>(points.front().size());
    if (d != 2 && d != 3) throw ParameterError("voxel_grid supports dimension 2 or 3, got " + std::to_string(d));

    Vector lo = points.front();
    for (const auto& p : points) lo = lo.cwiseMin(p);

    // Occupied cubes keyed by lower corner, with the samples they hold.
    std::map<LatticePoint, std::vector<int>> occupied;
    for (std::size_t i = 0; i < points.size(); ++i) {
        LatticePoint q(d);
        for (int a = 0; a < d; ++a) q[a] = static_cast<long>(std::floor((points[i](a) - lo(a)) / side));
        occupied[q].push_back(static_cast<int>(i));
    }

    std::map<LatticePoint, int> at;
    std::vector<LatticePoint> lattice;
    std::vector<Vector> coords;
    std::vector<Vector> sums;
    std::vector<int> counts;
    std::vector<std::vector<int>> cubes;
    for (const auto& [base, samples] : occupied) {
        std::vector<int> corners;
        for (unsigned corner = 0; corner < (1u << d); ++corner) {
            LatticePoint q = base;
            for (int a = 0; a < d; ++a)
                if (corner & (1u << a)) ++q[a];
            auto [it, fresh] = at.emplace(q, static_cast<int>(coords.size()));
            if (fresh) {
                Vector x(d);
                for (int a = 0; a < d; ++a) x(a) = lo(a) + static_cast<double>(q[a]) * side;
                coords.push_back(std::move(x));
                lattice.push_back(q);
                sums.push_back(Vector::Zero(vectors.front().size()));
                counts.push_back(0);
            }
            const int v = it->second;
            for (int s : samples) sums[v] += vectors[s];
            counts[v] += static_cast<int>(samples.size());
            corners.push_back(v);
        }
        cubes.push_back(std::move(corners));
    }
    for (std::size_t v = 0; v < sums.size(); ++v) sums[v] /= static_cast<double>(counts[v]);

    return {CellComplex::from_cubes(std::move(coords), lattice, cubes), std::move(sums)};
}

}  // namespace forman
