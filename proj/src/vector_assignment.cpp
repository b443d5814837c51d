#include "forman/vector_assignment.hpp"

#include <string>

namespace forman {

bool is_zero_vector(const Vector& v) noexcept
{
    return v.norm() < kZeroVectorTolerance;
}

VectorAssignment assign_vertex_average(const CellComplex& complex, std::span<const Vector> data_vectors)
{
    VectorAssignment out;
    out.values.reserve(complex.size());
    Eigen::Index d = -1;
    for (const auto& c : complex.cells()) {
        Vector sum;
        for (int v : c.vertices) {
            if (static_cast<std::size_t>(v) >= data_vectors.size() || data_vectors[v].size() == 0)
                throw AssignmentError("no data vector for vertex " + std::to_string(v));
            const Vector& x = data_vectors[v];
            if (d < 0) d = x.size();
            if (x.size() != d)
                throw AssignmentError("data vector at vertex " + std::to_string(v) + " has wrong dimension");
            sum = sum.size() == 0 ? x : Vector(sum + x);
        }
        out.values.push_back(sum / static_cast<double>(c.vertices.size()));
    }
    return out;
}

VectorAssignment assign_dowker_average(const CellComplex& complex,
                                       const std::vector<std::vector<int>>& witnesses,
                                       std::span<const Vector> data_vectors)
{
    if (witnesses.size() != complex.size())
        throw AssignmentError("witness map does not cover the complex");
    VectorAssignment out;
    out.values.reserve(complex.size());
    for (const auto& c : complex.cells()) {
        const auto& w = witnesses[c.id];
        if (w.empty())
            throw AssignmentError("cell " + std::to_string(c.id) + " has an empty witness set");
        Vector sum;
        for (int x : w) {
            if (x < 0 || static_cast<std::size_t>(x) >= data_vectors.size())
                throw AssignmentError("witness index " + std::to_string(x) + " out of range");
            sum = sum.size() == 0 ? data_vectors[x] : Vector(sum + data_vectors[x]);
        }
        out.values.push_back(sum / static_cast<double>(w.size()));
    }
    return out;
}

}  // namespace forman
