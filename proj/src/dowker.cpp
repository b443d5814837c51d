#include "forman/builders.hpp"

#include <algorithm>
#include <cmath>

namespace forman {

DowkerComplex dowker_complex(std::span<const Vector> data_points, std::span<const Vector> landmarks,
                             double radius)
{
    if (!(radius > 0.0)) throw ParameterError("dowker radius must be positive");
    if (data_points.empty() || landmarks.empty())
        throw ParameterError("dowker relation needs non-empty data and landmark sets");
    const double r2 = radius * radius;
    std::vector<std::vector<bool>> related(landmarks.size(), std::vector<bool>(data_points.size()));
    for (std::size_t y = 0; y < landmarks.size(); ++y)
        for (std::size_t x = 0; x < data_points.size(); ++x) {
            if (landmarks[y].size() != data_points[x].size())
                throw ParameterError("landmark and data dimensions differ");
            related[y][x] = (landmarks[y] - data_points[x]).squaredNorm() < r2;
        }
    return dowker_complex(landmarks, related);
}

DowkerComplex dowker_complex(std::span<const Vector> landmarks,
                             const std::vector<std::vector<bool>>& related)
{
    if (related.size() != landmarks.size())
        throw ParameterError("relation must have one row per landmark");
    const std::size_t nx = related.empty() ? 0 : related.front().size();
    for (const auto& row : related)
        if (row.size() != nx) throw ParameterError("relation rows differ in length");

    // Landmarks related to each data point, ascending.
    std::vector<std::vector<int>> star(nx);
    for (std::size_t y = 0; y < landmarks.size(); ++y)
        for (std::size_t x = 0; x < nx; ++x)
            if (related[y][x]) star[x].push_back(static_cast<int>(y));

    std::vector<std::vector<int>> simplices;
    for (const auto& s : star)
        if (!s.empty()) simplices.push_back(s);

    DowkerComplex out{CellComplex::from_simplices(std::vector<Vector>(landmarks.begin(), landmarks.end()),
                                                  simplices),
                      {}};
    out.witnesses.resize(out.complex.size());
    for (const auto& c : out.complex.cells())
        for (std::size_t x = 0; x < nx; ++x)
            if (std::includes(star[x].begin(), star[x].end(), c.vertices.begin(), c.vertices.end()))
                out.witnesses[c.id].push_back(static_cast<int>(x));
    return out;
}

}  // namespace forman
