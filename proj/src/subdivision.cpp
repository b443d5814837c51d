#include "forman/subdivision.hpp"

#include <algorithm>

namespace forman {

std::pair<CellComplex, VectorAssignment> barycentric_subdivision(const CellComplex& complex,
                                                                 const VectorAssignment& vectors)
{
    if (complex.kind() != CellKind::simplex)
        throw UnsupportedKindError("barycentric subdivision needs a simplicial complex");
    if (vectors.size() != complex.size())
        throw AssignmentError("vector assignment does not cover the complex");

    std::vector<Vector> points;
    points.reserve(complex.size());
    for (const auto& c : complex.cells()) points.push_back(complex.barycenter(c.id));

    // Maximal chains: walk down from every maximal cell through facets.
    std::vector<std::vector<int>> chains;
    std::vector<int> chain;
    auto descend = [&](auto&& self, CellId top) -> void {
        chain.push_back(top);
        const auto fl = complex.facets(top);
        if (fl.empty())
            chains.push_back(chain);
        else
            for (CellId f : fl) self(self, f);
        chain.pop_back();
    };
    for (const auto& c : complex.cells())
        if (complex.cofacets(c.id).empty()) descend(descend, c.id);

    CellComplex refined = CellComplex::from_simplices(std::move(points), chains);

    // Cell ids are sorted by dimension, so the chain's largest cell is its
    // largest vertex index.
    VectorAssignment inherited;
    inherited.values.reserve(refined.size());
    for (const auto& c : refined.cells()) inherited.values.push_back(vectors[c.vertices.back()]);
    return {std::move(refined), std::move(inherited)};
}

}  // namespace forman
