#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "forman/cost.hpp"
#include "forman/dynamics.hpp"
#include "forman/gradient.hpp"
#include "forman/solver.hpp"
#include "oracles.hpp"

using namespace forman;

namespace {

Vector pt(double x, double y)
{
    Vector v(2);
    v << x, y;
    return v;
}

CellComplex triangle()
{
    return CellComplex::from_simplices({pt(0, 0), pt(1, 1), pt(2, 0)}, {{0, 1, 2}});
}

// Reachability closure check for SCCs, by brute force.
std::vector<std::vector<char>> reach(const FlowGraph& g)
{
    const std::size_t n = g.size();
    std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<CellId> stack{static_cast<CellId>(s)};
        r[s][s] = 1;
        while (!stack.empty()) {
            const CellId c = stack.back();
            stack.pop_back();
            for (CellId t : g.successors[c])
                if (!r[s][t]) {
                    r[s][t] = 1;
                    stack.push_back(t);
                }
        }
    }
    return r;
}

}  // namespace

TEST_CASE("multi-flow branches on the example optimum")
{
    const auto k = triangle();
    const Matching m{{{0, 3}, {1, 5}, {2, 4}}, {6}, 0};
    const auto g = multiflow(k, m);
    CHECK(g.role[6] == FlowRole::critical);
    CHECK(g.successors[6] == std::vector<CellId>{0, 1, 2, 3, 4, 5, 6});
    CHECK(g.role[5] == FlowRole::upper);
    CHECK(g.successors[5] == std::vector<CellId>{2});
    CHECK(g.role[0] == FlowRole::lower);
    CHECK(g.successors[0] == std::vector<CellId>{3});
}

TEST_CASE("critical vertex loops on itself")
{
    const auto k = CellComplex::from_simplices({pt(0, 0)}, {{0}});
    const auto g = multiflow(k, all_critical(1, 0.5));
    CHECK(g.successors[0] == std::vector<CellId>{0});
    const auto rep = classify_recurrence(k, g);
    CHECK(rep.critical_singletons == std::vector<CellId>{0});
    CHECK(rep.cycles.empty());
    CHECK(rep.critical_census == std::vector<std::size_t>{1});
}

TEST_CASE("inadmissible matching is rejected")
{
    const auto k = triangle();
    CHECK_THROWS_AS(multiflow(k, Matching{{{0, 6}}, {1, 2, 3, 4, 5}, 0}), PreconditionError);
}

TEST_CASE("three arrows around a triangle boundary form one 0-cycle")
{
    const auto k = triangle();
    const Matching m{{{0, 3}, {1, 5}, {2, 4}}, {6}, 0};
    const auto rep = classify_recurrence(k, multiflow(k, m));
    REQUIRE(rep.cycles.size() == 1);
    const auto& c = rep.cycles[0];
    CHECK(c.cells == std::vector<CellId>{0, 1, 2, 3, 4, 5});
    CHECK(c.d == 0);
    CHECK(c.dims == std::vector<std::size_t>{3, 3});
    CHECK(c.self_intersections == 0);
    CHECK(c.elementary());
    CHECK(rep.critical_census == std::vector<std::size_t>{0, 0, 1});
    CHECK(rep.critical_singletons == std::vector<CellId>{6});
}

TEST_CASE("a vertex cycle around two triangles")
{
    const auto k = CellComplex::from_simplices({pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)}, {{0, 1, 2}, {1, 2, 3}});
    const auto e = [&](int a, int b) { return *k.find({a, b}); };
    const auto t = [&](int a, int b, int c) { return *k.find({a, b, c}); };
    // 0 -> [0,1] -> 1 -> [1,3] -> 3 -> [2,3] -> 2 -> [0,2] -> 0, and [1,2] -> [0,1,2].
    Matching m{{{0, e(0, 1)}, {1, e(1, 3)}, {3, e(2, 3)}, {2, e(0, 2)}, {e(1, 2), t(0, 1, 2)}}, {t(1, 2, 3)}, 0};
    std::sort(m.pairs.begin(), m.pairs.end());
    REQUIRE(verify_matching(k, m).ok());
    const auto rep = classify_recurrence(k, multiflow(k, m));
    REQUIRE(rep.cycles.size() == 1);
    CHECK(rep.cycles[0].cells.size() == 8);
    CHECK(rep.cycles[0].d == 0);
    CHECK(rep.cycles[0].self_intersections == 0);
    CHECK(rep.critical_census == std::vector<std::size_t>{0, 0, 1});
}

TEST_CASE("self-intersections count cells with two successors in the component")
{
    const auto k = triangle();
    FlowGraph g;
    g.role = {FlowRole::lower, FlowRole::lower, FlowRole::lower, FlowRole::upper,
              FlowRole::upper, FlowRole::upper, FlowRole::critical};
    // Cycle 0 -> 3 -> 1 -> 5 -> 2 -> 4 -> 0 with the chord 3 -> 2.
    g.successors = {{3}, {5}, {4}, {1, 2}, {0}, {2}, {0, 1, 2, 3, 4, 5, 6}};
    const auto rep = classify_recurrence(k, g);
    REQUIRE(rep.cycles.size() == 1);
    CHECK(rep.cycles[0].self_intersections == 1);
    CHECK_FALSE(rep.cycles[0].elementary());
}

TEST_CASE("component numbering and membership on random flows")
{
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> alpha(0.0, 2.0);
    for (int trial = 0; trial < 150; ++trial) {
        const auto inst = oracle::random_instance(rng, 30);
        const auto costs = build_cost_model(inst.complex, inst.vectors, alpha(rng));
        const auto m = solve_exact(build_problem(costs, inst.complex));
        const auto g = multiflow(inst.complex, m);
        const auto scc = strongly_connected_components(g);
        const auto r = reach(g);
        for (std::size_t a = 0; a < g.size(); ++a)
            for (std::size_t b = 0; b < g.size(); ++b)
                CHECK((scc.component_of[a] == scc.component_of[b]) == (r[a][b] && r[b][a]));
        // Components ordered by their smallest cell.
        for (std::size_t i = 1; i < scc.components.size(); ++i)
            CHECK(scc.components[i - 1].front() < scc.components[i].front());

        // Each cell takes one branch; lower cells have out-degree one.
        for (std::size_t c = 0; c < g.size(); ++c)
            if (g.role[c] == FlowRole::lower) CHECK(g.successors[c].size() == 1);

        const auto rep = classify_recurrence(inst.complex, g);
        std::size_t census = 0;
        for (auto x : rep.critical_census) census += x;
        CHECK(census == m.critical.size());
        for (const auto& cyc : rep.cycles) {
            // A d-cycle holds only dims d and d+1 and no critical cell.
            for (std::size_t d = 0; d < cyc.dims.size(); ++d)
                if (cyc.dims[d]) CHECK((static_cast<int>(d) == cyc.d || static_cast<int>(d) == cyc.d + 1));
            for (CellId c : cyc.cells) CHECK(g.role[c] != FlowRole::critical);
        }
        CHECK(rep.cycles.empty() == is_gradient(inst.complex, m).gradient);
    }
}

TEST_CASE("gradient fields have no multi-cell component")
{
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        const auto inst = oracle::random_instance(rng, 20);
        const auto p = build_problem(build_cost_model(inst.complex, inst.vectors, 1.5), inst.complex);
        const auto r = solve_gradient_constrained(p, inst.complex);
        const auto rep = classify_recurrence(inst.complex, multiflow(inst.complex, r.matching));
        CHECK(rep.cycles.empty());
        CHECK(rep.critical_singletons == r.matching.critical);
    }
}
