#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "forman/builders.hpp"
#include "forman/cost.hpp"
#include "forman/datagen.hpp"
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

struct Setup {
    CellComplex complex;
    CostModel costs;
    MatchingProblem problem;
};

Setup toy(double alpha)
{
    auto k = CellComplex::from_simplices({pt(0, 0), pt(1, 1), pt(2, 0)}, {{0, 1, 2}});
    const auto v = assign_vertex_average(k, std::vector<Vector>{pt(0, 1), pt(1, 0), pt(-1, -1)});
    auto c = build_cost_model(k, v, alpha);
    auto p = build_problem(c, k);
    return {std::move(k), std::move(c), std::move(p)};
}

Setup from_instance(const oracle::Instance& inst, double alpha)
{
    auto c = build_cost_model(inst.complex, inst.vectors, alpha);
    auto p = build_problem(c, inst.complex);
    return {inst.complex, std::move(c), std::move(p)};
}

}  // namespace

TEST_CASE("problem layout")
{
    const auto s = toy(0.75);
    CHECK(s.problem.num_cells == 7);
    CHECK(s.problem.variables.size() == 16);
    CHECK(s.problem.variables[0].is_diagonal());
    CHECK(s.problem.variables[1].upper == 3);
    for (std::size_t c = 0; c < 7; ++c) {
        CHECK_FALSE(s.problem.incidence[c].empty());
        CHECK(std::is_sorted(s.problem.incidence[c].begin(), s.problem.incidence[c].end()));
    }
    const auto single = CellComplex::from_simplices({pt(0, 0)}, {{0}});
    const auto sv = assign_vertex_average(single, std::vector<Vector>{pt(1, 0)});
    const auto sp = build_problem(build_cost_model(single, sv, 1.0), single);
    CHECK(sp.variables.size() == 1);
    CHECK(sp.incidence.size() == 1);
}

TEST_CASE("variable count bounds on the planar grid")
{
    const auto f = gen_grid_field("lotka_volterra");
    const auto k = delaunay_2d(f.points);
    const auto v = assign_vertex_average(k, f.vectors);
    const auto p = build_problem(build_cost_model(k, v, 0.95), k);
    CHECK(p.variables.size() >= p.num_cells);
    CHECK(p.variables.size() <= p.num_cells * p.num_cells);
}

TEST_CASE("three-point example optimum")
{
    for (Backend b : {Backend::bipartite, Backend::branch_and_bound}) {
        const auto s = toy(0.75);
        const auto m = solve_exact(s.problem, b);
        CHECK(m.pairs == std::vector<AdmissiblePair>{{0, 3}, {1, 5}, {2, 4}});
        CHECK(m.critical == std::vector<CellId>{6});
        CHECK(m.objective == doctest::Approx(3 * (1 - std::sqrt(2.0) / 2) + 0.75).epsilon(1e-12));
        const auto t = objective_decomposition(m, s.costs);
        CHECK(t.matched == 3);
        CHECK(t.critical == 1);
        CHECK(t.cosine_sum == doctest::Approx(3 * std::sqrt(2.0) / 2));
        CHECK(verify_matching(s.complex, m).ok());
    }
}

TEST_CASE("alpha zero makes every cell critical")
{
    const auto s = toy(0.0);
    const auto m = solve_exact(s.problem);
    CHECK(m.pairs.empty());
    CHECK(m.critical.size() == 7);
    CHECK(m.objective == 0.0);
}

TEST_CASE("backends agree with exhaustive search including the tie-break")
{
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> alpha(0.0, 2.0);
    for (int trial = 0; trial < 300; ++trial) {
        const auto inst = oracle::random_instance(rng, 12);
        // Coarse alphas produce exact ties between options.
        const double a = trial % 3 == 0 ? std::round(alpha(rng) * 4) / 4 : alpha(rng);
        const auto s = from_instance(inst, a);
        const auto brute = oracle::exhaustive_reduced(s.problem);
        const auto bip = solve_bipartite(s.problem);
        const auto bnb = solve_branch_and_bound(s.problem);
        CHECK(bip.objective == doctest::Approx(brute.best).epsilon(1e-12));
        CHECK(bnb.objective == doctest::Approx(brute.best).epsilon(1e-12));
        CHECK(selection_of(s.problem, bip) == brute.selection);
        CHECK(selection_of(s.problem, bnb) == brute.selection);
        if (s.problem.num_cells <= 9) CHECK(oracle::exhaustive_full(s.costs) == doctest::Approx(brute.best));
    }
}

TEST_CASE("solver output is always a valid field")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> alpha(0.0, 2.0);
    for (int trial = 0; trial < 300; ++trial) {
        const auto inst = oracle::random_instance(rng, 30);
        const auto s = from_instance(inst, alpha(rng));
        const auto m = solve_exact(s.problem);
        const auto report = verify_matching(s.complex, m);
        CHECK_MESSAGE(report.ok(), report.summary());
        const auto t = objective_decomposition(m, s.costs);
        CHECK(static_cast<double>(t.matched) - t.cosine_sum + static_cast<double>(t.critical) * s.costs.alpha ==
              doctest::Approx(m.objective).epsilon(1e-9));
        CHECK(evaluate(m, s.costs) == doctest::Approx(m.objective).epsilon(1e-12));
    }
}

TEST_CASE("critical count does not increase with alpha")
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        const auto inst = oracle::random_instance(rng, 20);
        std::size_t previous = inst.complex.size() + 1;
        for (int k = 0; k <= 20; ++k) {
            const auto s = from_instance(inst, 0.1 * k);
            const auto m = solve_exact(s.problem);
            CHECK(m.critical.size() <= previous);
            previous = m.critical.size();
        }
    }
}

TEST_CASE("verification reports each violation class")
{
    const auto s = toy(0.75);
    const auto& k = s.complex;

    Matching not_injective{{{0, 3}, {1, 3}, {2, 4}}, {5, 6}, 0};
    CHECK(verify_matching(k, not_injective).has(ViolationKind::two_in));

    Matching missing{{{0, 3}, {1, 5}, {2, 4}}, {}, 0};
    const auto r = verify_matching(k, missing);
    CHECK(r.has(ViolationKind::uncovered));
    CHECK(r.violations.size() == 1);
    CHECK(r.violations[0].cell == 6);

    Matching two_out{{{0, 3}, {0, 4}, {1, 5}, {2, 5}}, {6}, 0};
    CHECK(verify_matching(k, two_out).has(ViolationKind::two_out));

    Matching chain{{{0, 3}, {3, 6}, {1, 5}, {2, 4}}, {}, 0};
    CHECK(verify_matching(k, chain).has(ViolationKind::in_and_out));

    Matching jump{{{0, 6}, {1, 3}, {2, 4}}, {5}, 0};
    CHECK(verify_matching(k, jump).has(ViolationKind::non_admissible));

    Matching unknown{{{0, 9}}, {1, 2, 3, 4, 5, 6}, 0};
    CHECK(verify_matching(k, unknown).has(ViolationKind::unknown_cell));

    CHECK(verify_matching(k, all_critical(7, 0.75)).ok());
    CHECK_FALSE(verify_matching(k, missing).summary().empty());
}

TEST_CASE("selection round trip and lookup errors")
{
    const auto s = toy(0.75);
    const auto m = solve_exact(s.problem);
    const auto sel = selection_of(s.problem, m);
    const auto back = decode_selection(s.problem, sel);
    CHECK(back.pairs == m.pairs);
    CHECK(back.critical == m.critical);
    Matching bad{{{0, 6}}, {}, 0};
    CHECK_THROWS_AS(selection_of(s.problem, bad), LookupError);
}

TEST_CASE("repair replaces inadmissible entries and lowers the objective")
{
    const auto s = toy(0.75);
    FullAssignment a{{{0, 6}, {1, 3}, {2, 4}, {5, 5}}};
    REQUIRE(satisfies_constraints(7, a));
    const double before = full_objective(s.costs, a);
    const auto m = repair(s.complex, s.costs, a);
    CHECK(verify_matching(s.complex, m).ok());
    CHECK(before - m.objective >= 3.0 - 2 * 0.75 - 1e-12);

    FullAssignment clean{{{0, 3}, {1, 5}, {2, 4}, {6, 6}}};
    const auto same = repair(s.complex, s.costs, clean);
    CHECK(same.objective == doctest::Approx(full_objective(s.costs, clean)));

    FullAssignment broken{{{0, 3}, {0, 4}}};
    CHECK_FALSE(satisfies_constraints(7, broken));
    CHECK_THROWS_AS(repair(s.complex, s.costs, broken), PreconditionError);
}

TEST_CASE("random corrupted assignments repair with the promised gain")
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> alpha(0.0, 2.0);
    for (int trial = 0; trial < 300; ++trial) {
        const auto inst = oracle::random_instance(rng, 20);
        const auto s = from_instance(inst, alpha(rng));
        const std::size_t n = s.complex.size();
        // Random involution on the cells with random orientation.
        std::vector<CellId> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<CellId>(i);
        std::shuffle(order.begin(), order.end(), rng);
        FullAssignment a;
        std::size_t bad = 0;
        for (std::size_t i = 0; i < n;) {
            if (i + 1 < n && rng() % 2) {
                CellId x = order[i], y = order[i + 1];
                if (rng() % 2) std::swap(x, y);
                a.entries.push_back({x, y});
                if (!s.complex.is_admissible(x, y)) ++bad;
                i += 2;
            } else {
                a.entries.push_back({order[i], order[i]});
                ++i;
            }
        }
        REQUIRE(satisfies_constraints(n, a));
        const auto m = repair(s.complex, s.costs, a);
        CHECK(verify_matching(s.complex, m).ok());
        const double gain = full_objective(s.costs, a) - m.objective;
        const double per_pair = s.costs.penalty() - 2 * s.costs.alpha;
        CHECK(gain >= static_cast<double>(bad) * per_pair - 1e-9);
        if (bad > 0) CHECK(gain > 0.0);
    }
}

TEST_CASE("branch and bound node limit")
{
    const auto s = toy(0.75);
    CHECK_THROWS_AS(solve_branch_and_bound(s.problem, {}, {1}), Error);
    CHECK_NOTHROW(solve_branch_and_bound(s.problem, {}, {1000}));
}

TEST_CASE("bipartite backend on the larger presets matches branch and bound")
{
    const auto f = gen_grid_field("sink");
    const auto k = delaunay_2d(f.points);
    const auto v = assign_vertex_average(k, f.vectors);
    for (double a : {0.3, 0.9, 1.4}) {
        const auto p = build_problem(build_cost_model(k, v, a), k);
        const auto x = solve_bipartite(p);
        const auto y = solve_branch_and_bound(p);
        CHECK(x.objective == doctest::Approx(y.objective).epsilon(1e-12));
        CHECK(selection_of(p, x) == selection_of(p, y));
    }
}
