#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>

#include "forman/builders.hpp"
#include "forman/cost.hpp"
#include "oracles.hpp"

using namespace forman;

namespace {

Vector pt(double x, double y)
{
    Vector v(2);
    v << x, y;
    return v;
}

struct Toy {
    CellComplex complex;
    VectorAssignment vectors;
};

Toy toy(Vector v0)
{
    auto k = CellComplex::from_simplices({pt(0, 0), pt(1, 1), pt(2, 0)}, {{0, 1, 2}});
    auto v = assign_vertex_average(k, std::vector<Vector>{v0, pt(1, 0), pt(-1, -1)});
    return {std::move(k), std::move(v)};
}

// Pair cost from raw data: vertex lists, coordinates and vertex vectors only.
double cost_from_scratch(const std::vector<std::array<double, 2>>& x, const std::vector<std::array<double, 2>>& xdot,
                         const std::vector<int>& lower, const std::vector<int>& upper)
{
    auto mean = [](const auto& src, const std::vector<int>& idx) {
        std::array<double, 2> m{0, 0};
        for (int i : idx) {
            m[0] += src[i][0] / idx.size();
            m[1] += src[i][1] / idx.size();
        }
        return m;
    };
    const auto v = mean(xdot, lower);
    const auto bl = mean(x, lower), bu = mean(x, upper);
    const double w0 = bu[0] - bl[0], w1 = bu[1] - bl[1];
    const double nv = std::hypot(v[0], v[1]);
    if (nv < 1e-12) return 2.0;
    return 1.0 - (v[0] * w0 + v[1] * w1) / (nv * std::hypot(w0, w1));
}

}  // namespace

TEST_CASE("cosine distance")
{
    CHECK(cosine_distance(pt(0, 1), pt(0.5, 0.5)) == doctest::Approx(1 - std::sqrt(2.0) / 2).epsilon(1e-12));
    CHECK(cosine_distance(pt(3, 4), pt(3, 4)) == doctest::Approx(0.0));
    CHECK(cosine_distance(pt(-0.5, 0), pt(0, 1.0 / 3.0)) == doctest::Approx(1.0));
    CHECK(cosine_distance(pt(1, 0), pt(-1, 0)) == doctest::Approx(2.0));
    CHECK_THROWS_AS(cosine_distance(pt(0, 0), pt(1, 0)), DomainError);
    // Clamped against rounding.
    const double d = cosine_distance(pt(1e-3, 1), pt(-1e-3, -1));
    CHECK(d <= 2.0);
    CHECK(d >= 0.0);
}

TEST_CASE("displacement")
{
    const auto t = toy(pt(0, 1));
    CHECK(displacement(t.complex, {0, 3}).isApprox(pt(0.5, 0.5)));
    CHECK(displacement(t.complex, {4, 6}).isApprox(pt(0, 1.0 / 3.0)));
    for (const auto& p : t.complex.admissible_pairs()) CHECK(displacement(t.complex, p).norm() > 0);
}

TEST_CASE("critical angle")
{
    CHECK(critical_angle(1.0) == doctest::Approx(std::numbers::pi / 2));
    CHECK(critical_angle(0.0) == doctest::Approx(0.0));
    CHECK(critical_angle(0.75) == doctest::Approx(std::acos(0.25)));
    CHECK(critical_angle(0.75) == doctest::Approx(1.318).epsilon(1e-3));
    CHECK_THROWS_AS(critical_angle(2.5), ParameterError);
}

TEST_CASE("three-point example cost entries")
{
    const auto t = toy(pt(0, 1));
    const auto m = build_cost_model(t.complex, t.vectors, 0.75);
    const std::vector<std::array<double, 2>> x{{0, 0}, {1, 1}, {2, 0}}, xd{{0, 1}, {1, 0}, {-1, -1}};
    for (std::size_t k = 0; k < m.pairs.size(); ++k) {
        const auto& p = m.pairs[k];
        const double expect =
            cost_from_scratch(x, xd, t.complex.cell(p.lower).vertices, t.complex.cell(p.upper).vertices);
        CHECK(m.pair_costs[k] == doctest::Approx(expect).epsilon(1e-12));
    }
    CHECK(m.full_cost(0, 3) == doctest::Approx(0.2929).epsilon(1e-4));
    CHECK(m.full_cost(1, 3) == doctest::Approx(1.7071).epsilon(1e-4));
    CHECK(m.full_cost(3, 6) == doctest::Approx(0.5528).epsilon(1e-4));
    CHECK(m.full_cost(4, 6) == doctest::Approx(1.0));
    CHECK(m.full_cost(5, 6) == doctest::Approx(1 - 1 / std::sqrt(10.0)));
    CHECK(m.full_cost(2, 2) == 0.75);
    CHECK(m.full_cost(0, 1) == 3.0);
    CHECK(m.full_cost(3, 0) == 3.0);
    CHECK(m.full_cost(6, 0) == 3.0);
}

TEST_CASE("penalty and alpha handling")
{
    const auto t = toy(pt(0, 1));
    auto m = build_cost_model(t.complex, t.vectors, 0.0);
    CHECK(m.full_cost(4, 4) == 0.0);
    CHECK(m.penalty() == 3.0);
    CHECK(m.with_alpha(1.5).penalty() == 4.0);
    CHECK_THROWS_AS(build_cost_model(t.complex, t.vectors, -0.1), ParameterError);
    CHECK_THROWS_AS(build_cost_model(t.complex, t.vectors, 2.01), ParameterError);
    for (double a : {0.0, 0.3, 1.0, 2.0}) CHECK(2 * a < m.with_alpha(a).penalty());
}

TEST_CASE("zero vectors cost two on every pair they start")
{
    // The triangle's vector is the mean of (0,1),(1,0),(-1,-1): zero.
    const auto t = toy(pt(0, 1));
    CHECK(is_zero_vector(t.vectors[6]));
    const auto k = CellComplex::from_simplices({pt(0, 0), pt(1, 0)}, {{0, 1}});
    const auto v = assign_vertex_average(k, std::vector<Vector>{pt(0, 0), pt(1, 0)});
    const auto m = build_cost_model(k, v, 1.0);
    CHECK(m.full_cost(0, 2) == 2.0);
    CHECK(m.full_cost(1, 2) == doctest::Approx(2.0));
}

TEST_CASE("pair costs lie in [0, 2] and are rotation invariant")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const auto inst = oracle::random_instance(rng, 30);
        const auto& k = inst.complex;
        if (k.ambient_dim() != 2) continue;
        const auto m = build_cost_model(k, inst.vectors, 1.0);
        for (double c : m.pair_costs) {
            CHECK(c >= 0.0);
            CHECK(c <= 2.0);
        }
        const double th = 0.7;
        Eigen::Matrix2d r;
        r << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
        std::vector<Vector> pts;
        for (const auto& p : k.points()) pts.push_back(r * p);
        std::vector<std::vector<int>> simplices;
        for (const auto& c : k.cells()) simplices.push_back(c.vertices);
        const auto rk = CellComplex::from_simplices(pts, simplices);
        VectorAssignment rv;
        for (const auto& x : inst.vectors.values) rv.values.push_back(r * x);
        const auto rm = build_cost_model(rk, rv, 1.0);
        REQUIRE(rm.pairs == m.pairs);
        for (std::size_t i = 0; i < m.pair_costs.size(); ++i)
            CHECK(rm.pair_costs[i] == doctest::Approx(m.pair_costs[i]).epsilon(1e-9));
    }
}

TEST_CASE("threaded cost evaluation matches the serial result")
{
    std::vector<Vector> pts, vec;
    for (int i = 0; i < 40; ++i)
        for (int j = 0; j < 40; ++j) {
            pts.push_back(pt(i, j));
            vec.push_back(pt(std::sin(i * 0.3 + j), std::cos(j * 0.2 - i)));
        }
    const auto k = cubical_grid(pts, 1.0);
    const auto v = assign_vertex_average(k, vec);
    ::unsetenv("FORMAN_THREADS");
    const auto serial = build_cost_model(k, v, 0.9);
    REQUIRE(serial.pairs.size() >= 4096);
    ::setenv("FORMAN_THREADS", "4", 1);
    const auto threaded = build_cost_model(k, v, 0.9);
    ::unsetenv("FORMAN_THREADS");
    CHECK(threaded.pair_costs == serial.pair_costs);
}
