#include "forman/builders.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>

#include "forman/predicates.hpp"

namespace forman {

namespace {

using geom::Point2;

constexpr int kInfinite = -1;

struct Triangle {
    std::array<int, 3> v;  // counter-clockwise; v[2] == kInfinite for a hull ghost
    bool alive = true;
};

class Triangulator {
public:
    explicit Triangulator(std::span<const Vector> points)
        : points_(points)
    {
    }

    Point2 at(int i) const { return {points_[i](0), points_[i](1)}; }

    bool conflicts(const Triangle& t, int p) const
    {
        if (t.v[2] != kInfinite) return delaunay_conflict(points_, t.v[0], t.v[1], t.v[2], p);
        const int o = geom::orient2d(at(t.v[0]), at(t.v[1]), at(p));
        if (o != 0) return o > 0;
        return strictly_between(at(t.v[0]), at(t.v[1]), at(p));
    }

    static bool strictly_between(Point2 a, Point2 b, Point2 p)
    {
        if (a.x != b.x) return std::min(a.x, b.x) < p.x && p.x < std::max(a.x, b.x);
        return std::min(a.y, b.y) < p.y && p.y < std::max(a.y, b.y);
    }

    void start(int a, int b, int c)
    {
        tris_.push_back({{a, b, c}});
        tris_.push_back({{b, a, kInfinite}});
        tris_.push_back({{c, b, kInfinite}});
        tris_.push_back({{a, c, kInfinite}});
    }

    void insert(int p)
    {
        std::vector<std::size_t> cavity;
        for (std::size_t i = 0; i < tris_.size(); ++i)
            if (tris_[i].alive && conflicts(tris_[i], p)) cavity.push_back(i);
        if (cavity.empty()) throw Error("delaunay: point " + std::to_string(p) + " has no conflict region");

        std::map<std::pair<int, int>, int> edges;
        for (std::size_t i : cavity) {
            auto& t = tris_[i];
            t.alive = false;
            for (int k = 0; k < 3; ++k) ++edges[{t.v[k], t.v[(k + 1) % 3]}];
        }
        for (const auto& [e, count] : edges) {
            if (edges.contains({e.second, e.first})) continue;
            const auto [u, v] = e;
            Triangle t;
            if (u == kInfinite)
                t.v = {v, p, kInfinite};
            else if (v == kInfinite)
                t.v = {p, u, kInfinite};
            else {
                t.v = {u, v, p};
                if (geom::orient2d(at(u), at(v), at(p)) <= 0)
                    throw Error("delaunay: cavity is not star-shaped around point " + std::to_string(p));
            }
            tris_.push_back(t);
        }
        if (tris_.size() > 4 * live_count() + 64) compact();
    }

    std::vector<std::vector<int>> triangles() const
    {
        std::vector<std::vector<int>> out;
        for (const auto& t : tris_)
            if (t.alive && t.v[2] != kInfinite) out.push_back({t.v[0], t.v[1], t.v[2]});
        return out;
    }

private:
    std::size_t live_count() const
    {
        return static_cast<std::size_t>(
            std::count_if(tris_.begin(), tris_.end(), [](const Triangle& t) { return t.alive; }));
    }

    void compact()
    {
        std::erase_if(tris_, [](const Triangle& t) { return !t.alive; });
    }

    std::span<const Vector> points_;
    std::vector<Triangle> tris_;
};

}  // namespace

bool delaunay_conflict(std::span<const Vector> points, int a, int b, int c, int d)
{
    auto at = [&](int i) { return Point2{points[i](0), points[i](1)}; };
    const int s = geom::incircle(at(a), at(b), at(c), at(d));
    if (s != 0) return s > 0;
    // Cocircular: lifting point i by eps^(i+1) moves d relative to the plane
    // through the lifted a, b, c by sum_p lambda_p(d) delta_p - delta_d, where
    // lambda_p are the barycentric coordinates of d. The smallest index wins.
    const int first = std::min({a, b, c, d});
    if (first == d) return false;
    if (first == a) return geom::orient2d(at(d), at(b), at(c)) > 0;
    if (first == b) return geom::orient2d(at(a), at(d), at(c)) > 0;
    return geom::orient2d(at(a), at(b), at(d)) > 0;
}

CellComplex delaunay_2d(std::span<const Vector> points)
{
    const int n = static_cast<int>(points.size());
    if (n < 3) throw DegenerateInputError("delaunay_2d needs at least 3 points, got " + std::to_string(n));
    for (const auto& p : points)
        if (p.size() != 2) throw DegenerateInputError("delaunay_2d needs planar points");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto lex = [&](int i, int j) {
        return points[i](0) != points[j](0) ? points[i](0) < points[j](0) : points[i](1) < points[j](1);
    };
    std::sort(order.begin(), order.end(), lex);
    for (int i = 1; i < n; ++i)
        if (points[order[i]] == points[order[i - 1]])
            throw DegenerateInputError("duplicate point " + std::to_string(order[i]));

    std::vector<Vector> owned(points.begin(), points.end());
    Triangulator tri(points);
    int third = -1;
    for (int k = 2; k < n; ++k)
        if (geom::orient2d(tri.at(0), tri.at(1), tri.at(k)) != 0) {
            third = k;
            break;
        }

    if (third < 0) {
        // All collinear: lexicographic order is the order along the line.
        std::vector<std::vector<int>> edges;
        for (int i = 1; i < n; ++i) edges.push_back({order[i - 1], order[i]});
        return CellComplex::from_simplices(std::move(owned), edges);
    }

    if (geom::orient2d(tri.at(0), tri.at(1), tri.at(third)) > 0)
        tri.start(0, 1, third);
    else
        tri.start(1, 0, third);
    for (int p = 2; p < n; ++p)
        if (p != third) tri.insert(p);

    return CellComplex::from_simplices(std::move(owned), tri.triangles());
}

}  // namespace forman
