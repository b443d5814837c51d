#include "forman/solver.hpp"

#include <functional>
#include <limits>
#include <queue>

namespace forman {

namespace {

constexpr double kTight = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Cells split by dimension parity: every pair joins a 0-cell and a 1-cell.
std::vector<int> two_coloring(const MatchingProblem& p)
{
    std::vector<int> color(p.num_cells, -1);
    std::vector<int> stack;
    for (std::size_t root = 0; root < p.num_cells; ++root) {
        if (color[root] >= 0) continue;
        color[root] = 0;
        stack.push_back(static_cast<int>(root));
        while (!stack.empty()) {
            const int c = stack.back();
            stack.pop_back();
            for (int v : p.incidence[c]) {
                const auto& var = p.variables[v];
                if (var.is_diagonal()) continue;
                const int other = var.lower == c ? var.upper : var.lower;
                if (color[other] < 0) {
                    color[other] = 1 - color[c];
                    stack.push_back(other);
                } else if (color[other] == color[c]) {
                    throw ParameterError("admissibility graph is not bipartite");
                }
            }
        }
    }
    return color;
}

// Min-cost perfect matching on an n x n sparse bipartite graph.
//
// Left node i and right node i both stand for cell i: the real copy sits on
// the side given by the cell's color, the other copy is a dummy. Edge (i, i)
// is the diagonal; a pair joins the two real copies and, at cost 0, the two
// dummies. Perfect matchings correspond exactly to feasible selections.
class ParityAssignment {
public:
    struct Edge {
        int left, right;
        double cost;
        int var;  // -1 for dummy-dummy edges
    };

    explicit ParityAssignment(const MatchingProblem& p)
        : problem_(p), n_(static_cast<int>(p.num_cells)), adj_(n_), var_edge_(p.variables.size(), -1)
    {
        const auto color = two_coloring(p);
        for (std::size_t v = 0; v < p.variables.size(); ++v) {
            const auto& var = p.variables[v];
            if (var.is_diagonal()) {
                add_edge(var.lower, var.lower, var.cost, static_cast<int>(v));
                continue;
            }
            const int even = color[var.lower] == 0 ? var.lower : var.upper;
            const int odd = color[var.lower] == 0 ? var.upper : var.lower;
            add_edge(even, odd, var.cost, static_cast<int>(v));
            add_edge(odd, even, 0.0, -1);
        }
    }

    std::vector<int> solve()
    {
        u_.assign(n_, 0.0);
        v_.assign(n_, 0.0);
        match_left_.assign(n_, -1);
        match_right_.assign(n_, -1);
        for (int s = 0; s < n_; ++s) augment_from(s);
        canonicalize();
        std::vector<int> selected;
        for (int l = 0; l < n_; ++l)
            if (edges_[match_left_[l]].var >= 0) selected.push_back(edges_[match_left_[l]].var);
        return selected;
    }

private:
    void add_edge(int l, int r, double cost, int var)
    {
        if (var >= 0) var_edge_[var] = static_cast<int>(edges_.size());
        adj_[l].push_back(static_cast<int>(edges_.size()));
        edges_.push_back({l, r, cost, var});
    }

    double reduced(int e) const
    {
        const auto& ed = edges_[e];
        return ed.cost - u_[ed.left] - v_[ed.right];
    }

    // Dijkstra over reduced costs from free left node s to the nearest free
    // right node, then a dual update that keeps every reduced cost >= 0 and
    // makes the augmenting path tight.
    void augment_from(int s)
    {
        std::vector<double> dist(n_, kInf);
        std::vector<int> from(n_, -1);
        std::vector<char> done(n_, 0);
        std::vector<std::pair<int, double>> tree{{s, 0.0}};
        std::vector<int> finalized;
        using Item = std::pair<double, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;

        auto relax = [&](int l, double d) {
            for (int e : adj_[l]) {
                const int r = edges_[e].right;
                if (done[r]) continue;
                const double nd = d + std::max(0.0, reduced(e));
                if (nd < dist[r]) {
                    dist[r] = nd;
                    from[r] = e;
                    heap.push({nd, r});
                }
            }
        };

        relax(s, 0.0);
        int free_right = -1;
        double reach = 0.0;
        while (!heap.empty()) {
            const auto [d, r] = heap.top();
            heap.pop();
            if (done[r] || d > dist[r]) continue;
            done[r] = 1;
            finalized.push_back(r);
            if (match_right_[r] < 0) {
                free_right = r;
                reach = d;
                break;
            }
            const int l = match_right_[r];
            tree.push_back({l, d});
            relax(l, d);
        }
        if (free_right < 0) throw Error("bipartite backend: no augmenting path (malformed problem)");

        for (const auto& [l, dl] : tree) u_[l] += reach - dl;
        for (int r : finalized) v_[r] -= reach - dist[r];

        int r = free_right;
        while (true) {
            const int e = from[r];
            const int l = edges_[e].left;
            const int previous = match_left_[l];
            match_left_[l] = e;
            match_right_[r] = l;
            if (l == s) break;
            r = edges_[previous].right;
        }
    }

    // Real node of a cell: whichever copy is not a dummy.
    int covering_edge(CellId c) const
    {
        const int e = match_left_[c];
        const auto& ed = edges_[e];
        if (ed.var >= 0 && (problem_.variables[ed.var].lower == c || problem_.variables[ed.var].upper == c))
            return e;
        return match_left_[match_right_[c]];
    }

    // Among optimal matchings (perfect matchings on tight edges) pick the
    // lexicographically smallest selection: cells in ascending order each take
    // the smallest variable that still extends to an optimum. Extensions are
    // found as alternating cycles through the candidate edge.
    void canonicalize()
    {
        std::vector<char> fixed_left(n_, 0), fixed_right(n_, 0), covered(n_, 0);
        std::vector<int> seen_left(n_, -1), seen_right(n_, -1), via(n_, -1);
        int stamp = 0;

        auto reroute = [&](int e) {
            const int x = edges_[e].left, y = edges_[e].right;
            const int start = match_right_[y];
            const int target = edges_[match_left_[x]].right;
            ++stamp;
            std::queue<int> queue;
            queue.push(start);
            seen_left[start] = stamp;
            while (!queue.empty()) {
                const int l = queue.front();
                queue.pop();
                for (int e2 : adj_[l]) {
                    const int r = edges_[e2].right;
                    if (e2 == match_left_[l] || r == y || fixed_right[r] || seen_right[r] == stamp) continue;
                    if (reduced(e2) > kTight) continue;
                    seen_right[r] = stamp;
                    via[r] = e2;
                    if (r == target) {
                        int rr = target;
                        while (true) {
                            const int ee = via[rr];
                            const int ll = edges_[ee].left;
                            const int old = edges_[match_left_[ll]].right;
                            match_left_[ll] = ee;
                            match_right_[rr] = ll;
                            if (ll == start) break;
                            rr = old;
                        }
                        match_left_[x] = e;
                        match_right_[y] = x;
                        return true;
                    }
                    const int next = match_right_[r];
                    if (seen_left[next] == stamp) continue;
                    seen_left[next] = stamp;
                    queue.push(next);
                }
            }
            return false;
        };

        for (CellId c = 0; c < n_; ++c) {
            if (covered[c]) continue;
            const int current = edges_[covering_edge(c)].var;
            int chosen = current;
            for (int v : problem_.incidence[c]) {
                if (v >= current) break;
                const auto& var = problem_.variables[v];
                if (var.lower != c || (!var.is_diagonal() && covered[var.upper])) continue;
                const int e = var_edge_[v];
                if (reduced(e) > kTight) continue;
                if (reroute(e)) {
                    chosen = v;
                    break;
                }
            }
            const int e = var_edge_[chosen];
            fixed_left[edges_[e].left] = 1;
            fixed_right[edges_[e].right] = 1;
            covered[problem_.variables[chosen].lower] = 1;
            covered[problem_.variables[chosen].upper] = 1;
        }
    }

    const MatchingProblem& problem_;
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> var_edge_;
    std::vector<double> u_, v_;
    std::vector<int> match_left_, match_right_;
};

}  // namespace

Matching solve_bipartite(const MatchingProblem& problem)
{
    if (problem.num_cells == 0) return {};
    ParityAssignment solver(problem);
    return decode_selection(problem, solver.solve());
}

}  // namespace forman
