#include "forman/cost.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

namespace forman {

namespace {

void check_alpha(double alpha)
{
    if (!(alpha >= 0.0 && alpha <= 2.0))
        throw ParameterError("alpha must lie in [0, 2], got " + std::to_string(alpha));
}

unsigned worker_count()
{
    if (const char* env = std::getenv("FORMAN_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n > 1) return static_cast<unsigned>(std::min<long>(n, 256));
    }
    return 1;
}

}  // namespace

double cosine_distance(const Vector& u, const Vector& v)
{
    const double nu = u.norm(), nv = v.norm();
    if (nu == 0.0 || nv == 0.0) throw DomainError("cosine distance of a zero vector");
    return std::clamp(1.0 - u.dot(v) / (nu * nv), 0.0, 2.0);
}

Vector displacement(const CellComplex& complex, AdmissiblePair pair)
{
    return complex.barycenter(pair.upper) - complex.barycenter(pair.lower);
}

double critical_angle(double alpha)
{
    check_alpha(alpha);
    return std::acos(1.0 - alpha);
}

double CostModel::penalty() const noexcept
{
    return std::max(2.0 * alpha + 1.0, 3.0);
}

std::optional<std::size_t> CostModel::pair_index(CellId lower, CellId upper) const
{
    const AdmissiblePair key{lower, upper};
    auto it = std::lower_bound(pairs.begin(), pairs.end(), key);
    if (it == pairs.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - pairs.begin());
}

double CostModel::full_cost(CellId i, CellId j) const
{
    if (i == j) return alpha;
    if (auto k = pair_index(i, j)) return pair_costs[*k];
    return penalty();
}

CostModel CostModel::with_alpha(double new_alpha) const
{
    check_alpha(new_alpha);
    CostModel m = *this;
    m.alpha = new_alpha;
    return m;
}

CostModel build_cost_model(const CellComplex& complex, const VectorAssignment& vectors, double alpha)
{
    check_alpha(alpha);
    if (vectors.size() != complex.size()) throw AssignmentError("vector assignment does not cover the complex");

    CostModel m;
    m.alpha = alpha;
    m.num_cells = complex.size();
    m.pairs = complex.admissible_pairs();
    m.pair_costs.assign(m.pairs.size(), 0.0);

    auto evaluate = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            const Vector& v = vectors[m.pairs[k].lower];
            m.pair_costs[k] = is_zero_vector(v) ? 2.0 : cosine_distance(v, displacement(complex, m.pairs[k]));
        }
    };

    const unsigned workers = worker_count();
    if (workers <= 1 || m.pairs.size() < 4096) {
        evaluate(0, m.pairs.size());
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (m.pairs.size() + workers - 1) / workers;
        for (std::size_t b = 0; b < m.pairs.size(); b += chunk)
            pool.emplace_back(evaluate, b, std::min(m.pairs.size(), b + chunk));
    }
    return m;
}

}  // namespace forman
