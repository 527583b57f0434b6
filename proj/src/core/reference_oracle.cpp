#include "core/reference_oracle.hpp"

#include "core/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include <omp.h>

namespace rhgen {

Graph generate_quadratic(std::span<const PolarPoint> positions, double R, double alpha, bool force, int threads) {
    const std::uint64_t n = positions.size();
    if (n > kOracleMaxVertices && !force)
        fail(ErrorCode::ResourceLimit, "quadratic oracle refuses n = " + std::to_string(n) + " > " +
                                           std::to_string(kOracleMaxVertices) + " without force");
    if (!(R >= 0.0)) fail(ErrorCode::InvalidArgument, "disk radius must be >= 0");

    std::vector<CachedPoint> cached(n);
    for (std::uint64_t i = 0; i < n; ++i) cached[i] = CachedPoint::of(positions[i]);
    const ThresholdPredicate within(R);

    std::vector<std::vector<Edge>> rows(n);
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads > 0 ? threads : omp_get_max_threads())
    for (std::int64_t ui = 0; ui < static_cast<std::int64_t>(n); ++ui) {
        const auto u = static_cast<NodeId>(ui);
        for (NodeId v = u + 1; v < n; ++v)
            if (within(cached[u], cached[v])) rows[u].push_back({u, v});
    }

    Graph g;
    g.n = n;
    g.radius = R;
    g.alpha = alpha;
    g.coords.assign(positions.begin(), positions.end());
    for (auto& row : rows) g.edges.insert(g.edges.end(), row.begin(), row.end());
    return g;
}

std::vector<PolarPoint> oracle_positions(std::uint64_t n, double alpha, double R, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double cosh_aR = std::cosh(alpha * R);
    std::vector<PolarPoint> out(n);
    for (auto& p : out) {
        p.phi = std::fmod(unit(rng) * 2.0 * std::numbers::pi, 2.0 * std::numbers::pi);
        p.r = std::min(R, std::acosh(1.0 + unit(rng) * (cosh_aR - 1.0)) / alpha);
    }
    return out;
}

Graph generate_oracle(std::uint64_t n, double R, double alpha, std::uint64_t seed, bool force, int threads) {
    const auto positions = oracle_positions(n, alpha, R, seed);
    return generate_quadratic(positions, R, alpha, force, threads);
}

} // namespace rhgen
