#include "core/generator.hpp"

#include "core/error.hpp"
#include "core/random.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include <omp.h>

namespace rhgen {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

int resolve_threads(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

constexpr std::size_t kBlockSize = 1024;

// Candidate pruning uses a slightly inflated cosh R and widened arcs, so the
// candidate set stays a superset of the predicate's neighbors under rounding.
constexpr double kPruneInflation = 1e-12;
constexpr double kAngularSlack = 1e-9;

double pruning_cosh(double R) { return std::cosh(R) * (1.0 + kPruneInflation); }

void check_vertex_count(std::uint64_t n) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "vertex count must be positive");
    if (n > std::numeric_limits<NodeId>::max())
        fail(ErrorCode::InvalidArgument, "vertex count exceeds the 32-bit vertex id range");
}

void check_memory(std::uint64_t n, double alpha, double R, std::uint64_t cap) {
    const auto bytes = estimated_edge_bytes(n, alpha, R);
    if (bytes > cap)
        fail(ErrorCode::ResourceLimit, "estimated edge memory " + std::to_string(bytes) + " bytes exceeds cap of " +
                                           std::to_string(cap) + " bytes");
}

Graph assemble(std::vector<PolarPoint> positions, double R, double alpha, const GeneratorOptions& options,
               PhaseTimings& t) {
    const auto n = positions.size();
    auto start = Clock::now();
    auto boundaries = compute_boundaries(R, n, options.slab_ratio, options.slab_count);
    auto index = SlabIndex::build(std::span<const PolarPoint>(positions), std::move(boundaries), options.threads);
    t.index = seconds_since(start);

    start = Clock::now();
    std::size_t blocks = (n + kBlockSize - 1) / kBlockSize;
    std::vector<std::vector<Edge>> per_block(blocks);
    stream_threshold_edges(index, R, options.threads, [&](std::size_t block, std::span<const Edge> edges) {
        per_block[block].assign(edges.begin(), edges.end());
    });
    t.edges = seconds_since(start);

    start = Clock::now();
    Graph g;
    g.n = n;
    g.radius = R;
    g.alpha = alpha;
    std::size_t total = 0;
    for (const auto& b : per_block) total += b.size();
    g.edges.reserve(total);
    for (auto& b : per_block) {
        g.edges.insert(g.edges.end(), b.begin(), b.end());
        std::vector<Edge>().swap(b);
    }
    g.coords = std::move(positions);
    t.assembly = seconds_since(start);
    return g;
}

} // namespace

std::uint64_t estimated_edge_bytes(std::uint64_t n, double alpha, double R) {
    const double nd = static_cast<double>(n);
    double k = expected_avg_degree(nd, alpha, R);
    if (!std::isfinite(k)) k = nd - 1.0;
    k = std::clamp(k, 0.0, std::max(nd - 1.0, 0.0));
    // per-block buffers and the merged list coexist during assembly
    return static_cast<std::uint64_t>(2.0 * sizeof(Edge) * k * nd / 2.0);
}

std::vector<PolarPoint> generate_positions(std::uint64_t n, double alpha, double R, std::uint64_t seed, int threads) {
    check_vertex_count(n);
    if (!(alpha > 0.0)) fail(ErrorCode::InvalidArgument, "alpha must be positive");
    if (!(R >= 0.0) || !std::isfinite(R)) fail(ErrorCode::InvalidArgument, "disk radius must be finite and >= 0");
    std::vector<PolarPoint> positions(n);
    const CounterStream angular(seed, streams::kAngular);
    const CounterStream radial(seed, streams::kRadial);
#pragma omp parallel for schedule(static) num_threads(resolve_threads(threads))
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
        const auto k = static_cast<std::uint64_t>(i);
        positions[k] = {angular_from_unit(angular.uniform(k)), radial_from_unit(radial.uniform(k), alpha, R)};
    }
    return positions;
}

std::uint64_t stream_threshold_edges(const SlabIndex& index, double R, int threads, const EdgeSink& sink) {
    const std::size_t L = index.slab_count();
    const ThresholdPredicate within(R);
    const double cosh_prune = pruning_cosh(R);

    std::vector<std::size_t> offsets(L + 1, 0);
    for (std::size_t i = 0; i < L; ++i) offsets[i + 1] = offsets[i] + index.slab(i).entries.size();
    const std::size_t total = offsets[L];
    const std::size_t blocks = (total + kBlockSize - 1) / kBlockSize;

    std::uint64_t emitted = 0;
#pragma omp parallel num_threads(resolve_threads(threads)) reduction(+ : emitted)
    {
        std::vector<Edge> buffer;
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
            buffer.clear();
            const std::size_t begin = static_cast<std::size_t>(b) * kBlockSize;
            const std::size_t end = std::min(total, begin + kBlockSize);
            std::size_t s = static_cast<std::size_t>(std::upper_bound(offsets.begin(), offsets.end(), begin) -
                                                     offsets.begin()) - 1;
            for (std::size_t pos = begin; pos < end; ++pos) {
                while (pos >= offsets[s + 1]) ++s;
                const SlabEntry& v = index.slab(s).entries[pos - offsets[s]];
                const CachedPoint vp = v.cached();
                for (std::size_t i = s; i < L; ++i) {
                    const auto arc = min_max_phi(v.phi, v.cosh_r, v.sinh_r, index.cosh_inner(i), index.sinh_inner(i),
                                                 cosh_prune)
                                         .widened(kAngularSlack);
                    const bool own_slab = i == s;
                    index.candidates_in(i, arc).for_each([&](const SlabEntry& w) {
                        if (own_slab && w.id <= v.id) return;
                        if (within(vp, w.cached())) buffer.push_back(make_edge(v.id, w.id));
                    });
                }
            }
            emitted += buffer.size();
            sink(static_cast<std::size_t>(b), buffer);
        }
    }
    return emitted;
}

std::vector<Edge> threshold_edges(const SlabIndex& index, double R, int threads) {
    const std::size_t blocks = (index.size() + kBlockSize - 1) / kBlockSize;
    std::vector<std::vector<Edge>> per_block(blocks);
    stream_threshold_edges(index, R, threads, [&](std::size_t block, std::span<const Edge> edges) {
        per_block[block].assign(edges.begin(), edges.end());
    });
    std::vector<Edge> out;
    for (const auto& b : per_block) out.insert(out.end(), b.begin(), b.end());
    return out;
}

void ball_query(const SlabIndex& index, const CachedPoint& p, NodeId self, double R, std::vector<NodeId>& out) {
    const ThresholdPredicate within(R);
    const double cosh_prune = pruning_cosh(R);
    for (std::size_t i = 0; i < index.slab_count(); ++i) {
        const auto arc =
            min_max_phi(p.phi, p.cosh_r, p.sinh_r, index.cosh_inner(i), index.sinh_inner(i), cosh_prune)
                .widened(kAngularSlack);
        index.candidates_in(i, arc).for_each([&](const SlabEntry& w) {
            if (w.id != self && within(p, w.cached())) out.push_back(w.id);
        });
    }
}

Graph generate_from_positions(std::vector<PolarPoint> positions, double R, double alpha,
                              const GeneratorOptions& options, PhaseTimings* timings) {
    check_vertex_count(positions.size());
    check_memory(positions.size(), alpha, R, options.memory_cap_bytes);
    PhaseTimings local;
    auto g = assemble(std::move(positions), R, alpha, options, local);
    if (timings) *timings = local;
    return g;
}

namespace {

Graph sample_and_assemble(std::uint64_t n, double R, double alpha, const GeneratorOptions& options, PhaseTimings& t) {
    check_vertex_count(n);
    if (!(alpha > 0.0)) fail(ErrorCode::InvalidArgument, "alpha must be positive");
    if (!(R >= 0.0) || !std::isfinite(R)) fail(ErrorCode::InvalidArgument, "disk radius must be finite and >= 0");
    check_memory(n, alpha, R, options.memory_cap_bytes);

    const auto start = Clock::now();
    auto positions = generate_positions(n, alpha, R, options.seed, options.threads);
    t.positions = seconds_since(start);
    if (R == 0.0) {
        // A radius-0 disk has no area: the sample carries no density and is
        // treated as edgeless rather than as n coincident points.
        Graph g;
        g.n = n;
        g.radius = R;
        g.alpha = alpha;
        g.coords = std::move(positions);
        return g;
    }
    return assemble(std::move(positions), R, alpha, options, t);
}

} // namespace

Graph generate_with_radius(std::uint64_t n, double R, double alpha, const GeneratorOptions& options,
                           PhaseTimings* timings) {
    PhaseTimings local;
    auto g = sample_and_assemble(n, R, alpha, options, local);
    if (timings) *timings = local;
    return g;
}

Graph generate(std::uint64_t n, double k_bar, double gamma, const GeneratorOptions& options, PhaseTimings* timings) {
    if (n < 2) fail(ErrorCode::InvalidArgument, "need at least 2 vertices");
    const auto start = Clock::now();
    const double alpha = alpha_from_gamma(gamma);
    const double R = get_target_radius(n, k_bar, alpha);
    PhaseTimings local;
    local.calibration = seconds_since(start);
    auto g = sample_and_assemble(n, R, alpha, options, local);
    if (timings) *timings = local;
    return g;
}

} // namespace rhgen
