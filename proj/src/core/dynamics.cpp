#include "core/dynamics.hpp"

#include "core/error.hpp"
#include "core/generator.hpp"
#include "core/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include <omp.h>

namespace rhgen {

namespace {
int resolve_threads(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }
} // namespace

double rotate_step(double phi, double tau_phi) noexcept {
    double w = std::fmod(phi + tau_phi, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    return w < kTwoPi ? w : 0.0;
}

RadialStep radial_step(double r, double tau_r, double R, double alpha) noexcept {
    const double x_max = std::sinh(alpha * R);
    const double y = std::sinh(r * alpha) + tau_r;
    if (y >= 0.0 && y <= x_max) return {std::clamp(std::asinh(y) / alpha, 0.0, R), tau_r, 0};
    if (x_max <= 0.0) return {0.0, tau_r, 0};

    // Unfold the billiard: boundaries sit at every integer multiple of x_max.
    const auto crossings = static_cast<std::uint64_t>(y > x_max ? std::ceil(y / x_max) - 1.0 : std::ceil(-y / x_max));
    const double period = 2.0 * x_max;
    double w = std::fmod(y, period);
    if (w < 0.0) w += period;
    const double folded = w <= x_max ? w : period - w;
    const double tau = (crossings % 2 == 1) ? -tau_r : tau_r;
    return {std::clamp(std::asinh(folded) / alpha, 0.0, R), tau, crossings};
}

MovementState init_movement(std::uint64_t n, const MovementOptions& options) {
    if (!(options.tau_phi_min <= options.tau_phi_max) || !(options.tau_r_min <= options.tau_r_max))
        fail(ErrorCode::InvalidArgument, "step ranges must satisfy min <= max");
    MovementState state;
    state.tau_phi.resize(n);
    state.tau_r.resize(n);
    const CounterStream phi_stream(options.seed, streams::kTauPhi);
    const CounterStream r_stream(options.seed, streams::kTauR);
    for (std::uint64_t i = 0; i < n; ++i) {
        state.tau_phi[i] = options.tau_phi_min + (options.tau_phi_max - options.tau_phi_min) * phi_stream.uniform(i);
        state.tau_r[i] = options.tau_r_min + (options.tau_r_max - options.tau_r_min) * r_stream.uniform(i);
    }
    return state;
}

DynamicGraph::DynamicGraph(Graph graph, const MovementOptions& options)
    : DynamicGraph(std::move(graph), init_movement(graph.n, options), options) {}

DynamicGraph::DynamicGraph(Graph graph, MovementState state, const MovementOptions& options)
    : R_(graph.radius), alpha_(graph.alpha), options_(options), state_(std::move(state)),
      positions_(std::move(graph.coords)) {
    const auto n = graph.n;
    if (positions_.size() != n) fail(ErrorCode::InvalidArgument, "dynamic model needs vertex coordinates");
    if (state_.tau_phi.size() != n || state_.tau_r.size() != n)
        fail(ErrorCode::InvalidArgument, "movement state size does not match the vertex count");
    if (!(options_.move_fraction >= 0.0 && options_.move_fraction <= 1.0))
        fail(ErrorCode::InvalidArgument, "move fraction must lie in [0, 1]");

    cached_.resize(n);
    for (std::uint64_t i = 0; i < n; ++i) cached_[i] = CachedPoint::of(positions_[i]);
    adjacency_.resize(n);
    for (const Edge& e : graph.edges) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    edge_count_ = graph.edges.size();
    moving_.assign(n, 0);
    index_ = SlabIndex::build(std::span<const PolarPoint>(positions_),
                              compute_boundaries(R_, n, options_.slab_ratio, options_.slab_count), options_.threads);
}

std::vector<NodeId> DynamicGraph::movers_for_step(std::uint64_t step) const {
    const auto n = positions_.size();
    const auto k = static_cast<std::uint64_t>(std::llround(options_.move_fraction * static_cast<double>(n)));
    std::vector<NodeId> all(n);
    std::iota(all.begin(), all.end(), NodeId{0});
    if (k >= n) return all;
    std::vector<NodeId> chosen;
    chosen.reserve(k);
    std::mt19937_64 rng(CounterStream(options_.seed, streams::kMoveSubset).bits(step));
    std::sample(all.begin(), all.end(), std::back_inserter(chosen), k, rng);
    return chosen;
}

EdgeDelta DynamicGraph::step() {
    const auto movers = movers_for_step(steps_);
    auto delta = move(movers);
    return delta;
}

EdgeDelta DynamicGraph::move(std::span<const NodeId> vertices) {
    const auto n = positions_.size();
    std::vector<NodeId> movers(vertices.begin(), vertices.end());
    std::sort(movers.begin(), movers.end());
    movers.erase(std::unique(movers.begin(), movers.end()), movers.end());
    if (!movers.empty() && movers.back() >= n)
        fail(ErrorCode::InvalidArgument, "cannot move unknown vertex " + std::to_string(movers.back()));
    ++steps_;
    EdgeDelta delta;
    if (movers.empty()) return delta;

    const int threads = resolve_threads(options_.threads);
    const auto count = static_cast<std::int64_t>(movers.size());

#pragma omp parallel for schedule(static) num_threads(threads)
    for (std::int64_t j = 0; j < count; ++j) {
        const NodeId v = movers[static_cast<std::size_t>(j)];
        moving_[v] = 1;
        const auto radial = radial_step(positions_[v].r, state_.tau_r[v], R_, alpha_);
        positions_[v] = {rotate_step(positions_[v].phi, state_.tau_phi[v]), radial.r};
        state_.tau_r[v] = radial.tau_r;
        cached_[v] = CachedPoint::of(positions_[v]);
    }

    index_.relocate(movers, positions_, options_.threads);

    std::vector<std::vector<NodeId>> fresh(movers.size());
    std::vector<std::vector<Edge>> inserted(movers.size());
    std::vector<std::vector<Edge>> deleted(movers.size());
#pragma omp parallel num_threads(threads)
    {
        std::vector<NodeId> old;
        std::vector<NodeId> diff;
#pragma omp for schedule(dynamic, 16)
        for (std::int64_t j = 0; j < count; ++j) {
            const auto slot = static_cast<std::size_t>(j);
            const NodeId v = movers[slot];
            auto& now = fresh[slot];
            ball_query(index_, cached_[v], v, R_, now);
            std::sort(now.begin(), now.end());

            old.assign(adjacency_[v].begin(), adjacency_[v].end());
            std::sort(old.begin(), old.end());

            // pairs of two movers are reported once, by the smaller id
            const auto keep = [&](NodeId w) { return !moving_[w] || v < w; };
            diff.clear();
            std::set_difference(old.begin(), old.end(), now.begin(), now.end(), std::back_inserter(diff));
            for (NodeId w : diff)
                if (keep(w)) deleted[slot].push_back(make_edge(v, w));
            diff.clear();
            std::set_difference(now.begin(), now.end(), old.begin(), old.end(), std::back_inserter(diff));
            for (NodeId w : diff)
                if (keep(w)) inserted[slot].push_back(make_edge(v, w));
        }
    }

    for (std::size_t j = 0; j < movers.size(); ++j) {
        const NodeId v = movers[j];
        for (const Edge& e : deleted[j]) {
            const NodeId w = e.u == v ? e.v : e.u;
            if (!moving_[w]) {
                auto& list = adjacency_[w];
                const auto it = std::find(list.begin(), list.end(), v);
                *it = list.back();
                list.pop_back();
            }
        }
        for (const Edge& e : inserted[j]) {
            const NodeId w = e.u == v ? e.v : e.u;
            if (!moving_[w]) adjacency_[w].push_back(v);
        }
        delta.deleted.insert(delta.deleted.end(), deleted[j].begin(), deleted[j].end());
        delta.inserted.insert(delta.inserted.end(), inserted[j].begin(), inserted[j].end());
    }
    for (std::size_t j = 0; j < movers.size(); ++j) {
        adjacency_[movers[j]] = std::move(fresh[j]);
        moving_[movers[j]] = 0;
    }

    std::sort(delta.deleted.begin(), delta.deleted.end());
    std::sort(delta.inserted.begin(), delta.inserted.end());
    edge_count_ = edge_count_ + delta.inserted.size() - delta.deleted.size();
    return delta;
}

Graph DynamicGraph::snapshot() const {
    Graph g;
    g.n = positions_.size();
    g.radius = R_;
    g.alpha = alpha_;
    g.coords = positions_;
    g.edges.reserve(edge_count_);
    for (NodeId v = 0; v < g.n; ++v)
        for (NodeId w : adjacency_[v])
            if (v < w) g.edges.push_back({v, w});
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

} // namespace rhgen
