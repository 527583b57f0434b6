#pragma once

#include "core/geometry.hpp"
#include "core/graph.hpp"
#include "core/parameters.hpp"
#include "core/slab_index.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace rhgen {

struct GeneratorOptions {
    std::uint64_t seed = 0;
    int threads = 0; // 0: OpenMP default
    double slab_ratio = 0.9;
    std::optional<std::size_t> slab_count;
    std::uint64_t memory_cap_bytes = std::uint64_t{4} << 30;
};

/// Wall-clock seconds per generation phase.
struct PhaseTimings {
    double calibration = 0.0;
    double positions = 0.0;
    double index = 0.0;
    double edges = 0.0;
    double assembly = 0.0;

    double total() const noexcept { return calibration + positions + index + edges + assembly; }
};

/// Threshold graph with n vertices, target average degree k_bar and
/// power-law exponent gamma. The disk radius is calibrated from k_bar.
Graph generate(std::uint64_t n, double k_bar, double gamma, const GeneratorOptions& options = {},
               PhaseTimings* timings = nullptr);

/// As generate(), with the disk radius given directly.
Graph generate_with_radius(std::uint64_t n, double R, double alpha, const GeneratorOptions& options = {},
                           PhaseTimings* timings = nullptr);

/// i.i.d. positions: uniform angle, radial density alpha sinh(alpha r)/(cosh(alpha R) - 1).
/// Vertex i draws from its own counter-based sub-stream, so the result is
/// bit-identical for every thread count.
std::vector<PolarPoint> generate_positions(std::uint64_t n, double alpha, double R, std::uint64_t seed,
                                           int threads = 0);

/// Threshold edges on caller-supplied positions.
Graph generate_from_positions(std::vector<PolarPoint> positions, double R, double alpha,
                              const GeneratorOptions& options = {}, PhaseTimings* timings = nullptr);

/// Receives the edges of one block of vertices. Called concurrently from
/// worker threads; `block` identifies the block in emission order.
using EdgeSink = std::function<void(std::size_t block, std::span<const Edge> edges)>;

/// Emits every pair at distance <= R exactly once, scanning from each
/// vertex outward through its own slab and all outer slabs.
/// Returns the number of edges emitted.
std::uint64_t stream_threshold_edges(const SlabIndex& index, double R, int threads, const EdgeSink& sink);

/// Collected, in an order that depends only on the index contents.
std::vector<Edge> threshold_edges(const SlabIndex& index, double R, int threads = 0);

/// All indexed vertices w != self with dist(p, w) <= R, across every slab.
void ball_query(const SlabIndex& index, const CachedPoint& p, NodeId self, double R, std::vector<NodeId>& out);

/// Rough upper estimate of the bytes needed to hold the edge list.
std::uint64_t estimated_edge_bytes(std::uint64_t n, double alpha, double R);

} // namespace rhgen
