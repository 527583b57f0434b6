#pragma once

#include "core/geometry.hpp"
#include "core/graph.hpp"
#include "core/slab_index.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rhgen {

/// Per-vertex step sizes: angular (radians per step) and radial in the
/// transformed coordinate x = sinh(alpha r).
struct MovementState {
    std::vector<double> tau_phi;
    std::vector<double> tau_r;
};

struct MovementOptions {
    double move_fraction = 1.0;
    double tau_phi_min = -1.0;
    double tau_phi_max = 1.0;
    double tau_r_min = -10.0;
    double tau_r_max = 1.0;
    std::uint64_t seed = 0;
    int threads = 0;
    double slab_ratio = 0.9;
    std::optional<std::size_t> slab_count;
};

/// (phi + tau_phi) mod 2pi, in [0, 2pi).
double rotate_step(double phi, double tau_phi) noexcept;

struct RadialStep {
    double r;
    double tau_r;
    std::uint64_t reflections;
};

/// x = sinh(alpha r), y = x + tau_r, r' = asinh(y) / alpha. A move leaving
/// [0, sinh(alpha R)] is folded back at the boundaries; every fold negates tau_r.
RadialStep radial_step(double r, double tau_r, double R, double alpha) noexcept;

/// Step sizes drawn uniformly from the option ranges, one counter-based
/// sub-stream per vertex.
MovementState init_movement(std::uint64_t n, const MovementOptions& options);

struct EdgeDelta {
    std::vector<Edge> inserted;
    std::vector<Edge> deleted;

    bool empty() const noexcept { return inserted.empty() && deleted.empty(); }
};

/// A threshold graph whose vertices move in discrete steps. The slab index
/// and adjacency are updated in place; only moved vertices are re-queried.
/// Not safe to read concurrently with step()/move().
class DynamicGraph {
public:
    explicit DynamicGraph(Graph graph, const MovementOptions& options = {});
    DynamicGraph(Graph graph, MovementState state, const MovementOptions& options);

    /// Moves round(move_fraction * n) vertices, chosen afresh for each step.
    EdgeDelta step();

    /// Moves exactly the given vertices by one rotation + radial step.
    EdgeDelta move(std::span<const NodeId> vertices);

    /// Vertices step() would move at the given step number.
    std::vector<NodeId> movers_for_step(std::uint64_t step) const;

    /// Current graph; edges sorted.
    Graph snapshot() const;

    std::uint64_t vertex_count() const noexcept { return positions_.size(); }
    std::uint64_t edge_count() const noexcept { return edge_count_; }
    std::span<const PolarPoint> positions() const noexcept { return positions_; }
    const MovementState& movement() const noexcept { return state_; }
    const SlabIndex& index() const noexcept { return index_; }
    std::uint64_t steps_taken() const noexcept { return steps_; }
    double radius() const noexcept { return R_; }
    double alpha() const noexcept { return alpha_; }

private:
    double R_;
    double alpha_;
    MovementOptions options_;
    MovementState state_;
    std::vector<PolarPoint> positions_;
    std::vector<CachedPoint> cached_;
    std::vector<std::vector<NodeId>> adjacency_;
    std::vector<char> moving_;
    SlabIndex index_;
    std::uint64_t edge_count_ = 0;
    std::uint64_t steps_ = 0;
};

} // namespace rhgen
