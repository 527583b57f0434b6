#pragma once

#include "core/geometry.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace rhgen {

using NodeId = std::uint32_t;

/// Undirected edge stored with u < v.
struct Edge {
    NodeId u;
    NodeId v;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(NodeId a, NodeId b) noexcept { return a < b ? Edge{a, b} : Edge{b, a}; }

struct Graph {
    std::uint64_t n = 0;
    double radius = 0.0;
    double alpha = 1.0;
    std::vector<PolarPoint> coords; // empty when read from a bare edge list
    std::vector<Edge> edges;

    std::uint64_t edge_count() const noexcept { return edges.size(); }
};

/// Compressed adjacency with sorted neighbor lists.
class Adjacency {
public:
    Adjacency(std::uint64_t n, std::span<const Edge> edges);

    std::uint64_t vertex_count() const noexcept { return offsets_.size() - 1; }
    std::uint64_t edge_count() const noexcept { return targets_.size() / 2; }
    std::uint32_t degree(NodeId v) const noexcept { return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]); }
    std::span<const NodeId> neighbors(NodeId v) const noexcept {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }

private:
    std::vector<std::uint64_t> offsets_;
    std::vector<NodeId> targets_;
};

/// Sorts edges and reports whether two edge lists describe the same set.
bool same_edge_set(std::vector<Edge> a, std::vector<Edge> b);

} // namespace rhgen
