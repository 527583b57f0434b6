#include "core/graph.hpp"

#include <algorithm>

namespace rhgen {

Adjacency::Adjacency(std::uint64_t n, std::span<const Edge> edges) : offsets_(n + 1, 0), targets_(2 * edges.size()) {
    for (const Edge& e : edges) {
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
    }
    for (std::uint64_t v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
    std::vector<std::uint64_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const Edge& e : edges) {
        targets_[cursor[e.u]++] = e.v;
        targets_[cursor[e.v]++] = e.u;
    }
    for (std::uint64_t v = 0; v < n; ++v)
        std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                  targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
}

bool same_edge_set(std::vector<Edge> a, std::vector<Edge> b) {
    if (a.size() != b.size()) return false;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

} // namespace rhgen
