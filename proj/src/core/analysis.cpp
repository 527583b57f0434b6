#include "core/analysis.hpp"

#include "core/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

namespace rhgen {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// BFS from `source`; returns its eccentricity within its component.
std::uint32_t bfs(const Adjacency& adj, NodeId source, std::vector<std::uint32_t>& dist, std::vector<NodeId>& queue) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    queue.clear();
    dist[source] = 0;
    queue.push_back(source);
    std::uint32_t ecc = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeId v = queue[head];
        const auto d = dist[v];
        ecc = d;
        for (NodeId w : adj.neighbors(v)) {
            if (dist[w] == kUnreached) {
                dist[w] = d + 1;
                queue.push_back(w);
            }
        }
    }
    return ecc;
}

// Highest-degree vertex of the largest component, or n when the graph is empty.
NodeId largest_component_hub(const Adjacency& adj) {
    const auto n = adj.vertex_count();
    if (n == 0) return 0;
    std::uint32_t count = 0;
    const auto labels = component_labels(adj, &count);
    std::vector<std::uint64_t> sizes(count, 0);
    for (auto l : labels) ++sizes[l];
    const auto biggest =
        static_cast<std::uint32_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
    NodeId hub = 0;
    bool found = false;
    for (NodeId v = 0; v < n; ++v) {
        if (labels[v] != biggest) continue;
        if (!found || adj.degree(v) > adj.degree(hub)) hub = v;
        found = true;
    }
    return hub;
}

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

} // namespace

double average_degree(const Graph& graph) {
    if (graph.n == 0) return 0.0;
    return 2.0 * static_cast<double>(graph.edges.size()) / static_cast<double>(graph.n);
}

double clustering_coefficient(const Adjacency& adj) {
    const auto n = adj.vertex_count();
    if (n == 0) return 0.0;

    // Orient each edge toward the higher (degree, id); every triangle is then
    // found exactly once from its lowest-ranked corner.
    const auto ranks_below = [&](NodeId a, NodeId b) {
        return adj.degree(a) < adj.degree(b) || (adj.degree(a) == adj.degree(b) && a < b);
    };
    std::vector<std::vector<NodeId>> out(n);
    for (NodeId v = 0; v < n; ++v)
        for (NodeId w : adj.neighbors(v))
            if (ranks_below(v, w)) out[v].push_back(w);

    std::vector<std::uint64_t> triangles(n, 0);
    std::vector<NodeId> mark(n, std::numeric_limits<NodeId>::max());
    for (NodeId v = 0; v < n; ++v) {
        for (NodeId u : out[v]) mark[u] = v;
        for (NodeId u : out[v]) {
            for (NodeId w : out[u]) {
                if (mark[w] == v) {
                    ++triangles[v];
                    ++triangles[u];
                    ++triangles[w];
                }
            }
        }
    }

    double sum = 0.0;
    for (NodeId v = 0; v < n; ++v) {
        const double d = adj.degree(v);
        if (d >= 2.0) sum += 2.0 * static_cast<double>(triangles[v]) / (d * (d - 1.0));
    }
    return sum / static_cast<double>(n);
}

double degree_assortativity(const Adjacency& adj) {
    const auto n = adj.vertex_count();
    long double sum_xy = 0, sum_x = 0, sum_x2 = 0, pairs = 0;
    for (NodeId v = 0; v < n; ++v) {
        const long double dv = adj.degree(v);
        for (NodeId w : adj.neighbors(v)) {
            const long double dw = adj.degree(w);
            sum_xy += dv * dw;
            sum_x += dv;
            sum_x2 += dv * dv;
            pairs += 1;
        }
    }
    if (pairs == 0) return 0.0;
    const long double mean = sum_x / pairs;
    const long double var = sum_x2 / pairs - mean * mean;
    const long double cov = sum_xy / pairs - mean * mean;
    if (var <= 1e-12L * std::max(1.0L, mean * mean)) return 1.0;
    return static_cast<double>(std::clamp(cov / var, -1.0L, 1.0L));
}

std::vector<std::uint32_t> core_numbers(const Adjacency& adj) {
    const auto n = adj.vertex_count();
    std::vector<std::uint32_t> degree(n);
    std::uint32_t max_degree = 0;
    for (NodeId v = 0; v < n; ++v) {
        degree[v] = adj.degree(v);
        max_degree = std::max(max_degree, degree[v]);
    }

    // vertices sorted by current degree, with bucket starts
    std::vector<std::uint64_t> bucket_start(max_degree + 2, 0);
    for (auto d : degree) ++bucket_start[d + 1];
    for (std::size_t d = 1; d < bucket_start.size(); ++d) bucket_start[d] += bucket_start[d - 1];
    std::vector<NodeId> order(n);
    std::vector<std::uint64_t> position(n);
    {
        auto cursor = bucket_start;
        for (NodeId v = 0; v < n; ++v) {
            position[v] = cursor[degree[v]]++;
            order[position[v]] = v;
        }
    }

    for (std::uint64_t i = 0; i < n; ++i) {
        const NodeId v = order[i];
        for (NodeId w : adj.neighbors(v)) {
            if (degree[w] > degree[v]) {
                // swap w to the front of its bucket, then shrink it by one
                const auto dw = degree[w];
                const auto front = bucket_start[dw];
                const NodeId u = order[front];
                if (u != w) {
                    std::swap(order[front], order[position[w]]);
                    position[u] = position[w];
                    position[w] = front;
                }
                ++bucket_start[dw];
                --degree[w];
            }
        }
    }
    return degree;
}

std::uint32_t degeneracy(const Adjacency& adj) {
    const auto cores = core_numbers(adj);
    return cores.empty() ? 0 : *std::max_element(cores.begin(), cores.end());
}

std::vector<std::uint32_t> component_labels(const Adjacency& adj, std::uint32_t* count) {
    const auto n = adj.vertex_count();
    std::vector<std::uint32_t> label(n, kUnreached);
    std::vector<NodeId> queue;
    std::uint32_t next = 0;
    for (NodeId s = 0; s < n; ++s) {
        if (label[s] != kUnreached) continue;
        label[s] = next;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (NodeId w : adj.neighbors(queue[head]))
                if (label[w] == kUnreached) {
                    label[w] = next;
                    queue.push_back(w);
                }
        ++next;
    }
    if (count) *count = next;
    return label;
}

std::vector<std::uint64_t> connected_components(const Adjacency& adj) {
    std::uint32_t count = 0;
    const auto labels = component_labels(adj, &count);
    std::vector<std::uint64_t> sizes(count, 0);
    for (auto l : labels) ++sizes[l];
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return sizes;
}

std::uint32_t largest_component_diameter(const Adjacency& adj) {
    const auto n = adj.vertex_count();
    if (n == 0) return 0;
    const NodeId root = largest_component_hub(adj);

    std::vector<std::uint32_t> dist(n);
    std::vector<NodeId> queue;
    const std::uint32_t root_ecc = bfs(adj, root, dist, queue);

    // fringe sets: vertices grouped by their distance from the root
    std::vector<std::vector<NodeId>> fringe(root_ecc + 1);
    for (NodeId v : queue) fringe[dist[v]].push_back(v);

    std::uint32_t lower = root_ecc;
    std::uint32_t upper = 2 * root_ecc;
    std::vector<std::uint32_t> scratch(n);
    std::vector<NodeId> scratch_queue;
    for (std::uint32_t level = root_ecc; upper > lower && level > 0; --level) {
        std::uint32_t fringe_ecc = 0;
        for (NodeId v : fringe[level]) fringe_ecc = std::max(fringe_ecc, bfs(adj, v, scratch, scratch_queue));
        lower = std::max(lower, fringe_ecc);
        if (lower > 2 * (level - 1)) return lower;
        upper = 2 * (level - 1);
    }
    return lower;
}

std::uint32_t largest_component_diameter_lower_bound(const Adjacency& adj, int sweeps) {
    const auto n = adj.vertex_count();
    if (n == 0) return 0;
    std::vector<std::uint32_t> dist(n);
    std::vector<NodeId> queue;
    NodeId start = largest_component_hub(adj);
    std::uint32_t best = 0;
    for (int s = 0; s < std::max(1, sweeps); ++s) {
        bfs(adj, start, dist, queue);
        const NodeId far = queue.back();
        best = std::max(best, bfs(adj, far, dist, queue));
        // restart from the midpoint of the sweep's long path
        const NodeId other = queue.back();
        const auto half = dist[other] / 2;
        for (NodeId v : queue)
            if (dist[v] == half) {
                start = v;
                break;
            }
    }
    return best;
}

double powerlaw_exponent_estimate(std::span<const std::uint32_t> degrees, std::uint32_t k_min) {
    if (k_min < 1) fail(ErrorCode::InvalidArgument, "k_min must be at least 1");
    const double shifted = static_cast<double>(k_min) - 0.5;
    std::size_t tail = 0;
    double log_sum = 0.0;
    for (auto k : degrees) {
        if (k < k_min) continue;
        ++tail;
        log_sum += std::log(static_cast<double>(k) / shifted);
    }
    if (tail < kMinTailSize)
        fail(ErrorCode::InvalidArgument, "insufficient tail mass: " + std::to_string(tail) +
                                             " values with degree >= " + std::to_string(k_min) + ", need " +
                                             std::to_string(kMinTailSize));
    return 1.0 + static_cast<double>(tail) / log_sum;
}

double powerlaw_exponent_estimate(const Adjacency& adj, std::uint32_t k_min) {
    std::vector<std::uint32_t> degrees(adj.vertex_count());
    for (NodeId v = 0; v < degrees.size(); ++v) degrees[v] = adj.degree(v);
    return powerlaw_exponent_estimate(degrees, k_min);
}

MetricReport compute_metrics(const Graph& graph, std::uint32_t k_min) {
    const Adjacency adj(graph.n, graph.edges);
    MetricReport r;
    r.n = graph.n;
    r.m = graph.edges.size();
    r.avg_deg = average_degree(graph);
    r.cc = clustering_coefficient(adj);
    r.assort = degree_assortativity(adj);
    r.degeneracy = degeneracy(adj);
    const auto sizes = connected_components(adj);
    r.lcc_size = sizes.empty() ? 0 : sizes.front();
    r.lcc_diam = largest_component_diameter(adj);
    try {
        r.gamma_hat = powerlaw_exponent_estimate(adj, k_min);
    } catch (const Error&) {
        r.gamma_hat = std::numeric_limits<double>::quiet_NaN();
    }
    return r;
}

std::string metrics_csv_header() { return "n,m,avg_deg,cc,assort,degeneracy,lcc_size,lcc_diam,gamma_hat"; }

std::string format_csv_row(const MetricReport& r) {
    return std::to_string(r.n) + "," + std::to_string(r.m) + "," + format_double(r.avg_deg) + "," +
           format_double(r.cc) + "," + format_double(r.assort) + "," + std::to_string(r.degeneracy) + "," +
           std::to_string(r.lcc_size) + "," + std::to_string(r.lcc_diam) + "," + format_double(r.gamma_hat);
}

std::string format_key_value(const MetricReport& r) {
    return "n=" + std::to_string(r.n) + "\nm=" + std::to_string(r.m) + "\navg_deg=" + format_double(r.avg_deg) +
           "\ncc=" + format_double(r.cc) + "\nassort=" + format_double(r.assort) +
           "\ndegeneracy=" + std::to_string(r.degeneracy) + "\nlcc_size=" + std::to_string(r.lcc_size) +
           "\nlcc_diam=" + std::to_string(r.lcc_diam) + "\ngamma_hat=" + format_double(r.gamma_hat) + "\n";
}

} // namespace rhgen
