#pragma once

#include "core/graph.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rhgen {

/// 2m / n.
double average_degree(const Graph& graph);

/// Mean over all vertices of the local clustering coefficient
/// (closed triads / triads); vertices of degree < 2 contribute 0.
double clustering_coefficient(const Adjacency& adj);

/// Pearson correlation of the degrees at either end of each edge.
/// 1 when every endpoint has the same degree; 0 without edges.
double degree_assortativity(const Adjacency& adj);

/// Core number of every vertex (bucket peeling).
std::vector<std::uint32_t> core_numbers(const Adjacency& adj);

/// Largest core number.
std::uint32_t degeneracy(const Adjacency& adj);

/// Component id per vertex, ids dense in [0, count).
std::vector<std::uint32_t> component_labels(const Adjacency& adj, std::uint32_t* count = nullptr);

/// Component sizes, largest first.
std::vector<std::uint64_t> connected_components(const Adjacency& adj);

/// Exact diameter of the largest connected component (iFUB).
std::uint32_t largest_component_diameter(const Adjacency& adj);

/// Lower bound on the same diameter from repeated double sweeps.
std::uint32_t largest_component_diameter_lower_bound(const Adjacency& adj, int sweeps = 4);

/// Discrete power-law tail exponent by maximum likelihood,
///   gamma = 1 + N / sum_i ln(k_i / (k_min - 1/2)),  over degrees k_i >= k_min.
/// Throws ErrorCode::InvalidArgument with fewer than 100 tail values.
double powerlaw_exponent_estimate(std::span<const std::uint32_t> degrees, std::uint32_t k_min = 10);
double powerlaw_exponent_estimate(const Adjacency& adj, std::uint32_t k_min = 10);

inline constexpr std::size_t kMinTailSize = 100;

struct MetricReport {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    double avg_deg = 0.0;
    double cc = 0.0;
    double assort = 0.0;
    std::uint32_t degeneracy = 0;
    std::uint64_t lcc_size = 0;
    std::uint32_t lcc_diam = 0;
    double gamma_hat = 0.0; // NaN when the tail is too thin
};

MetricReport compute_metrics(const Graph& graph, std::uint32_t k_min = 10);

/// "key=value" lines in CSV column order.
std::string format_key_value(const MetricReport& report);
/// n,m,avg_deg,cc,assort,degeneracy,lcc_size,lcc_diam,gamma_hat
std::string metrics_csv_header();
std::string format_csv_row(const MetricReport& report);

} // namespace rhgen
