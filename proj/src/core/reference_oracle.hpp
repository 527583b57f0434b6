#pragma once

#include "core/geometry.hpp"
#include "core/graph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace rhgen {

/// Largest n accepted by the quadratic oracle without `force`.
inline constexpr std::uint64_t kOracleMaxVertices = 100'000;

/// Tests every pair u < v against the threshold rule. Edges come out sorted.
/// Throws ErrorCode::ResourceLimit above kOracleMaxVertices unless forced.
Graph generate_quadratic(std::span<const PolarPoint> positions, double R, double alpha = 1.0, bool force = false,
                         int threads = 0);

/// Positions drawn through std::mt19937_64 and a direct inverse-CDF
/// evaluation, sharing no code path with generate_positions().
std::vector<PolarPoint> oracle_positions(std::uint64_t n, double alpha, double R, std::uint64_t seed);

/// Pairwise-probing reference generator: oracle_positions + generate_quadratic.
Graph generate_oracle(std::uint64_t n, double R, double alpha, std::uint64_t seed, bool force = false,
                      int threads = 0);

} // namespace rhgen
