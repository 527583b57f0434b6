#pragma once

#include "core/geometry.hpp"
#include "core/graph.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rhgen {

/// Radial boundaries c_0 = 0 < c_1 < ... < c_L = R with widths shrinking
/// geometrically by `ratio` from the center outwards.
struct RadialBoundaries {
    std::vector<double> c;
    double ratio = 0.9;

    std::size_t slab_count() const noexcept { return c.empty() ? 0 : c.size() - 1; }
    double radius() const noexcept { return c.back(); }

    /// Slab containing radius r: c_i <= r < c_{i+1}, last slab closed at R.
    std::size_t slab_of(double r) const noexcept;
};

/// max(1, ceil(log2 n))
std::size_t default_slab_count(std::uint64_t n) noexcept;

/// c_1 = (1 - p) R / (1 - p^L), c_{k+1} = c_k + c_1 p^k, c_L = R exactly.
/// L defaults to default_slab_count(n).
RadialBoundaries compute_boundaries(double R, std::uint64_t n, double ratio = 0.9,
                                    std::optional<std::size_t> slab_count = std::nullopt);

struct SlabEntry {
    double phi;
    double cosh_r;
    double sinh_r;
    double r;
    NodeId id;

    CachedPoint cached() const noexcept { return {phi, cosh_r, sinh_r}; }
    PolarPoint point() const noexcept { return {phi, r}; }
};

/// Points of one slab sorted ascending by angle.
struct Slab {
    std::vector<SlabEntry> entries;
};

/// At most two contiguous runs of a slab, together holding exactly the
/// entries whose angle lies in a query interval.
struct CandidateRanges {
    std::array<std::span<const SlabEntry>, 2> parts;

    std::size_t size() const noexcept { return parts[0].size() + parts[1].size(); }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (const auto& part : parts)
            for (const auto& entry : part) fn(entry);
    }
};

struct IdPoint {
    NodeId id;
    PolarPoint point;
};

/// Concentric slabs, each an angle-sorted array. Immutable between calls to
/// relocate(); concurrent read-only queries are safe.
class SlabIndex {
public:
    SlabIndex() = default;

    /// Assigns each point to its slab and sorts every slab by angle.
    /// Throws ErrorCode::InvalidArgument for r outside [0, R].
    static SlabIndex build(std::span<const IdPoint> points, RadialBoundaries boundaries, int threads = 0);

    /// Convenience: ids are the positions' indices.
    static SlabIndex build(std::span<const PolarPoint> positions, RadialBoundaries boundaries, int threads = 0);

    const RadialBoundaries& boundaries() const noexcept { return boundaries_; }
    std::size_t slab_count() const noexcept { return slabs_.size(); }
    const Slab& slab(std::size_t i) const { return slabs_.at(i); }
    std::size_t size() const noexcept { return size_; }

    /// cosh / sinh of the inner boundary of slab i.
    double cosh_inner(std::size_t i) const noexcept { return cosh_c_[i]; }
    double sinh_inner(std::size_t i) const noexcept { return sinh_c_[i]; }

    /// Stored entries of slab i whose angle lies in `interval`.
    CandidateRanges candidates_in(std::size_t slab, const AngularInterval& interval) const;

    /// Slab currently holding vertex id.
    std::size_t slab_of_vertex(NodeId id) const { return location_.at(id); }

    /// Moves the given vertices to `positions[id]`: each is removed from its
    /// slab and merged into the slab of its new radius. Untouched slabs are
    /// not rewritten.
    void relocate(std::span<const NodeId> moved, std::span<const PolarPoint> positions, int threads = 0);

private:
    RadialBoundaries boundaries_;
    std::vector<Slab> slabs_;
    std::vector<double> cosh_c_;
    std::vector<double> sinh_c_;
    std::vector<std::uint32_t> location_;
    std::size_t size_ = 0;
};

} // namespace rhgen
