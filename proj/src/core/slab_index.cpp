#include "core/slab_index.hpp"

#include "core/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include <omp.h>

namespace rhgen {

namespace {

int resolve_threads(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

SlabEntry make_entry(NodeId id, const PolarPoint& p) {
    return {p.phi, std::cosh(p.r), std::sinh(p.r), p.r, id};
}

bool by_angle(const SlabEntry& a, const SlabEntry& b) {
    return a.phi < b.phi || (a.phi == b.phi && a.id < b.id);
}

} // namespace

std::size_t RadialBoundaries::slab_of(double r) const noexcept {
    const auto it = std::upper_bound(c.begin(), c.end(), r);
    const auto idx = static_cast<std::size_t>(std::distance(c.begin(), it));
    if (idx == 0) return 0;
    return std::min(idx - 1, slab_count() - 1);
}

std::size_t default_slab_count(std::uint64_t n) noexcept {
    if (n <= 2) return 1;
    return static_cast<std::size_t>(std::bit_width(n - 1));
}

RadialBoundaries compute_boundaries(double R, std::uint64_t n, double ratio, std::optional<std::size_t> slab_count) {
    if (!(R >= 0.0) || !std::isfinite(R)) fail(ErrorCode::InvalidArgument, "disk radius must be finite and >= 0");
    if (!(ratio > 0.0 && ratio < 1.0)) fail(ErrorCode::InvalidArgument, "slab ratio must lie in (0, 1)");
    const std::size_t L = slab_count.value_or(default_slab_count(n));
    if (L < 1) fail(ErrorCode::InvalidArgument, "slab count must be at least 1");

    RadialBoundaries b;
    b.ratio = ratio;
    b.c.resize(L + 1);
    b.c[0] = 0.0;
    const double first_width = (1.0 - ratio) * R / (1.0 - std::pow(ratio, static_cast<double>(L)));
    double width = first_width;
    for (std::size_t k = 1; k < L; ++k) {
        b.c[k] = b.c[k - 1] + width;
        width *= ratio;
    }
    b.c[L] = R;
    return b;
}

SlabIndex SlabIndex::build(std::span<const IdPoint> points, RadialBoundaries boundaries, int threads) {
    SlabIndex index;
    const std::size_t L = boundaries.slab_count();
    const double R = boundaries.radius();
    index.slabs_.resize(L);
    index.cosh_c_.resize(L);
    index.sinh_c_.resize(L);
    for (std::size_t i = 0; i < L; ++i) {
        index.cosh_c_[i] = std::cosh(boundaries.c[i]);
        index.sinh_c_[i] = std::sinh(boundaries.c[i]);
    }

    NodeId max_id = 0;
    for (const auto& [id, p] : points) {
        if (!(p.r >= 0.0 && p.r <= R))
            fail(ErrorCode::InvalidArgument, "point " + std::to_string(id) + " has radius " + std::to_string(p.r) +
                                                 " outside [0, " + std::to_string(R) + "]");
        if (!(p.phi >= 0.0 && p.phi < kTwoPi))
            fail(ErrorCode::InvalidArgument, "point " + std::to_string(id) + " has angle outside [0, 2pi)");
        max_id = std::max(max_id, id);
    }
    index.location_.assign(points.empty() ? 0 : static_cast<std::size_t>(max_id) + 1, 0);

    std::vector<std::size_t> counts(L, 0);
    std::vector<std::uint32_t> slab_of_point(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) {
        const auto s = boundaries.slab_of(points[k].point.r);
        slab_of_point[k] = static_cast<std::uint32_t>(s);
        ++counts[s];
    }
    for (std::size_t i = 0; i < L; ++i) index.slabs_[i].entries.reserve(counts[i]);
    for (std::size_t k = 0; k < points.size(); ++k) {
        const auto s = slab_of_point[k];
        index.slabs_[s].entries.push_back(make_entry(points[k].id, points[k].point));
        index.location_[points[k].id] = s;
    }

#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_threads(threads))
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(L); ++i) {
        auto& entries = index.slabs_[static_cast<std::size_t>(i)].entries;
        std::sort(entries.begin(), entries.end(), by_angle);
    }

    index.boundaries_ = std::move(boundaries);
    index.size_ = points.size();
    return index;
}

SlabIndex SlabIndex::build(std::span<const PolarPoint> positions, RadialBoundaries boundaries, int threads) {
    std::vector<IdPoint> points(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i) points[i] = {static_cast<NodeId>(i), positions[i]};
    return build(points, std::move(boundaries), threads);
}

CandidateRanges SlabIndex::candidates_in(std::size_t slab, const AngularInterval& interval) const {
    const std::span<const SlabEntry> all(slabs_[slab].entries);
    CandidateRanges out;
    switch (interval.kind) {
    case AngularInterval::Kind::Empty:
        return out;
    case AngularInterval::Kind::FullCircle:
        out.parts[0] = all;
        return out;
    case AngularInterval::Kind::Arc:
        break;
    }

    const auto first_at_least = [&](double phi) {
        return static_cast<std::size_t>(
            std::partition_point(all.begin(), all.end(), [phi](const SlabEntry& e) { return e.phi < phi; }) -
            all.begin());
    };
    const auto first_above = [&](double phi) {
        return static_cast<std::size_t>(
            std::partition_point(all.begin(), all.end(), [phi](const SlabEntry& e) { return e.phi <= phi; }) -
            all.begin());
    };

    const double lo = interval.center - interval.half_width;
    const double hi = interval.center + interval.half_width;
    if (lo >= 0.0 && hi < kTwoPi) {
        const auto b = first_at_least(lo);
        const auto e = first_above(hi);
        if (b < e) out.parts[0] = all.subspan(b, e - b);
    } else if (lo < 0.0) {
        // wraps below zero: [lo + 2pi, 2pi) and [0, hi]
        const auto tail = first_at_least(lo + kTwoPi);
        const auto head = first_above(hi);
        out.parts[0] = all.subspan(0, head);
        if (tail >= head) out.parts[1] = all.subspan(tail);
        else out.parts[0] = all;
    } else {
        // wraps above 2pi: [lo, 2pi) and [0, hi - 2pi]
        const auto tail = first_at_least(lo);
        const auto head = first_above(hi - kTwoPi);
        out.parts[0] = all.subspan(0, head);
        if (tail >= head) out.parts[1] = all.subspan(tail);
        else out.parts[0] = all;
    }
    return out;
}

void SlabIndex::relocate(std::span<const NodeId> moved, std::span<const PolarPoint> positions, int threads) {
    if (moved.empty()) return;
    const std::size_t L = slabs_.size();
    const double R = boundaries_.radius();

    std::vector<char> is_moved(location_.size(), 0);
    std::vector<char> touched(L, 0);
    std::vector<std::vector<SlabEntry>> incoming(L);
    for (NodeId id : moved) {
        if (id >= location_.size()) fail(ErrorCode::InvalidArgument, "relocate: unknown vertex " + std::to_string(id));
        const PolarPoint& p = positions[id];
        if (!(p.r >= 0.0 && p.r <= R) || !(p.phi >= 0.0 && p.phi < kTwoPi))
            fail(ErrorCode::InvalidArgument, "relocate: vertex " + std::to_string(id) + " moved outside the disk");
        if (is_moved[id]) continue;
        is_moved[id] = 1;
        touched[location_[id]] = 1;
        const auto s = boundaries_.slab_of(p.r);
        touched[s] = 1;
        incoming[s].push_back(make_entry(id, p));
        location_[id] = static_cast<std::uint32_t>(s);
    }

#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_threads(threads))
    for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(L); ++si) {
        const auto i = static_cast<std::size_t>(si);
        if (!touched[i]) continue;
        auto& entries = slabs_[i].entries;
        std::erase_if(entries, [&](const SlabEntry& e) { return is_moved[e.id] != 0; });
        auto& add = incoming[i];
        std::sort(add.begin(), add.end(), by_angle);
        std::vector<SlabEntry> merged;
        merged.reserve(entries.size() + add.size());
        std::merge(entries.begin(), entries.end(), add.begin(), add.end(), std::back_inserter(merged), by_angle);
        entries = std::move(merged);
    }
}

} // namespace rhgen
