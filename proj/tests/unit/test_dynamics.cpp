#include "core/dynamics.hpp"
#include "core/generator.hpp"
#include "core/reference_oracle.hpp"
#include "core/stats.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace rhgen {
namespace {

TEST(RotateStep, Examples) {
    EXPECT_EQ(rotate_step(1.0, 0.0), 1.0);
    EXPECT_NEAR(rotate_step(6.0, 1.0), 7.0 - kTwoPi, 1e-15);
    EXPECT_NEAR(rotate_step(0.2, -1.0), kTwoPi - 0.8, 1e-15);
    for (double tau : {-25.0, -kTwoPi, 0.0, kTwoPi, 40.0}) {
        const double phi = rotate_step(3.0, tau);
        EXPECT_GE(phi, 0.0);
        EXPECT_LT(phi, kTwoPi);
    }
}

TEST(RadialStep, ZeroStepKeepsRadiusExactly) {
    for (double r : {0.0, 0.3, 5.0, 9.99, 10.0}) {
        const auto s = radial_step(r, 0.0, 10.0, 1.0);
        EXPECT_EQ(s.r, r);
        EXPECT_EQ(s.reflections, 0u);
    }
}

TEST(RadialStep, MatchesDirectEvaluation) {
    // asinh(sinh(1) + 1) at 50 digits
    const auto s = radial_step(1.0, 1.0, 10.0, 1.0);
    EXPECT_NEAR(s.r, 1.5193504738280655, 1e-12);
    EXPECT_EQ(s.tau_r, 1.0);
    EXPECT_EQ(s.reflections, 0u);
}

TEST(RadialStep, InverseMoveReturnsToStart) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> r(0.0, 12.0), tau(-2.0, 2.0);
    int checked = 0;
    for (int i = 0; i < 10000; ++i) {
        const double r0 = r(rng), t = tau(rng);
        const auto fwd = radial_step(r0, t, 12.0, 0.8);
        if (fwd.reflections != 0) continue;
        const auto back = radial_step(fwd.r, -t, 12.0, 0.8);
        ASSERT_EQ(back.reflections, 0u);
        EXPECT_NEAR(back.r, r0, 1e-12 * std::max(1.0, r0));
        ++checked;
    }
    EXPECT_GT(checked, 5000);
}

TEST(RadialStep, ReflectionBookkeeping) {
    std::mt19937_64 rng(4);
    const double R = 6.0, alpha = 1.0;
    const double xmax = std::sinh(alpha * R);
    std::uniform_real_distribution<double> r(0.0, R), tau(-3.0 * xmax, 3.0 * xmax);
    std::uint64_t reflected = 0;
    for (int i = 0; i < 100000; ++i) {
        const double t = tau(rng);
        const auto s = radial_step(r(rng), t, R, alpha);
        ASSERT_GE(s.r, 0.0);
        ASSERT_LE(s.r, R);
        EXPECT_EQ(s.tau_r, s.reflections % 2 == 1 ? -t : t);
        reflected += s.reflections > 0;
    }
    EXPECT_GT(reflected, 0u);
}

TEST(RadialStep, FoldsAtBothEnds) {
    const double R = 5.0, xmax = std::sinh(R);
    const auto low = radial_step(std::asinh(1.0), -3.0, R, 1.0);
    EXPECT_NEAR(std::sinh(low.r), 2.0, 1e-9);
    EXPECT_EQ(low.reflections, 1u);
    EXPECT_EQ(low.tau_r, 3.0);
    const auto high = radial_step(std::asinh(xmax - 1.0), 3.0, R, 1.0);
    EXPECT_NEAR(std::sinh(high.r), xmax - 2.0, 1e-9 * xmax);
    EXPECT_EQ(high.reflections, 1u);
    EXPECT_EQ(high.tau_r, -3.0);
}

TEST(InitMovement, DrawsFromConfiguredRanges) {
    MovementOptions opts;
    opts.seed = 9;
    const auto state = init_movement(10000, opts);
    ASSERT_EQ(state.tau_phi.size(), 10000u);
    ASSERT_EQ(state.tau_r.size(), 10000u);
    for (std::size_t i = 0; i < 10000; ++i) {
        EXPECT_GE(state.tau_phi[i], -1.0);
        EXPECT_LT(state.tau_phi[i], 1.0);
        EXPECT_GE(state.tau_r[i], -10.0);
        EXPECT_LT(state.tau_r[i], 1.0);
    }
    EXPECT_EQ(init_movement(10000, opts).tau_r, state.tau_r);
}

TEST(DynamicGraph, MovingNothingGivesEmptyDelta) {
    DynamicGraph dyn(generate(2000, 8.0, 3.0, {.seed = 1}), {.seed = 2});
    const auto before = dyn.snapshot().edges;
    EXPECT_TRUE(dyn.move({}).empty());
    MovementOptions none;
    none.move_fraction = 0.0;
    DynamicGraph still(generate(2000, 8.0, 3.0, {.seed = 1}), none);
    EXPECT_TRUE(still.step().empty());
    EXPECT_EQ(dyn.snapshot().edges, before);
}

TEST(DynamicGraph, FullMoveEqualsRegeneration) {
    auto g = generate(2000, 8.0, 3.0, {.seed = 5});
    const double R = g.radius, alpha = g.alpha;
    DynamicGraph dyn(std::move(g), {.seed = 6});
    for (int step = 0; step < 5; ++step) {
        dyn.step();
        const auto snap = dyn.snapshot();
        const auto oracle = generate_quadratic(snap.coords, R, alpha);
        ASSERT_EQ(snap.edges, oracle.edges) << "step " << step;
        const auto regenerated = generate_from_positions(snap.coords, R, alpha);
        ASSERT_TRUE(same_edge_set(snap.edges, regenerated.edges));
    }
}

TEST(DynamicGraph, DeltaIsExactSymmetricDifference) {
    DynamicGraph dyn(generate(3000, 10.0, 2.5, {.seed = 7}), {.move_fraction = 0.3, .seed = 8});
    auto previous = dyn.snapshot().edges;
    for (int step = 0; step < 5; ++step) {
        const auto delta = dyn.step();
        const auto current = dyn.snapshot().edges;
        std::vector<Edge> inserted, deleted;
        std::set_difference(current.begin(), current.end(), previous.begin(), previous.end(), std::back_inserter(inserted));
        std::set_difference(previous.begin(), previous.end(), current.begin(), current.end(), std::back_inserter(deleted));
        auto got_ins = delta.inserted, got_del = delta.deleted;
        std::sort(got_ins.begin(), got_ins.end());
        std::sort(got_del.begin(), got_del.end());
        EXPECT_EQ(got_ins, inserted);
        EXPECT_EQ(got_del, deleted);
        EXPECT_EQ(dyn.edge_count(), current.size());
        previous = current;
    }
}

TEST(DynamicGraph, SubsetMoveOnlyTouchesMovers) {
    auto g = generate(2000, 8.0, 3.0, {.seed = 9});
    const auto original = g.coords;
    const double R = g.radius, alpha = g.alpha;
    DynamicGraph dyn(std::move(g), {.seed = 10});
    std::vector<NodeId> movers;
    for (NodeId v = 0; v < 2000; v += 13) movers.push_back(v);
    const auto delta = dyn.move(movers);
    const std::set<NodeId> moved(movers.begin(), movers.end());
    for (NodeId v = 0; v < 2000; ++v)
        if (!moved.count(v)) {
            EXPECT_EQ(dyn.positions()[v], original[v]);
        }
    for (const auto& e : delta.inserted) EXPECT_TRUE(moved.count(e.u) || moved.count(e.v));
    for (const auto& e : delta.deleted) EXPECT_TRUE(moved.count(e.u) || moved.count(e.v));
    EXPECT_EQ(dyn.snapshot().edges, generate_quadratic(dyn.snapshot().coords, R, alpha).edges);
}

TEST(DynamicGraph, MoverSelectionMatchesFraction) {
    DynamicGraph dyn(generate(10000, 8.0, 3.0, {.seed = 1}), {.move_fraction = 0.05, .seed = 2});
    const auto movers = dyn.movers_for_step(0);
    EXPECT_EQ(movers.size(), 500u);
    EXPECT_EQ(std::set<NodeId>(movers.begin(), movers.end()).size(), 500u);
    EXPECT_NE(dyn.movers_for_step(1), movers);
}

TEST(DynamicGraph, RadialMarginalSurvivesAStep) {
    auto g = generate(10000, 8.0, 3.0, {.seed = 11});
    const double R = g.radius, alpha = g.alpha;
    DynamicGraph dyn(std::move(g), {.seed = 12});
    dyn.step();
    std::vector<double> radii, angles;
    for (const auto& p : dyn.positions()) {
        radii.push_back(p.r);
        angles.push_back(p.phi);
    }
    const auto cdf = [&](double r) { return (std::cosh(alpha * r) - 1) / (std::cosh(alpha * R) - 1); };
    EXPECT_TRUE(stats::ks_test(radii, cdf).passes(0.01));
    EXPECT_TRUE(stats::ks_test(angles, [](double x) { return x / kTwoPi; }).passes(0.01));
}

TEST(DynamicGraph, ResultIsIndependentOfThreadCount) {
    const auto g = generate(5000, 8.0, 3.0, {.seed = 13});
    DynamicGraph one(g, {.seed = 14, .threads = 1});
    DynamicGraph four(g, {.seed = 14, .threads = 4});
    for (int i = 0; i < 3; ++i) {
        one.step();
        four.step();
    }
    EXPECT_EQ(one.snapshot().edges, four.snapshot().edges);
    EXPECT_TRUE(std::equal(one.positions().begin(), one.positions().end(), four.positions().begin()));
}

} // namespace
} // namespace rhgen
