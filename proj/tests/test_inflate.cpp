#include <gtest/gtest.h>

#include <set>

#include "countforge/error.hpp"
#include "countforge/inflate.hpp"
#include "countforge/oracles.hpp"

using namespace countforge;
using namespace countforge::inflate;
using oracles::ZVariant;

namespace {
Multigraph k2() { return Multigraph(2, {{0, 1}}); }
Multigraph triangle() { return Multigraph(3, {{0, 1}, {1, 2}, {0, 2}}); }
}  // namespace

TEST(Inflate, PathGivesStretch) {
  const Multigraph c6 = inflate::inflate(triangle(), path_graph(2));
  EXPECT_EQ(c6.vertex_count(), 6u);
  EXPECT_EQ(c6.edge_count(), 6u);
  for (auto d : c6.degrees()) EXPECT_EQ(d, 2u);
  EXPECT_TRUE(is_connected(c6));
  EXPECT_EQ(c6, stretch(triangle(), 2));
}

TEST(Inflate, BundleGivesThickening) {
  const Multigraph g = inflate::inflate(k2(), bundle_graph(3));
  EXPECT_EQ(g, Multigraph(2, {{0, 1}, {0, 1}, {0, 1}}));
  EXPECT_EQ(g, thicken(k2(), 3));
}

TEST(Inflate, ThetaOnK2IsTheta) {
  const TwoTerminalGraph t = theta_graph({2, 3, 5});
  EXPECT_EQ(t.graph.vertex_count(), 9u);
  EXPECT_EQ(t.graph.edge_count(), 10u);
  EXPECT_EQ(inflate::inflate(k2(), t), t.graph);
}

TEST(Inflate, LoopMapsBothTerminalsToOneVertex) {
  const Multigraph g = inflate::inflate(Multigraph(1, {{0, 0}}), path_graph(3));
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(component_count(g), 1u);
}

TEST(ThetaGraph, Examples) {
  EXPECT_EQ(theta_graph({1}).graph, k2());
  const TwoTerminalGraph c4 = theta_graph({2, 2});
  EXPECT_EQ(c4.graph.vertex_count(), 4u);
  EXPECT_EQ(c4.graph.edge_count(), 4u);
  for (auto d : c4.graph.degrees()) EXPECT_EQ(d, 2u);
}

TEST(ThetaShift, SingleEdgeIsTrivial) {
  const ShiftResult r = theta_shift(3, Rational(2, 5), {1});
  EXPECT_EQ(r.shifted_weight, Rational(2, 5));
  EXPECT_EQ(r.per_edge_factor, 1);
}

TEST(ThetaShift, IdentityOnK2) {
  const ShiftResult r = theta_shift(2, 1, {2, 3});
  const Multigraph inflated = inflate::inflate(k2(), theta_graph({2, 3}));
  EXPECT_EQ(inflated.edge_count(), 5u);
  EXPECT_EQ(oracles::z_subset_sum(inflated, 2, 1, ZVariant::z),
            r.per_edge_factor * oracles::z_subset_sum(k2(), 2, r.shifted_weight, ZVariant::z));
}

TEST(ThetaShift, Degenerate) {
  EXPECT_THROW(theta_shift(0, 1, {2}), DegenerateShift);
  EXPECT_THROW(theta_shift(-2, 1, {2}), DegenerateShift);
  // 1 + q/w = 1 - 2 = -1 makes even lengths degenerate.
  EXPECT_THROW(theta_shift(-4, 2, {2, 3}), DegenerateShift);
  EXPECT_THROW(theta_shift(-6, 3, {4}), DegenerateShift);
}

TEST(SeriesParallel, Examples) {
  const Rational w(3, 7);
  const ShiftResult path = series_parallel_shift(Composition::path, {w, w}, 0);
  EXPECT_EQ(path.shifted_weight, w / 2);
  EXPECT_EQ(path.per_edge_factor, 2 * w);
  const ShiftResult bundle = series_parallel_shift(Composition::bundle, {w, w}, 5);
  EXPECT_EQ(bundle.shifted_weight, (1 + w) * (1 + w) - 1);
  EXPECT_EQ(bundle.per_edge_factor, 1);
  EXPECT_THROW(series_parallel_shift(Composition::path, {w, 0}, 0), DegenerateShift);
}

TEST(SeriesParallel, ThreeStretch) {
  // At q = 0: w = w'/3 with factor 3 w^2.
  const Rational w(5, 2);
  const ShiftResult zero = series_parallel_shift(Composition::path, {w, w, w}, 0);
  EXPECT_EQ(zero.shifted_weight, w / 3);
  EXPECT_EQ(zero.per_edge_factor, 3 * w * w);
  // At q != 0: 1 + q/w' = (1 + q/w)^3.
  const Rational q(-3, 4);
  const ShiftResult general = series_parallel_shift(Composition::path, {w, w, w}, q);
  EXPECT_EQ(1 + q / general.shifted_weight, pow(1 + q / w, 3));
}

TEST(Generators, ThetaSets) {
  const auto sets = generate_theta_sets(2, 1, 4);
  ASSERT_EQ(sets.size(), 5u);
  std::set<Rational> shifts;
  for (const auto& s : sets) {
    EXPECT_EQ(s.size(), 3u);
    for (auto x : s) EXPECT_EQ(x % 2, 0u);
    shifts.insert(theta_shift(2, 1, s).shifted_weight);
  }
  EXPECT_EQ(shifts.size(), 5u);
  EXPECT_THROW(generate_theta_sets(1, 1, 4), InvalidArgument);
  EXPECT_THROW(generate_theta_sets(-1, 1, 4), InvalidArgument);
}

TEST(WumpGraph, Examples) {
  EXPECT_EQ(wump_graph({1}).graph, k2());
  EXPECT_EQ(wump_graph({4}).graph.edge_count(), 4u);
  const TwoTerminalGraph w = wump_graph({3, 2, 3, 2});
  EXPECT_EQ(w.graph.edge_count(), 3u + 4u + 9u + 8u);
  EXPECT_EQ(w.graph.vertex_count(), 5u + (2u * 1) + (1u * 2) + (2u * 3) + (1u * 4));
  EXPECT_EQ(w.terminal_left, 0u);
  EXPECT_EQ(w.terminal_right, 1u);
}

TEST(WumpShift, Examples) {
  const Rational w(-2, 3);
  EXPECT_EQ(wump_shift(w, {1}), (ShiftResult{w, 1}));
  const ShiftResult s = wump_shift(w, {4});
  EXPECT_EQ(s.shifted_weight, w / 4);
  EXPECT_EQ(s.per_edge_factor, 4 * pow(w, 3));
  const Multigraph g(2, {{0, 1}, {1, 1}, {0, 1}});
  const ShiftResult r = wump_shift(w, {2, 1});
  EXPECT_EQ(oracles::z_subset_sum(inflate::inflate(g, wump_graph({2, 1})), 0, w, ZVariant::z0),
            pow(r.per_edge_factor, 3) * oracles::z_subset_sum(g, 0, r.shifted_weight, ZVariant::z0));
}

TEST(Generators, WumpSequences) {
  for (const Rational& w : {Rational(10), Rational(-1, 2)}) {
    const auto seqs = generate_wump_sequences(w, 4);
    ASSERT_EQ(seqs.size(), 5u);
    std::set<Rational> shifts;
    for (const auto& s : seqs) shifts.insert(wump_shift(w, s).shifted_weight);
    EXPECT_EQ(shifts.size(), 5u);
  }
  EXPECT_EQ(wump_period(10), 1u);
  // (1 - 1/6)^r < 1/4 first at r = 8.
  EXPECT_EQ(wump_period(Rational(-1, 2)), 8u);
  EXPECT_THROW(generate_wump_sequences(1, 4), RangeError);
}
