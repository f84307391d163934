// Copyright 2026 The ncgkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "ncg/constructions.hpp"
#include "ncg/distance_uniformity.hpp"
#include "test_util.hpp"

namespace ncg {
namespace {

using testing::graph_of;
using testing::q;

Graph complete(int n) {
  Graph g(n);
  for (Node u = 0; u < n; ++u) {
    for (Node v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (Node u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

const Graph kPath4 = graph_of(4, {{0, 1}, {1, 2}, {2, 3}});

TEST(Layers, Examples) {
  EXPECT_EQ(layers(complete(5), 2).sizes(), (std::vector<int>{1, 4}));
  EXPECT_EQ(layers(cycle_graph(6), 4).sizes(), (std::vector<int>{1, 2, 2, 1}));
  EXPECT_EQ(layers(OwnedGraph(star(7)).graph(), 0).sizes(), (std::vector<int>{1, 6}));
  const auto split = layers(graph_of(4, {{0, 1}}), 0);
  EXPECT_EQ(split.unreachable, to_set({2, 3}));
}

TEST(Windows, RWindowExamples) {
  const DistanceTable dt(kPath4);
  EXPECT_EQ(r_window(dt, 2, 0, 1), to_set({1, 2, 3}));
  EXPECT_EQ(r_window(dt, 2, 0, 0), dt.layer(0, 2));
  EXPECT_EQ(r_window(dt, 1, 0, dt.eccentricity(0)), kPath4.nodes());
  EXPECT_EQ(r_window_by_index(dt, 0, 2, 0), singleton(2));
  EXPECT_THROW(r_window(dt, 1, 0, -1), std::invalid_argument);
}

TEST(Windows, MWindowExamples) {
  const Graph c4 = cycle_graph(4);
  const DistanceTable dt(c4);
  EXPECT_EQ(m_window(dt, 0, 1, 0), NodeSet{0});
  EXPECT_EQ(m_window(dt, 0, 1, 1), c4.nodes());
  EXPECT_EQ(m_window(dt, 2, 2, 0), c4.nodes());
  EXPECT_EQ(m_window(DistanceTable(kPath4), 0, 3, 3), kPath4.nodes());
}

TEST(WindowInequality, CliqueHoldsForAnyAlpha) {
  for (const auto& alpha : {q(0), q(1, 2), q(3)}) {
    const auto res = check_window_inequality(complete(6), alpha);
    EXPECT_TRUE(res.ok);
    EXPECT_EQ(res.r, 0);
    EXPECT_EQ(res.bound, -alpha * 4);
  }
}

TEST(WindowInequality, LongPathWithTinyAlphaFails) {
  Graph p(12);
  for (Node u = 0; u + 1 < 12; ++u) p.add_edge(u, u + 1);
  const auto res = check_window_inequality(p, q(0));
  EXPECT_FALSE(res.ok);
  EXPECT_NE(res.violating, NodeSet{0});
  EXPECT_LT(res.min_slack, q(0));
}

TEST(WindowInequality, SlackMatchesDirectCount) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const Graph g = testing::random_graph(n, 0.4, rng);
    if (!is_connected(g)) continue;
    const Rational alpha(static_cast<std::int64_t>(rng() % 10), 3);
    const auto res = check_window_inequality(g, alpha);
    const DistanceTable dt(g);
    const int d = dt.diameter();
    for (Node u = 0; u < n; ++u) {
      std::int64_t sum = 0;
      for (int i = 2; i <= d; ++i) sum += popcount(r_window_by_index(dt, u, res.r, i));
      ASSERT_EQ(res.slack[u], Rational(sum) - Rational(std::int64_t{n} * d - n) + alpha * 4);
    }
  }
}

TEST(Uniformity, WindowRadius) {
  EXPECT_EQ(window_radius(q(3), 9, q(1, 2)), 4);    // 4*3/(9/2) + 1 = 11/3
  EXPECT_EQ(window_radius(q(1), 4, q(1, 4)), 5);    // 4/(4/4) + 1 = 5 exactly
  EXPECT_EQ(window_radius(q(0), 10, q(1, 2)), 1);
}

TEST(Uniformity, CliqueCertifiedAtOne) {
  const auto cert = uniformity_certificate(complete(5), q(1), q(1, 5));
  EXPECT_TRUE(cert.ok);
  EXPECT_EQ(cert.r, 1);
  EXPECT_THROW(uniformity_certificate(complete(5), q(1), q(1)), std::invalid_argument);
  EXPECT_THROW(uniformity_certificate(complete(5), q(1), q(0)), std::invalid_argument);
}

TEST(Uniformity, SixCycleWindowHoldsFiveNodes) {
  // alpha = 0 gives x = 1; layers are 1,2,2,1 so the window [0, 2] around
  // r = 1 already holds five nodes.
  const auto cert = uniformity_certificate(cycle_graph(6), q(0), q(1, 6));
  ASSERT_TRUE(cert.ok);
  EXPECT_EQ(cert.x, 1);
  EXPECT_EQ(cert.r, 1);
  for (int c : cert.per_node_counts) EXPECT_EQ(c, 5);
  EXPECT_FALSE(uniformity_certificate(cycle_graph(6), q(0), q(1, 10)).ok);
}

TEST(Uniformity, DisconnectedHasNoCertificate) {
  EXPECT_FALSE(uniformity_certificate(graph_of(4, {{0, 1}}), q(1), q(1, 2)).ok);
  EXPECT_FALSE(is_distance_uniform(graph_of(4, {{0, 1}}), q(1, 2), UniformityMode::kUniform).ok);
}

TEST(DistanceUniform, Examples) {
  const auto k = is_distance_uniform(complete(6), q(1, 6), UniformityMode::kUniform);
  EXPECT_TRUE(k.ok);
  EXPECT_EQ(k.r, 1);
  EXPECT_FALSE(is_distance_uniform(graph_of(3, {{0, 1}, {1, 2}}), q(1, 10), UniformityMode::kUniform).ok);
  // The 6-cycle has layers 1,2,2,1: two consecutive layers never exceed 2 of 6.
  EXPECT_FALSE(is_distance_uniform(cycle_graph(6), q(1, 2), UniformityMode::kAlmostUniform).ok);
  EXPECT_TRUE(is_distance_uniform(cycle_graph(6), q(2, 3), UniformityMode::kAlmostUniform).ok);
}

TEST(DistanceUniform, PowerOfCertifiedEquilibrium) {
  // Reported behaviour: the 2x power of clique-of-stars(3,3) is almost
  // uniform for eps = 1/2.
  const Graph g = OwnedGraph(clique_of_stars(3, 3)).graph();
  const int x = window_radius(q(3), 9, q(1, 2));
  EXPECT_TRUE(is_distance_uniform(graph_power(g, 2 * x), q(1, 2), UniformityMode::kAlmostUniform).ok);
}

}  // namespace
}  // namespace ncg
