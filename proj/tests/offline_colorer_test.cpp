// Copyright 2026 The wscolor Authors.
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

#include "doctest.h"
#include "graph_oracles.hpp"
#include "wscolor/generators.hpp"
#include "wscolor/offline_colorer.hpp"

using namespace wscolor;
using wscolor::testing::SmallGraph;

namespace {

AdjacencyGraph graph_of(const SmallGraph& g) { return AdjacencyGraph(g.vertices, g.edges); }

AdjacencyGraph graph_of(std::size_t n, std::vector<Edge> edges) {
  return AdjacencyGraph(n, edges);
}

std::uint32_t max_colour(const LocalColouring& c) {
  std::uint32_t top = 0;
  for (std::uint32_t x : c.colour) top = std::max(top, x);
  return top;
}

}  // namespace

TEST_CASE("adjacency graph basics") {
  const auto g = graph_of(4, {{0, 1}, {1, 2}, {1, 3}});
  CHECK(g.max_degree() == 3);
  CHECK(g.degree(0) == 1);
  CHECK(g.is_simple());
  CHECK_FALSE(graph_of(3, {{0, 1}, {1, 0}}).is_simple());
  CHECK_THROWS_AS(graph_of(3, {{0, 3}}), ValidationError);
  CHECK_THROWS_AS(graph_of(3, {{1, 1}}), ValidationError);
}

TEST_CASE("vizing on small named graphs") {
  const auto triangle = graph_of(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto tri = color_vizing(triangle);
  CHECK(is_proper(triangle, tri));
  CHECK(tri.colour_count() == 3);

  const auto path = graph_of(3, {{0, 1}, {1, 2}});
  const auto p = color_vizing(path);
  CHECK(is_proper(path, p));
  CHECK(p.colour_count() == 2);

  const auto petersen = graph_of(wscolor::testing::petersen());
  CHECK(petersen.max_degree() == 3);
  const auto pc = color_vizing(petersen);
  CHECK(is_proper(petersen, pc));
  CHECK(pc.colour_count() <= 4);
  CHECK(max_colour(pc) < 4);

  CHECK_THROWS_AS(color_vizing(graph_of(3, {{0, 1}, {1, 0}})), ValidationError);
}

TEST_CASE("vizing is deterministic") {
  const auto g = AdjacencyGraph(40, generate(GnpRandom{40, 0.3}, AsGiven{}, 2).edges);
  CHECK(color_vizing(g).colour == color_vizing(g).colour);
}

TEST_CASE("greedy examples") {
  const auto single = graph_of(2, {{0, 1}});
  CHECK(color_greedy(single).colour == std::vector<std::uint32_t>{0});

  const auto star = AdjacencyGraph(8, generate(Star{7}, AsGiven{}, 0).edges);
  CHECK(color_greedy(star).colour == std::vector<std::uint32_t>{0, 1, 2, 3, 4, 5, 6});

  const auto triangle = graph_of(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(color_greedy(triangle).colour_count() == 3);
}

TEST_CASE("brute-force chromatic index") {
  CHECK(chromatic_index_bruteforce(graph_of(3, {{0, 1}, {1, 2}, {0, 2}})) == 3);
  CHECK(chromatic_index_bruteforce(graph_of(6, {{0, 1}, {2, 3}, {4, 5}})) == 1);
  CHECK(chromatic_index_bruteforce(graph_of(wscolor::testing::complete(4))) == 3);
  CHECK(chromatic_index_bruteforce(graph_of(wscolor::testing::complete(5))) == 5);
  CHECK(chromatic_index_bruteforce(graph_of(2, {})) == 0);
  // Petersen has 15 edges, past the limit.
  CHECK_THROWS_AS(chromatic_index_bruteforce(graph_of(wscolor::testing::petersen())),
                  ValidationError);
}

// Class-2 check for Petersen by direct search: no proper 3-colouring exists.
TEST_CASE("petersen needs four colours (exhaustive search)") {
  const SmallGraph p = wscolor::testing::petersen();
  CHECK_FALSE(wscolor::testing::has_edge_colouring(p, 3));
  CHECK(wscolor::testing::chromatic_index_search(p) == 4);
}

TEST_CASE("brute force agrees with the independent search") {
  const auto levels = wscolor::testing::connected_graphs_up_to(6);
  for (const auto& level : levels) {
    for (const SmallGraph& sg : level) {
      CHECK(chromatic_index_bruteforce(graph_of(sg)) ==
            wscolor::testing::chromatic_index_search(sg));
    }
  }
}

TEST_CASE("connected graph enumeration matches known counts") {
  const auto levels = wscolor::testing::connected_graphs_up_to(8);
  const std::vector<std::size_t> known = {0, 1, 1, 3, 5, 12, 30, 79, 227};
  for (std::size_t m = 1; m <= 8; ++m) CHECK(levels[m].size() == known[m]);
}

TEST_CASE("vizing and greedy bounds on every connected graph with <= 7 edges") {
  const auto levels = wscolor::testing::connected_graphs_up_to(7);
  for (std::size_t m = 1; m < levels.size(); ++m) {
    for (const SmallGraph& sg : levels[m]) {
      const auto g = graph_of(sg);
      const std::size_t delta = g.max_degree();
      const std::size_t exact = chromatic_index_bruteforce(g);
      CHECK(exact >= delta);
      CHECK(exact <= delta + 1);
      const auto viz = color_vizing(g);
      CHECK(is_proper(g, viz));
      CHECK(viz.colour_count() <= delta + 1);
      CHECK(viz.colour_count() >= exact);
      const auto greedy = color_greedy(g);
      CHECK(is_proper(g, greedy));
      CHECK(greedy.colour_count() <= 2 * delta - 1);
    }
  }
}

TEST_CASE("property: vizing stays within max degree + 1 on random graphs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const double p = 0.05 + 0.03 * static_cast<double>(seed % 10);
    const EdgeStream s = generate(GnpRandom{60, p}, UniformRandomPermutation{seed}, seed);
    const AdjacencyGraph g(s.header.n, s.edges);
    const auto viz = color_vizing(g);
    CHECK(is_proper(g, viz));
    CHECK(max_colour(viz) <= g.max_degree());
    const auto greedy = color_greedy(g);
    CHECK(is_proper(g, greedy));
    CHECK(greedy.colour_count() + 1 <= 2 * g.max_degree());
  }
  for (std::uint64_t n : {8u, 9u, 16u, 17u, 33u}) {
    const auto g = AdjacencyGraph(n, generate(CompleteGraph{n}, AsGiven{}, 0).edges);
    const auto viz = color_vizing(g);
    CHECK(is_proper(g, viz));
    CHECK(max_colour(viz) <= g.max_degree());
  }
}
