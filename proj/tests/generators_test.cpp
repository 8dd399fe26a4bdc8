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

#include <cmath>
#include <set>

#include "doctest.h"
#include "wscolor/generators.hpp"

using namespace wscolor;

namespace {

std::vector<std::uint64_t> degree_sequence(const EdgeStream& s) {
  std::vector<std::uint64_t> d(s.header.n, 0);
  for (const Edge& e : s.edges) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

bool simple(const std::vector<Edge>& edges) {
  std::set<Edge> seen;
  for (const Edge& e : edges) {
    if (e.u == e.v || !seen.insert(canonicalize(e)).second) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("family edge counts") {
  CHECK(generate(CompleteGraph{4}, AsGiven{}, 0).edges.size() == 6);
  CHECK(generate(CompleteBipartite{3, 5}, AsGiven{}, 0).edges.size() == 15);
  CHECK(generate(GnpRandom{100, 0.0}, AsGiven{}, 0).edges.empty());
  CHECK(generate(GnpRandom{20, 1.0}, AsGiven{}, 0).edges.size() == 190);

  const EdgeStream star = generate(Star{5}, AsGiven{}, 0);
  REQUIRE(star.edges.size() == 5);
  for (const Edge& e : star.edges) CHECK(e.u == 0);
  CHECK(star.header.n == 6);
  CHECK(star.header.m == 5u);
}

TEST_CASE("random regular graphs are simple and d-regular") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const EdgeStream g = generate(RandomRegular{1000, 3}, AsGiven{}, seed);
    CHECK(g.edges.size() == 1500);
    CHECK(simple(g.edges));
    for (std::uint64_t d : degree_sequence(g)) CHECK(d == 3);
  }
  const EdgeStream dense = generate(RandomRegular{30, 12}, AsGiven{}, 1);
  CHECK(simple(dense.edges));
  for (std::uint64_t d : degree_sequence(dense)) CHECK(d == 12);
}

TEST_CASE("infeasible family parameters are rejected") {
  CHECK_THROWS_AS(generate(GnpRandom{10, 1.5}, AsGiven{}, 0), ValidationError);
  CHECK_THROWS_AS(generate(RandomRegular{5, 3}, AsGiven{}, 0), ValidationError);
  CHECK_THROWS_AS(generate(RandomRegular{5, 5}, AsGiven{}, 0), ValidationError);
  CHECK_THROWS_AS(generate(CompleteGraph{0}, AsGiven{}, 0), ValidationError);
  CHECK_THROWS_AS(parse_family("gnp:10"), ValidationError);
  CHECK_THROWS_AS(parse_family("wheel:5"), ValidationError);
  CHECK_THROWS_AS(parse_order("backwards", 0), ValidationError);
}

TEST_CASE("family and order text forms") {
  CHECK(describe(parse_family("complete:50")) == "complete:50");
  CHECK(describe(parse_family("bipartite:30:30")) == "bipartite:30:30");
  CHECK(describe(parse_family("gnp:1000:0.01")) == "gnp:1000:0.01");
  CHECK(describe(parse_family("regular:1000:3")) == "regular:1000:3");
  CHECK(describe(parse_family("file:/tmp/x y")) == "file:/tmp/x y");
  for (const char* order : {"random", "given", "sorted", "star-batched"}) {
    CHECK(describe(parse_order(order, 1)) == order);
  }
}

TEST_CASE("orders permute the same edge multiset") {
  const EdgeStream base = generate(GnpRandom{60, 0.2}, AsGiven{}, 3);
  std::multiset<Edge> expected;
  for (const Edge& e : base.edges) expected.insert(canonicalize(e));
  for (const ArrivalOrder& order :
       {ArrivalOrder{UniformRandomPermutation{7}}, ArrivalOrder{AsGiven{}},
        ArrivalOrder{AdversarialSorted{SortPolicy::kByEndpoint}},
        ArrivalOrder{AdversarialSorted{SortPolicy::kStarBatched}}}) {
    const EdgeStream s = generate(GnpRandom{60, 0.2}, order, 3);
    std::multiset<Edge> got;
    for (const Edge& e : s.edges) got.insert(canonicalize(e));
    CHECK(got == expected);
  }
}

TEST_CASE("star-batched order emits the busiest vertex's edges first") {
  std::vector<Edge> edges = {{0, 1}, {2, 3}, {2, 4}, {2, 5}, {1, 4}};
  apply_order(edges, AdversarialSorted{SortPolicy::kStarBatched});
  // Vertex 2 has degree 3, so its three edges lead.
  for (std::size_t k = 0; k < 3; ++k) CHECK((edges[k].u == 2 || edges[k].v == 2));
  CHECK(edges.size() == 5);
}

TEST_CASE("generation is deterministic given the seed") {
  const auto a = generate(GnpRandom{200, 0.05}, UniformRandomPermutation{11}, 11);
  const auto b = generate(GnpRandom{200, 0.05}, UniformRandomPermutation{11}, 11);
  const auto c = generate(GnpRandom{200, 0.05}, UniformRandomPermutation{12}, 12);
  CHECK(a.edges == b.edges);
  CHECK(a.edges != c.edges);
}

// Each of m edges should occupy each of m positions with probability 1/m.
TEST_CASE("uniform permutation marginals within 5 sigma") {
  for (std::size_t m : {2u, 3u, 6u}) {
    constexpr int kTrials = 20000;
    std::vector<Edge> base;
    for (VertexId k = 0; k < m; ++k) base.push_back({k, static_cast<VertexId>(k + 100)});
    std::vector<std::vector<int>> hits(m, std::vector<int>(m, 0));
    for (int t = 0; t < kTrials; ++t) {
      auto edges = base;
      apply_order(edges, UniformRandomPermutation{static_cast<std::uint64_t>(t)});
      for (std::size_t pos = 0; pos < m; ++pos) ++hits[edges[pos].u][pos];
    }
    const double p = 1.0 / static_cast<double>(m);
    const double sigma = std::sqrt(kTrials * p * (1 - p));
    for (std::size_t e = 0; e < m; ++e) {
      for (std::size_t pos = 0; pos < m; ++pos) {
        CHECK(std::abs(hits[e][pos] - kTrials * p) <= 5 * sigma);
      }
    }
  }
}

TEST_CASE("files with duplicate edges are rejected") {
  const std::string path = "generators_test_dup.txt";
  write_edge_list_file(path, EdgeStream{{3, std::nullopt, std::nullopt}, {{0, 1}, {1, 0}}});
  CHECK_THROWS_AS(build_graph(FromFile{path}, 0), ValidationError);
  write_edge_list_file(path, EdgeStream{{3, std::nullopt, std::nullopt}, {{0, 1}, {1, 2}}});
  CHECK(build_graph(FromFile{path}, 0).edges.size() == 2);
  std::remove(path.c_str());
}
