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

#ifndef WSCOLOR_GENERATORS_HPP_
#define WSCOLOR_GENERATORS_HPP_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "wscolor/edge_io.hpp"
#include "wscolor/types.hpp"

namespace wscolor {

struct CompleteGraph {
  std::uint64_t n;
};
struct CompleteBipartite {
  std::uint64_t a;
  std::uint64_t b;
};
// Centre 0 with leaves 1..t.
struct Star {
  std::uint64_t t;
};
struct GnpRandom {
  std::uint64_t n;
  double p;
};
struct RandomRegular {
  std::uint64_t n;
  std::uint64_t d;
};
struct FromFile {
  std::string path;
};

using GraphFamily = std::variant<CompleteGraph, CompleteBipartite, Star,
                                 GnpRandom, RandomRegular, FromFile>;

// Parses `complete:<n>`, `bipartite:<a>:<b>`, `star:<t>`, `gnp:<n>:<p>`,
// `regular:<n>:<d>`, `file:<path>`.
GraphFamily parse_family(const std::string& text);
std::string describe(const GraphFamily& family);

enum class SortPolicy {
  kByEndpoint,   // lexicographic over canonical edges
  kStarBatched,  // all edges of the highest-degree vertex, then the next, ...
};

struct UniformRandomPermutation {
  std::uint64_t seed;
};
struct AsGiven {};
struct AdversarialSorted {
  SortPolicy policy;
};

using ArrivalOrder = std::variant<UniformRandomPermutation, AsGiven, AdversarialSorted>;

// Parses `random`, `given`, `sorted`, `star-batched`. `random` takes `seed`.
ArrivalOrder parse_order(const std::string& text, std::uint64_t seed);
std::string describe(const ArrivalOrder& order);

// Edges of `family` in canonical construction order. Randomised families draw
// from SplitMix64(seed). Throws ValidationError on infeasible parameters or
// duplicate edges in a file.
EdgeStream build_graph(const GraphFamily& family, std::uint64_t seed);

// Reorders edges in place according to `order`.
void apply_order(std::vector<Edge>& edges, const ArrivalOrder& order);

// build_graph followed by apply_order; header.seed records `seed`.
EdgeStream generate(const GraphFamily& family, const ArrivalOrder& order,
                    std::uint64_t seed);

}  // namespace wscolor

#endif  // WSCOLOR_GENERATORS_HPP_
