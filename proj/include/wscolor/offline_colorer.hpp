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

#ifndef WSCOLOR_OFFLINE_COLORER_HPP_
#define WSCOLOR_OFFLINE_COLORER_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "wscolor/types.hpp"

namespace wscolor {

// Static undirected graph over edge slots 0..m-1 (slot = position in the input
// edge list).
class AdjacencyGraph {
 public:
  struct Incidence {
    VertexId neighbour;
    std::uint32_t slot;
  };

  // Throws ValidationError on self-loops or endpoints >= n.
  AdjacencyGraph(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t max_degree() const { return max_degree_; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
  const std::vector<Incidence>& incident(VertexId v) const {
    return adjacency_[v];
  }
  const Edge& edge(std::uint32_t slot) const { return edges_[slot]; }
  const std::vector<Edge>& edges() const { return edges_; }
  // True when no two slots join the same pair of vertices.
  bool is_simple() const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::size_t max_degree_ = 0;
};

// Dense local colours, one per edge slot.
struct LocalColouring {
  std::vector<std::uint32_t> colour;

  // Number of distinct colour values.
  std::size_t colour_count() const;
};

// Misra-Gries constructive Vizing: proper, at most max_degree + 1 colours.
// Edges are inserted in slot order, so the result is deterministic.
// Throws ValidationError on a multigraph.
LocalColouring color_vizing(const AdjacencyGraph& g);

// Each edge, in slot order, takes the smallest colour free at both endpoints.
LocalColouring color_greedy(const AdjacencyGraph& g);

// Exact chromatic index by backtracking. Refuses graphs with more than
// kBruteforceEdgeLimit edges.
inline constexpr std::size_t kBruteforceEdgeLimit = 12;
std::size_t chromatic_index_bruteforce(const AdjacencyGraph& g);

// True when no two incident slots share a colour.
bool is_proper(const AdjacencyGraph& g, const LocalColouring& colouring);

}  // namespace wscolor

#endif  // WSCOLOR_OFFLINE_COLORER_HPP_
