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

#include "wscolor/offline_colorer.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace wscolor {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// Working state for Misra-Gries: per (vertex, colour) the slot holding that
// colour, and per slot its colour.
class VizingState {
 public:
  explicit VizingState(const AdjacencyGraph& g)
      : g_(g),
        palette_(g.max_degree() + 1),
        at_(g.vertex_count() * palette_, kNone),
        colour_(g.edge_count(), kNone),
        fan_mark_(g.vertex_count(), 0) {}

  void colour_edge(std::uint32_t slot) {
    const Edge& e = g_.edge(slot);
    // Fan centre: the first endpoint as stored.
    const VertexId x = e.u;
    build_fan(x, slot);

    const std::uint32_t c = free_colour(x);
    const std::uint32_t d = free_colour(fan_vertices_.back());
    if (c != d) invert_path(x, c, d);

    // Longest fan prefix that survived the inversion, stop at first vertex
    // with d free.
    std::size_t w = fan_vertices_.size();
    for (std::size_t j = 0; j < fan_vertices_.size(); ++j) {
      if (j > 0 && !is_free(fan_vertices_[j - 1], colour_[fan_slots_[j]])) break;
      if (is_free(fan_vertices_[j], d)) {
        w = j;
        break;
      }
    }
    if (w == fan_vertices_.size()) {
      throw ContractViolation("Misra-Gries rotation target not found");
    }

    for (std::size_t l = 0; l < w; ++l) {
      const std::uint32_t shifted = colour_[fan_slots_[l + 1]];
      uncolour(fan_slots_[l + 1]);
      assign(fan_slots_[l], shifted);
    }
    assign(fan_slots_[w], d);
  }

  LocalColouring result() && { return LocalColouring{std::move(colour_)}; }

 private:
  VertexId other(std::uint32_t slot, VertexId v) const {
    const Edge& e = g_.edge(slot);
    return e.u == v ? e.v : e.u;
  }

  bool is_free(VertexId v, std::uint32_t colour) const {
    return at_[v * palette_ + colour] == kNone;
  }

  std::uint32_t free_colour(VertexId v) const {
    for (std::uint32_t c = 0; c < palette_; ++c) {
      if (is_free(v, c)) return c;
    }
    throw ContractViolation("no free colour; degree exceeds palette");
  }

  void assign(std::uint32_t slot, std::uint32_t colour) {
    const Edge& e = g_.edge(slot);
    colour_[slot] = colour;
    at_[e.u * palette_ + colour] = slot;
    at_[e.v * palette_ + colour] = slot;
  }

  void uncolour(std::uint32_t slot) {
    const Edge& e = g_.edge(slot);
    const std::uint32_t colour = colour_[slot];
    at_[e.u * palette_ + colour] = kNone;
    at_[e.v * palette_ + colour] = kNone;
    colour_[slot] = kNone;
  }

  // Maximal fan of x starting at the uncoloured slot: each next fan edge is
  // coloured with a colour free on the previous fan vertex.
  void build_fan(VertexId x, std::uint32_t slot) {
    ++stamp_;
    fan_slots_.assign(1, slot);
    fan_vertices_.assign(1, other(slot, x));
    fan_mark_[fan_vertices_.back()] = stamp_;
    for (;;) {
      const VertexId last = fan_vertices_.back();
      bool extended = false;
      for (std::uint32_t c = 0; c < palette_ && !extended; ++c) {
        if (!is_free(last, c)) continue;
        const std::uint32_t candidate = at_[x * palette_ + c];
        if (candidate == kNone) continue;
        const VertexId y = other(candidate, x);
        if (fan_mark_[y] == stamp_) continue;
        fan_mark_[y] = stamp_;
        fan_slots_.push_back(candidate);
        fan_vertices_.push_back(y);
        extended = true;
      }
      if (!extended) return;
    }
  }

  // Swap c and d along the maximal path from x whose edges alternate d, c.
  void invert_path(VertexId x, std::uint32_t c, std::uint32_t d) {
    path_.clear();
    VertexId cur = x;
    std::uint32_t want = d;
    for (;;) {
      const std::uint32_t slot = at_[cur * palette_ + want];
      if (slot == kNone) break;
      path_.push_back(slot);
      cur = other(slot, cur);
      want = want == d ? c : d;
    }
    for (std::uint32_t slot : path_) {
      const std::uint32_t old = colour_[slot];
      uncolour(slot);
      colour_[slot] = old == c ? d : c;
    }
    for (std::uint32_t slot : path_) assign(slot, colour_[slot]);
  }

  const AdjacencyGraph& g_;
  std::uint32_t palette_;
  std::vector<std::uint32_t> at_;
  std::vector<std::uint32_t> colour_;
  std::vector<std::uint32_t> fan_mark_;
  std::uint32_t stamp_ = 0;
  std::vector<std::uint32_t> fan_slots_;
  std::vector<VertexId> fan_vertices_;
  std::vector<std::uint32_t> path_;
};

bool backtrack(const AdjacencyGraph& g, std::size_t k, std::size_t slot,
               std::vector<std::uint32_t>& colour) {
  if (slot == g.edge_count()) return true;
  const Edge& e = g.edge(static_cast<std::uint32_t>(slot));
  std::uint32_t highest = 0;
  for (std::size_t s = 0; s < slot; ++s) highest = std::max(highest, colour[s] + 1);
  // Colours are interchangeable: never open more than one new colour.
  const std::size_t limit = std::min<std::size_t>(k, highest + 1);
  for (std::uint32_t c = 0; c < limit; ++c) {
    bool clash = false;
    for (VertexId end : {e.u, e.v}) {
      for (const auto& inc : g.incident(end)) {
        if (inc.slot < slot && colour[inc.slot] == c) {
          clash = true;
          break;
        }
      }
      if (clash) break;
    }
    if (clash) continue;
    colour[slot] = c;
    if (backtrack(g, k, slot + 1, colour)) return true;
  }
  return false;
}

}  // namespace

AdjacencyGraph::AdjacencyGraph(std::size_t n, std::span<const Edge> edges)
    : edges_(edges.begin(), edges.end()), adjacency_(n) {
  for (std::uint32_t slot = 0; slot < edges_.size(); ++slot) {
    const Edge& e = edges_[slot];
    if (e.u >= n || e.v >= n) {
      throw ValidationError("edge endpoint out of range for n=" +
                            std::to_string(n));
    }
    if (e.u == e.v) {
      throw ValidationError("self-loop at vertex " + std::to_string(e.u));
    }
    adjacency_[e.u].push_back({e.v, slot});
    adjacency_[e.v].push_back({e.u, slot});
  }
  for (const auto& list : adjacency_) {
    max_degree_ = std::max(max_degree_, list.size());
  }
}

bool AdjacencyGraph::is_simple() const {
  std::unordered_set<Edge, EdgeHash> seen;
  seen.reserve(edges_.size());
  for (const Edge& e : edges_) {
    if (!seen.insert(canonicalize(e)).second) return false;
  }
  return true;
}

std::size_t LocalColouring::colour_count() const {
  std::vector<std::uint32_t> sorted(colour);
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(
      std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

LocalColouring color_vizing(const AdjacencyGraph& g) {
  if (!g.is_simple()) {
    throw ValidationError("Vizing colouring requires a simple graph");
  }
  VizingState state(g);
  for (std::uint32_t slot = 0; slot < g.edge_count(); ++slot) {
    state.colour_edge(slot);
  }
  return std::move(state).result();
}

LocalColouring color_greedy(const AdjacencyGraph& g) {
  LocalColouring out{std::vector<std::uint32_t>(g.edge_count(), kNone)};
  std::vector<std::vector<bool>> used(g.vertex_count());
  for (std::uint32_t slot = 0; slot < g.edge_count(); ++slot) {
    const Edge& e = g.edge(slot);
    auto& a = used[e.u];
    auto& b = used[e.v];
    std::uint32_t c = 0;
    while ((c < a.size() && a[c]) || (c < b.size() && b[c])) ++c;
    if (a.size() <= c) a.resize(c + 1, false);
    if (b.size() <= c) b.resize(c + 1, false);
    a[c] = b[c] = true;
    out.colour[slot] = c;
  }
  return out;
}

std::size_t chromatic_index_bruteforce(const AdjacencyGraph& g) {
  if (g.edge_count() > kBruteforceEdgeLimit) {
    throw ValidationError("chromatic_index_bruteforce refuses graphs with more than " +
                          std::to_string(kBruteforceEdgeLimit) + " edges");
  }
  if (g.edge_count() == 0) return 0;
  std::vector<std::uint32_t> colour(g.edge_count(), 0);
  for (std::size_t k = g.max_degree();; ++k) {
    if (backtrack(g, k, 0, colour)) return k;
  }
}

bool is_proper(const AdjacencyGraph& g, const LocalColouring& colouring) {
  if (colouring.colour.size() != g.edge_count()) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<std::uint32_t> seen;
    for (const auto& inc : g.incident(v)) seen.push_back(colouring.colour[inc.slot]);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

}  // namespace wscolor
