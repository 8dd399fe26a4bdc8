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

#include "wscolor/random_arrival.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "wscolor/offline_colorer.hpp"

namespace wscolor {

namespace {

constexpr std::uint64_t kScalarWords = 6;
constexpr std::uint64_t kWordsPerBufferedEdge = 2;

}  // namespace

void ChunkConfig::validate() const {
  if (n == 0) throw ValidationError("chunk config requires n >= 1");
  if (alpha == 0) throw ValidationError("chunk config requires alpha >= 1");
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (alpha > kMax / alpha || alpha * alpha > kMax / n) {
    throw ValidationError("chunk capacity alpha^2 * n overflows");
  }
}

std::uint64_t default_alpha(std::uint64_t n) {
  std::uint64_t alpha = 0;
  while (alpha < 64 && (std::uint64_t{1} << alpha) < n) ++alpha;
  return std::max<std::uint64_t>(alpha, 1);
}

RandomArrivalColorer::RandomArrivalColorer(ChunkConfig config,
                                           OfflineAlgorithm algorithm)
    : config_(config), algorithm_(algorithm), capacity_(0) {
  config_.validate();
  capacity_ = config_.capacity();
  meter_.charge(kScalarWords);
}

std::vector<Announcement> RandomArrivalColorer::feed(Edge e) {
  if (finished_) throw ContractViolation("feed after finish");
  if (e.u >= config_.n || e.v >= config_.n) {
    throw ValidationError("vertex id out of range for n=" +
                          std::to_string(config_.n));
  }
  buffer_.push_back(canonicalize(e));
  meter_.charge(kWordsPerBufferedEdge);
  peak_buffered_ = std::max(peak_buffered_, buffer_.size());
  if (buffer_.size() < capacity_) return {};
  return flush();
}

std::vector<Announcement> RandomArrivalColorer::finish() {
  if (finished_) throw ContractViolation("finish called twice");
  finished_ = true;
  if (buffer_.empty()) return {};
  return flush();
}

std::vector<Announcement> RandomArrivalColorer::flush() {
  // Relabel the chunk onto compact ids so the workspace scales with the chunk.
  std::unordered_map<VertexId, VertexId> local_id;
  std::vector<Edge> local_edges;
  local_edges.reserve(buffer_.size());
  auto relabel = [&local_id](VertexId v) {
    auto [it, inserted] =
        local_id.try_emplace(v, static_cast<VertexId>(local_id.size()));
    return it->second;
  };
  for (const Edge& e : buffer_) local_edges.push_back({relabel(e.u), relabel(e.v)});

  // Repeated occurrences of an edge are set aside and coloured afterwards.
  std::vector<Edge> simple_edges;
  std::vector<std::size_t> simple_pos, repeat_pos;
  std::unordered_set<Edge, EdgeHash> seen;
  for (std::size_t k = 0; k < local_edges.size(); ++k) {
    if (seen.insert(local_edges[k]).second) {
      simple_edges.push_back(local_edges[k]);
      simple_pos.push_back(k);
    } else {
      repeat_pos.push_back(k);
    }
  }

  const std::size_t vertices = local_id.size();
  const AdjacencyGraph chunk(vertices, simple_edges);
  const std::uint64_t workspace =
      vertices * (chunk.max_degree() + 2) + 4 * local_edges.size();
  meter_.charge(workspace);

  const LocalColouring colouring = algorithm_ == OfflineAlgorithm::kVizing
                                       ? color_vizing(chunk)
                                       : color_greedy(chunk);

  std::vector<std::uint32_t> colour(local_edges.size());
  for (std::size_t k = 0; k < simple_pos.size(); ++k) {
    colour[simple_pos[k]] = colouring.colour[k];
  }
  if (!repeat_pos.empty()) {
    std::vector<std::unordered_set<std::uint32_t>> used(vertices);
    for (std::size_t k : simple_pos) {
      used[local_edges[k].u].insert(colour[k]);
      used[local_edges[k].v].insert(colour[k]);
    }
    for (std::size_t k : repeat_pos) {
      const Edge& e = local_edges[k];
      std::uint32_t c = 0;
      while (used[e.u].count(c) || used[e.v].count(c)) ++c;
      used[e.u].insert(c);
      used[e.v].insert(c);
      colour[k] = c;
    }
  }

  std::vector<Announcement> out;
  out.reserve(buffer_.size());
  std::uint64_t max_degree = 0;
  {
    std::vector<std::uint64_t> degree(vertices, 0);
    for (const Edge& e : local_edges) {
      max_degree = std::max({max_degree, ++degree[e.u], ++degree[e.v]});
    }
  }
  std::unordered_set<std::uint32_t> distinct(colour.begin(), colour.end());
  for (std::size_t k = 0; k < buffer_.size(); ++k) {
    out.push_back({buffer_[k], ChunkColour{chunk_index_, colour[k]}});
  }
  logs_.push_back({chunk_index_, buffer_.size(), max_degree, distinct.size()});

  meter_.release(workspace);
  meter_.release(kWordsPerBufferedEdge * buffer_.size());
  buffer_.clear();
  ++chunk_index_;
  return out;
}

}  // namespace wscolor
