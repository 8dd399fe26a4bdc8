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

#include "wscolor/worst_case.hpp"

#include <limits>
#include <optional>

namespace wscolor {

namespace {

class StarGadgetAdversary {
 public:
  StarGadgetAdversary(std::uint64_t max_degree, std::uint32_t s,
                      AdversarialArrivalColorer& colourer,
                      const WorstCaseOptions& options)
      : max_degree_(max_degree),
        s_(s),
        colourer_(colourer),
        access_(colourer.randomness()),
        signatures_(access_.signatures()),
        window_(std::max<std::size_t>(options.candidate_window, 1)),
        degree_(colourer.n(), 0) {
    result_.stream.header.n = colourer.n();
    result_.transcript.header.n = colourer.n();
  }

  WorstCaseResult run() {
    const std::uint64_t levels = max_degree_ / s_;
    result_.star_levels = levels;
    result_.targeted_colours = std::uint64_t{s_} * levels * levels;
    for (std::uint32_t i = 0; i < s_; ++i) {
      for (std::uint64_t j = 0; j < levels; ++j) {
        for (std::uint64_t k = 0; k < levels; ++k) make_colour(i, j, k);
      }
    }
    result_.vertices_used = next_fresh_ - pool_.size();
    result_.stream.header.m = result_.stream.edges.size();
    result_.transcript.header.m = result_.stream.edges.size();
    return std::move(result_);
  }

 private:
  // Realises colour (i, j, k): a left centre with B_i counter j joined to a
  // right centre with B_i counter k, the join routed to B_i.
  void make_colour(std::uint32_t i, std::uint64_t j, std::uint64_t k) {
    VertexId left = build_star(i, false, j, std::nullopt);
    VertexId right = build_star(i, true, k, left);
    for (;;) {
      if (degree_[left] + 1 > max_degree_) {
        left = build_star(i, false, j, right);
        continue;
      }
      if (degree_[right] + 1 > max_degree_) {
        right = build_star(i, true, k, left);
        continue;
      }
      if (emit(left, right) == i) return;
      ++result_.wasted_edges;
      // Retry with a fresh copy of the cheaper star.
      if (j <= k) {
        left = build_star(i, false, j, right);
      } else {
        right = build_star(i, true, k, left);
      }
    }
  }

  // Fresh centre with bit i == side whose B_i counter is driven to `target`.
  // When `partner` is given the centre is picked to share as many bits with
  // it as possible, so the later join is likely to land in B_i.
  VertexId build_star(std::uint32_t i, bool side, std::uint64_t target,
                      std::optional<VertexId> partner) {
    for (;;) {
      const VertexId centre = take_vertex([&](VertexId v) -> std::optional<std::size_t> {
        if (signatures_.bit(v, i) != side) return std::nullopt;
        return partner ? signatures_.differing_count(v, *partner) : 0;
      });
      bool abandoned = false;
      while (access_.counter(centre, i) < target) {
        // Keep one unit of degree for the join.
        if (degree_[centre] + 2 > max_degree_) {
          abandoned = true;
          break;
        }
        const VertexId leaf = take_vertex([&](VertexId v) -> std::optional<std::size_t> {
          if (signatures_.bit(v, i) == side) return std::nullopt;
          return signatures_.differing_count(v, centre);
        });
        if (emit(centre, leaf) != i) ++result_.wasted_edges;
      }
      if (!abandoned) return centre;
    }
  }

  std::optional<std::uint32_t> emit(VertexId a, VertexId b) {
    const Announcement announced = colourer_.color_edge({a, b});
    result_.stream.edges.push_back({a, b});
    result_.transcript.records.push_back(announced);
    ++degree_[a];
    ++degree_[b];
    return access_.last_choice();
  }

  // Lowest-scoring acceptable vertex among the first `window_` unused ones.
  template <typename Score>
  VertexId take_vertex(Score&& score) {
    for (;;) {
      while (pool_.size() < window_ && next_fresh_ < colourer_.n()) {
        pool_.push_back(static_cast<VertexId>(next_fresh_++));
      }
      std::size_t best = pool_.size();
      std::size_t best_score = std::numeric_limits<std::size_t>::max();
      for (std::size_t k = 0; k < pool_.size(); ++k) {
        const auto value = score(pool_[k]);
        if (value && *value < best_score) {
          best = k;
          best_score = *value;
          if (best_score <= 1) break;
        }
      }
      if (best < pool_.size()) {
        const VertexId chosen = pool_[best];
        pool_.erase(pool_.begin() + static_cast<std::ptrdiff_t>(best));
        return chosen;
      }
      if (next_fresh_ >= colourer_.n()) {
        throw ConfigurationError("worst-case adversary ran out of fresh vertices (n=" +
                                 std::to_string(colourer_.n()) + ")");
      }
      // No acceptable candidate in the window: widen it.
      pool_.push_back(static_cast<VertexId>(next_fresh_++));
    }
  }

  std::uint64_t max_degree_;
  std::uint32_t s_;
  AdversarialArrivalColorer& colourer_;
  RandomnessAccess access_;
  const BitSignatureTable& signatures_;
  std::size_t window_;
  std::vector<std::uint64_t> degree_;
  std::vector<VertexId> pool_;
  std::uint64_t next_fresh_ = 0;
  WorstCaseResult result_;
};

}  // namespace

WorstCaseResult worst_case_stream(std::uint64_t max_degree, std::uint32_t s,
                                  AdversarialArrivalColorer& colourer,
                                  const WorstCaseOptions& options) {
  if (s == 0 || colourer.s() != s) {
    throw ValidationError("worst-case s must match the colourer's s");
  }
  if (max_degree < s) throw ValidationError("worst-case requires max_degree >= s");
  if (colourer.edges_coloured() != 0) {
    throw ValidationError("worst-case adversary needs a fresh colourer");
  }
  return StarGadgetAdversary(max_degree, s, colourer, options).run();
}

}  // namespace wscolor
