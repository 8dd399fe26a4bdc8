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

#ifndef WSCOLOR_VERIFIER_HPP_
#define WSCOLOR_VERIFIER_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "wscolor/adversarial_arrival.hpp"
#include "wscolor/edge_io.hpp"
#include "wscolor/types.hpp"

namespace wscolor {

// Two records sharing a vertex and a colour. Indices refer to transcript
// record positions.
struct Conflict {
  std::size_t first;
  std::size_t second;
  Edge first_edge;
  Edge second_edge;
  VertexId shared;
  ColourId colour;
};

// Per chunk index (chunk palettes) or bit index (triple palettes).
struct PaletteStats {
  std::uint64_t edges = 0;
  std::uint64_t max_degree = 0;
  std::uint64_t colours = 0;
  // Triple palettes only: 1 + largest left / right counter seen.
  std::uint64_t left_levels = 0;
  std::uint64_t right_levels = 0;
};

struct VerificationReport {
  bool proper = true;
  std::vector<Conflict> conflicts;
  std::uint64_t edge_count = 0;
  std::uint64_t distinct_colours = 0;
  std::uint64_t chunk_colours = 0;
  std::uint64_t triple_colours = 0;
  std::uint64_t overflow_colours = 0;
  std::uint64_t max_degree = 0;
  std::uint64_t duplicate_edges = 0;
  std::map<std::uint64_t, PaletteStats> chunk_stats;
  std::map<std::uint32_t, PaletteStats> triple_stats;
};

// Exhaustive properness check over per-vertex colour classes; every pair of
// incident records with equal colours is reported.
VerificationReport verify(const Transcript& transcript);

// True when the transcript's edges equal `graph`'s edges as canonical
// multisets.
bool covers_exactly(const Transcript& transcript, const EdgeStream& graph);

// Every Triple record of index i joins a bit-0 endpoint to a bit-1 endpoint,
// and the announced orientation puts the bit-0 endpoint first.
bool triples_split_by_bit(const Transcript& transcript,
                          const BitSignatureTable& signatures);

// Raised when a chunk-structure analysis is handed a transcript from a
// different colourer.
class WrongAlgorithmError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

struct ConcentrationRow {
  std::uint64_t chunk;
  VertexId vertex;
  std::uint64_t chunk_degree;  // d_i(u)
  double expected;             // d(u) * |chunk| / m
};

struct ChunkSummary {
  std::uint64_t chunk;
  std::uint64_t edges;
  std::uint64_t max_chunk_degree;  // max_u d_i(u)
  double expected_max;             // Delta * |chunk| / m
  double ratio;                    // max_chunk_degree / expected_max
};

struct ConcentrationTable {
  std::vector<ConcentrationRow> rows;
  std::vector<ChunkSummary> chunks;
  double max_vertex_ratio = 0;  // max over u, i of d_i(u) / expected
  double mean_chunk_ratio = 0;  // mean over chunks of ChunkSummary::ratio
};

// Per-chunk degree table against the uniform-split expectation
// d(u) * |chunk_i| / m (which is d(u) / N when every chunk is full). Throws
// WrongAlgorithmError unless every record carries a Chunk colour.
ConcentrationTable chunk_concentration(const Transcript& transcript,
                                       const EdgeStream& graph);

struct ChunkBudget {};
struct TripleBudget {
  std::uint32_t s;
};
using BudgetParams = std::variant<ChunkBudget, TripleBudget>;

struct BudgetResult {
  bool pass = false;
  std::uint64_t colours = 0;
  // Chunk: sum over chunks of (max degree + 1).
  // Triple: s * (max_i max degree of B_i)^2 + overflow colours.
  std::uint64_t bound = 0;
  // Triple only: sum over i of left_levels * right_levels.
  std::uint64_t level_bound = 0;
  double ratio = 0;         // colours / Delta, or colours / (Delta^2 / s)
  double triple_ratio = 0;  // Triple colours / (Delta^2 / s)
};

// Checks the exact per-run colour bounds. `max_degree` is the input graph's
// Delta. Throws ValidationError when the report holds colours of the other
// algorithm or a Triple index >= s.
BudgetResult colour_budget(const VerificationReport& report,
                           const BudgetParams& params, std::uint64_t max_degree);

std::uint64_t max_degree_of(const EdgeStream& graph);

// Human-readable summary, conflicts listed up to `conflict_limit`.
std::string format_report(const VerificationReport& report,
                          std::size_t conflict_limit = 20);

}  // namespace wscolor

#endif  // WSCOLOR_VERIFIER_HPP_
