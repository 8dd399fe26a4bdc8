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

#include "wscolor/verifier.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace wscolor {

namespace {

struct Incidence {
  VertexId vertex;
  std::size_t record;
};

// Max multiplicity of each vertex within each palette key.
template <typename Key>
std::map<Key, std::uint64_t> max_degree_per_key(std::vector<std::pair<Key, VertexId>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  std::map<Key, std::uint64_t> out;
  for (std::size_t k = 0; k < pairs.size();) {
    std::size_t end = k;
    while (end < pairs.size() && pairs[end] == pairs[k]) ++end;
    auto& slot = out[pairs[k].first];
    slot = std::max<std::uint64_t>(slot, end - k);
    k = end;
  }
  return out;
}

std::vector<std::uint64_t> degrees(const std::vector<Edge>& edges, std::uint64_t n) {
  std::vector<std::uint64_t> d(n, 0);
  for (const Edge& e : edges) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

}  // namespace

VerificationReport verify(const Transcript& transcript) {
  VerificationReport report;
  const auto& records = transcript.records;
  report.edge_count = records.size();

  std::vector<Incidence> incidences;
  incidences.reserve(2 * records.size());
  for (std::size_t k = 0; k < records.size(); ++k) {
    incidences.push_back({records[k].edge.u, k});
    incidences.push_back({records[k].edge.v, k});
  }
  std::sort(incidences.begin(), incidences.end(),
            [&records](const Incidence& a, const Incidence& b) {
              if (a.vertex != b.vertex) return a.vertex < b.vertex;
              if (records[a.record].colour != records[b.record].colour) {
                return records[a.record].colour < records[b.record].colour;
              }
              return a.record < b.record;
            });

  std::size_t run_start = 0;
  for (std::size_t k = 0; k <= incidences.size(); ++k) {
    const bool boundary = k == incidences.size() ||
                          incidences[k].vertex != incidences[run_start].vertex;
    if (boundary) {
      report.max_degree = std::max<std::uint64_t>(report.max_degree, k - run_start);
      run_start = k;
    }
  }

  for (std::size_t k = 0; k < incidences.size();) {
    std::size_t end = k + 1;
    const ColourId& colour = records[incidences[k].record].colour;
    while (end < incidences.size() && incidences[end].vertex == incidences[k].vertex &&
           records[incidences[end].record].colour == colour) {
      ++end;
    }
    for (std::size_t a = k; a < end; ++a) {
      for (std::size_t b = a + 1; b < end; ++b) {
        const std::size_t first = incidences[a].record;
        const std::size_t second = incidences[b].record;
        report.conflicts.push_back({first, second, records[first].edge,
                                    records[second].edge, incidences[k].vertex, colour});
      }
    }
    k = end;
  }
  report.proper = report.conflicts.empty();

  std::vector<ColourId> colours;
  colours.reserve(records.size());
  for (const auto& record : records) colours.push_back(record.colour);
  std::sort(colours.begin(), colours.end());
  colours.erase(std::unique(colours.begin(), colours.end()), colours.end());
  report.distinct_colours = colours.size();

  std::vector<std::pair<std::uint64_t, VertexId>> chunk_pairs;
  std::vector<std::pair<std::uint32_t, VertexId>> triple_pairs;
  for (const auto& record : records) {
    if (const auto* c = std::get_if<ChunkColour>(&record.colour)) {
      ++report.chunk_stats[c->chunk].edges;
      chunk_pairs.emplace_back(c->chunk, record.edge.u);
      chunk_pairs.emplace_back(c->chunk, record.edge.v);
    } else if (const auto* t = std::get_if<TripleColour>(&record.colour)) {
      auto& stats = report.triple_stats[t->index];
      ++stats.edges;
      stats.left_levels = std::max(stats.left_levels, t->left + 1);
      stats.right_levels = std::max(stats.right_levels, t->right + 1);
      triple_pairs.emplace_back(t->index, record.edge.u);
      triple_pairs.emplace_back(t->index, record.edge.v);
    }
  }
  for (const auto& [key, degree] : max_degree_per_key(std::move(chunk_pairs))) {
    report.chunk_stats[key].max_degree = degree;
  }
  for (const auto& [key, degree] : max_degree_per_key(std::move(triple_pairs))) {
    report.triple_stats[key].max_degree = degree;
  }
  for (const ColourId& colour : colours) {
    if (const auto* c = std::get_if<ChunkColour>(&colour)) {
      ++report.chunk_colours;
      ++report.chunk_stats[c->chunk].colours;
    } else if (const auto* t = std::get_if<TripleColour>(&colour)) {
      ++report.triple_colours;
      ++report.triple_stats[t->index].colours;
    } else {
      ++report.overflow_colours;
    }
  }

  std::vector<Edge> canonical;
  canonical.reserve(records.size());
  for (const auto& record : records) canonical.push_back(canonicalize(record.edge));
  std::sort(canonical.begin(), canonical.end());
  for (std::size_t k = 1; k < canonical.size(); ++k) {
    if (canonical[k] == canonical[k - 1]) ++report.duplicate_edges;
  }
  return report;
}

bool covers_exactly(const Transcript& transcript, const EdgeStream& graph) {
  if (transcript.records.size() != graph.edges.size()) return false;
  std::vector<Edge> a, b;
  a.reserve(graph.edges.size());
  b.reserve(graph.edges.size());
  for (const auto& record : transcript.records) a.push_back(canonicalize(record.edge));
  for (const Edge& e : graph.edges) b.push_back(canonicalize(e));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool triples_split_by_bit(const Transcript& transcript,
                          const BitSignatureTable& signatures) {
  for (const auto& record : transcript.records) {
    const auto* t = std::get_if<TripleColour>(&record.colour);
    if (t == nullptr) continue;
    if (t->index >= signatures.s()) return false;
    if (record.edge.u >= signatures.n() || record.edge.v >= signatures.n()) return false;
    if (signatures.bit(record.edge.u, t->index) ||
        !signatures.bit(record.edge.v, t->index)) {
      return false;
    }
  }
  return true;
}

ConcentrationTable chunk_concentration(const Transcript& transcript,
                                       const EdgeStream& graph) {
  std::map<std::uint64_t, std::vector<Edge>> chunks;
  for (const auto& record : transcript.records) {
    const auto* c = std::get_if<ChunkColour>(&record.colour);
    if (c == nullptr) {
      throw WrongAlgorithmError(
          "chunk concentration needs a chunk-coloured transcript, found " +
          to_string(record.colour));
    }
    chunks[c->chunk].push_back(record.edge);
  }

  ConcentrationTable table;
  const std::uint64_t m = graph.edges.size();
  if (m == 0 || chunks.empty()) return table;
  const std::vector<std::uint64_t> full = degrees(graph.edges, graph.header.n);
  const std::uint64_t delta = *std::max_element(full.begin(), full.end());

  double ratio_sum = 0;
  for (const auto& [index, edges] : chunks) {
    std::unordered_map<VertexId, std::uint64_t> local;
    for (const Edge& e : edges) {
      ++local[e.u];
      ++local[e.v];
    }
    const double share = static_cast<double>(edges.size()) / static_cast<double>(m);
    std::uint64_t max_local = 0;
    for (VertexId u = 0; u < full.size(); ++u) {
      if (full[u] == 0) continue;
      auto it = local.find(u);
      const std::uint64_t d_i = it == local.end() ? 0 : it->second;
      const double expected = static_cast<double>(full[u]) * share;
      table.rows.push_back({index, u, d_i, expected});
      table.max_vertex_ratio =
          std::max(table.max_vertex_ratio, static_cast<double>(d_i) / expected);
      max_local = std::max(max_local, d_i);
    }
    const double expected_max = static_cast<double>(delta) * share;
    const double ratio = static_cast<double>(max_local) / expected_max;
    table.chunks.push_back({index, edges.size(), max_local, expected_max, ratio});
    ratio_sum += ratio;
  }
  table.mean_chunk_ratio = ratio_sum / static_cast<double>(table.chunks.size());
  return table;
}

BudgetResult colour_budget(const VerificationReport& report,
                           const BudgetParams& params, std::uint64_t max_degree) {
  BudgetResult result;
  result.colours = report.distinct_colours;
  const double delta = static_cast<double>(max_degree);
  if (std::holds_alternative<ChunkBudget>(params)) {
    if (report.triple_colours != 0 || report.overflow_colours != 0) {
      throw ValidationError("chunk budget given a transcript with non-chunk colours");
    }
    for (const auto& [index, stats] : report.chunk_stats) {
      result.bound += stats.max_degree + 1;
    }
    result.pass = result.colours <= result.bound;
    result.ratio = max_degree == 0 ? 0.0 : static_cast<double>(result.colours) / delta;
    return result;
  }

  const std::uint32_t s = std::get<TripleBudget>(params).s;
  if (s == 0) throw ValidationError("triple budget needs s >= 1");
  if (report.chunk_colours != 0) {
    throw ValidationError("triple budget given a transcript with chunk colours");
  }
  std::uint64_t widest = 0;
  for (const auto& [index, stats] : report.triple_stats) {
    if (index >= s) {
      throw ValidationError("triple index " + std::to_string(index) + " >= s=" +
                            std::to_string(s));
    }
    widest = std::max(widest, stats.max_degree);
    result.level_bound += stats.left_levels * stats.right_levels;
  }
  result.bound = std::uint64_t{s} * widest * widest + report.overflow_colours;
  result.pass = report.triple_colours <= result.level_bound &&
                report.triple_colours <= std::uint64_t{s} * widest * widest &&
                result.colours <= result.bound;
  const double scale = delta * delta / s;
  if (scale > 0) {
    result.ratio = static_cast<double>(result.colours) / scale;
    result.triple_ratio = static_cast<double>(report.triple_colours) / scale;
  }
  return result;
}

std::uint64_t max_degree_of(const EdgeStream& graph) {
  const auto d = degrees(graph.edges, graph.header.n);
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

std::string format_report(const VerificationReport& report, std::size_t conflict_limit) {
  std::ostringstream out;
  out << (report.proper ? "PROPER" : "NOT PROPER") << "\n"
      << "edges: " << report.edge_count << "\n"
      << "max degree: " << report.max_degree << "\n"
      << "distinct colours: " << report.distinct_colours << " (chunk "
      << report.chunk_colours << ", triple " << report.triple_colours << ", overflow "
      << report.overflow_colours << ")\n"
      << "duplicate edges: " << report.duplicate_edges << "\n"
      << "conflicts: " << report.conflicts.size() << "\n";
  for (std::size_t k = 0; k < report.conflicts.size() && k < conflict_limit; ++k) {
    const Conflict& c = report.conflicts[k];
    out << "  records " << c.first << " (" << c.first_edge.u << " " << c.first_edge.v
        << ") and " << c.second << " (" << c.second_edge.u << " " << c.second_edge.v
        << ") share " << to_string(c.colour) << " at vertex " << c.shared << "\n";
  }
  for (const auto& [index, stats] : report.chunk_stats) {
    out << "chunk " << index << ": edges " << stats.edges << ", max degree "
        << stats.max_degree << ", colours " << stats.colours << "\n";
  }
  for (const auto& [index, stats] : report.triple_stats) {
    out << "B_" << index << ": edges " << stats.edges << ", max degree "
        << stats.max_degree << ", colours " << stats.colours << ", levels "
        << stats.left_levels << "x" << stats.right_levels << "\n";
  }
  return out.str();
}

}  // namespace wscolor
