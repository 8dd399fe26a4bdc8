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

#include "wscolor/experiment.hpp"

#include <chrono>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "wscolor/random_arrival.hpp"

namespace wscolor {

namespace {

std::string fixed(double value, int digits) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << value;
  return out.str();
}

std::string csv_escape(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch == '\n' ? ' ' : ch;
  }
  return out + "\"";
}

}  // namespace

Algorithm parse_algorithm(const std::string& text) {
  if (text == "chunk") return Algorithm::kChunk;
  if (text == "bipartite") return Algorithm::kBipartite;
  if (text == "greedy" || text == "greedy-baseline") return Algorithm::kGreedyBaseline;
  throw ValidationError("unknown algorithm `" + text + "`");
}

std::string describe(Algorithm algo) {
  switch (algo) {
    case Algorithm::kChunk:
      return "chunk";
    case Algorithm::kBipartite:
      return "bipartite";
    case Algorithm::kGreedyBaseline:
      return "greedy-baseline";
  }
  return "unknown";
}

RunOutcome run_colourer(const EdgeStream& stream, const RunParams& params) {
  RunOutcome outcome;
  outcome.n = stream.header.n;
  outcome.m = stream.edges.size();
  outcome.max_degree = max_degree_of(stream);
  outcome.transcript.header = stream.header;
  outcome.transcript.header.m = stream.edges.size();
  auto& records = outcome.transcript.records;
  records.reserve(stream.edges.size());

  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  if (params.algo == Algorithm::kBipartite) {
    AdversarialConfig config;
    config.n = stream.header.n;
    config.s = params.s == 0 ? default_signature_bits(stream.header.n) : params.s;
    config.seed = params.seed ^ kSignatureSalt;
    config.accounting = params.accounting;
    AdversarialArrivalColorer colourer(config);
    for (const Edge& e : stream.edges) records.push_back(colourer.color_edge(e));
    outcome.param = config.s;
    outcome.peak_words = colourer.meter().peak_words();
  } else {
    ChunkConfig config{stream.header.n,
                       params.alpha == 0 ? default_alpha(stream.header.n) : params.alpha};
    RandomArrivalColorer colourer(config, params.algo == Algorithm::kChunk
                                              ? OfflineAlgorithm::kVizing
                                              : OfflineAlgorithm::kGreedy);
    for (const Edge& e : stream.edges) {
      auto announced = colourer.feed(e);
      records.insert(records.end(), announced.begin(), announced.end());
    }
    auto tail = colourer.finish();
    records.insert(records.end(), tail.begin(), tail.end());
    outcome.param = config.alpha;
    outcome.chunks = colourer.chunk_index();
    outcome.peak_words = colourer.meter().peak_words();
    outcome.peak_buffered_edges = colourer.peak_buffered_edges();
  }
  outcome.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();

  outcome.report = verify(outcome.transcript);
  if (params.algo == Algorithm::kBipartite) {
    outcome.budget = colour_budget(
        outcome.report, TripleBudget{static_cast<std::uint32_t>(outcome.param)},
        outcome.max_degree);
    for (const auto& [index, stats] : outcome.report.triple_stats) {
      outcome.max_bi_degree = std::max(outcome.max_bi_degree, stats.max_degree);
    }
  } else {
    outcome.budget = colour_budget(outcome.report, ChunkBudget{}, outcome.max_degree);
  }
  return outcome;
}

void write_run_csv(std::ostream& out, Algorithm algo, const RunOutcome& o,
                   bool with_header) {
  if (with_header) {
    out << kCsvVersion << "\n";
    if (algo == Algorithm::kBipartite) {
      out << "n,m,max_degree,s,colours,overflow_count,max_bi_degree,peak_words,"
             "wall_time_s\n";
    } else {
      out << "n,m,max_degree,alpha,chunks,colours,peak_words,wall_time_s\n";
    }
  }
  if (algo == Algorithm::kBipartite) {
    out << o.n << ',' << o.m << ',' << o.max_degree << ',' << o.param << ','
        << o.report.distinct_colours << ',' << o.report.overflow_colours << ','
        << o.max_bi_degree << ',' << o.peak_words << ',' << fixed(o.wall_time_s, 6)
        << "\n";
  } else {
    out << o.n << ',' << o.m << ',' << o.max_degree << ',' << o.param << ','
        << o.chunks << ',' << o.report.distinct_colours << ',' << o.peak_words << ','
        << fixed(o.wall_time_s, 6) << "\n";
  }
}

std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec) {
  if (spec.seeds.empty()) throw ValidationError("experiment needs at least one seed");
  std::vector<ExperimentRow> rows;
  rows.reserve(spec.seeds.size());
  for (std::uint64_t seed : spec.seeds) {
    ExperimentRow row;
    row.seed = seed;
    try {
      const EdgeStream stream =
          generate(spec.family, parse_order(spec.order, seed), seed);
      RunParams params;
      params.algo = spec.algo;
      params.seed = seed;
      if (spec.algo == Algorithm::kBipartite) {
        params.s = static_cast<std::uint32_t>(spec.param);
      } else {
        params.alpha = spec.param;
      }
      row.outcome = run_colourer(stream, params);
      if (!spec.record_timing) row.outcome.wall_time_s = 0;
      if (spec.transcript_dir) {
        std::filesystem::create_directories(*spec.transcript_dir);
        const auto path = std::filesystem::path(*spec.transcript_dir) /
                          (describe(spec.algo) + "_seed" + std::to_string(seed) +
                           ".transcript");
        write_transcript_file(path.string(), row.outcome.transcript);
      }
      row.ok = true;
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_experiment_csv(std::ostream& out, const ExperimentSpec& spec,
                          const std::vector<ExperimentRow>& rows) {
  out << kCsvVersion << "\n"
      << "seed,family,order,algo,param,n,m,max_degree,chunks,colours,triple_colours,"
         "overflow,max_bi_degree,peak_words,proper,budget_ok,wall_time_s,error\n";
  const std::string family = csv_escape(describe(spec.family));
  for (const auto& row : rows) {
    const RunOutcome& o = row.outcome;
    out << row.seed << ',' << family << ',' << spec.order << ',' << describe(spec.algo)
        << ',';
    if (!row.ok) {
      out << ",,,,,,,,,,,,," << csv_escape(row.error) << "\n";
      continue;
    }
    out << o.param << ',' << o.n << ',' << o.m << ',' << o.max_degree << ',' << o.chunks
        << ',' << o.report.distinct_colours << ',' << o.report.triple_colours << ','
        << o.report.overflow_colours << ',' << o.max_bi_degree << ',' << o.peak_words
        << ',' << (o.report.proper ? 1 : 0) << ',' << (o.budget.pass ? 1 : 0) << ','
        << fixed(o.wall_time_s, 6) << ",\n";
  }
}

}  // namespace wscolor
