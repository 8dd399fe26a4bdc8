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

#ifndef WSCOLOR_EXPERIMENT_HPP_
#define WSCOLOR_EXPERIMENT_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wscolor/adversarial_arrival.hpp"
#include "wscolor/edge_io.hpp"
#include "wscolor/generators.hpp"
#include "wscolor/verifier.hpp"

namespace wscolor {

enum class Algorithm {
  kChunk,           // random-arrival chunk colourer, Vizing per chunk
  kBipartite,       // adversarial-arrival signature colourer
  kGreedyBaseline,  // chunk colourer with the greedy subroutine
};

Algorithm parse_algorithm(const std::string& text);
std::string describe(Algorithm algo);

// The bipartite colourer's signature seed is the run seed xor this salt, so
// graph, order and signatures draw from unrelated streams.
inline constexpr std::uint64_t kSignatureSalt = 0x632be59bd9b4e019ULL;

struct RunParams {
  Algorithm algo = Algorithm::kChunk;
  std::uint64_t alpha = 0;  // 0: ceil(log2 n)
  std::uint32_t s = 0;      // 0: ceil(36 ln n)
  std::uint64_t seed = 0;
  Accounting accounting = Accounting::kStrict;
};

struct RunOutcome {
  Transcript transcript;
  VerificationReport report;
  BudgetResult budget;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t max_degree = 0;
  std::uint64_t param = 0;   // alpha or s actually used
  std::uint64_t chunks = 0;  // chunk algorithms only
  std::uint64_t peak_words = 0;
  std::uint64_t peak_buffered_edges = 0;
  std::uint64_t max_bi_degree = 0;
  double wall_time_s = 0;
};

// Colours `stream` with the selected algorithm (timed), then verifies the
// transcript and checks the exact colour budget.
RunOutcome run_colourer(const EdgeStream& stream, const RunParams& params);

// Per-algorithm CSV row for the `run` subcommand, preceded by its header when
// `with_header` is set.
void write_run_csv(std::ostream& out, Algorithm algo, const RunOutcome& outcome,
                   bool with_header);

struct ExperimentSpec {
  GraphFamily family = CompleteGraph{8};
  std::string order = "random";
  Algorithm algo = Algorithm::kChunk;
  std::uint64_t param = 0;  // alpha or s; 0 selects the default
  std::vector<std::uint64_t> seeds;
  std::optional<std::string> transcript_dir;
  bool record_timing = true;
};

struct ExperimentRow {
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;
  RunOutcome outcome;
};

// For each seed: generate, colour (metered), verify, record. A failing stage
// yields an error row for that seed and the sweep continues.
std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec);

inline constexpr const char* kCsvVersion = "# wscolor-csv v1";

void write_experiment_csv(std::ostream& out, const ExperimentSpec& spec,
                          const std::vector<ExperimentRow>& rows);

}  // namespace wscolor

#endif  // WSCOLOR_EXPERIMENT_HPP_
