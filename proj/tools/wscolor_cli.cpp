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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wscolor/edge_io.hpp"
#include "wscolor/experiment.hpp"
#include "wscolor/generators.hpp"
#include "wscolor/offline_colorer.hpp"
#include "wscolor/verifier.hpp"
#include "wscolor/worst_case.hpp"

namespace {

using namespace wscolor;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

// Resolves an output path: explicit paths win, then WSCOLOR_OUT_DIR/<fallback>,
// then stdout (empty result).
std::string output_path(const std::string& explicit_path, const std::string& fallback) {
  if (!explicit_path.empty()) return explicit_path;
  const char* dir = std::getenv("WSCOLOR_OUT_DIR");
  if (dir == nullptr || *dir == '\0') return {};
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / fallback).string();
}

template <typename Writer>
void emit(const std::string& path, Writer&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw ConfigurationError("cannot open " + path + " for writing");
  write(out);
}

std::string sanitize(std::string text) {
  for (char& c : text) {
    if (c == ':' || c == '/' || c == ' ') c = '_';
  }
  return text;
}

struct GraphSource {
  std::string graph;
  std::string family;
  std::string order = "given";
  std::uint64_t seed = 0;

  EdgeStream load() const {
    if (!graph.empty() && !family.empty()) {
      throw ValidationError("give either --graph or --family, not both");
    }
    if (!graph.empty()) {
      EdgeStream s = read_edge_list_file(graph);
      apply_order(s.edges, parse_order(order, seed));
      return s;
    }
    if (family.empty()) throw ValidationError("one of --graph or --family is required");
    return generate(parse_family(family), parse_order(order, seed), seed);
  }
};

void add_source(CLI::App* cmd, GraphSource& src) {
  cmd->add_option("--graph", src.graph, "Edge-list file");
  cmd->add_option("--family", src.family,
                  "complete:n | bipartite:a:b | star:t | gnp:n:p | regular:n:d | file:path");
  cmd->add_option("--order", src.order, "random | given | sorted | star-batched")
      ->capture_default_str();
  cmd->add_option("--seed", src.seed, "Seed for generation, order and colourer")
      ->capture_default_str();
}

int cmd_generate(const GraphSource& src, const std::string& out) {
  const EdgeStream s = src.load();
  const std::string path = output_path(
      out, sanitize(src.family.empty() ? "graph" : src.family) + "_" + src.order + "_" +
               std::to_string(src.seed) + ".edges");
  emit(path, [&](std::ostream& o) { write_edge_list(o, s); });
  return 0;
}

struct RunArgs {
  std::string algo = "chunk";
  std::uint64_t alpha = 0;
  std::uint32_t s = 0;
  bool sparse = false;
  std::string transcript_out;
};

int cmd_run(const GraphSource& src, const RunArgs& args) {
  const EdgeStream stream = src.load();
  RunParams params;
  params.algo = parse_algorithm(args.algo);
  params.alpha = args.alpha;
  params.s = args.s;
  params.seed = src.seed;
  params.accounting = args.sparse ? Accounting::kSparse : Accounting::kStrict;
  const RunOutcome outcome = run_colourer(stream, params);
  const std::string path = output_path(
      args.transcript_out, describe(params.algo) + "_seed" + std::to_string(src.seed) +
                               ".transcript");
  if (!path.empty()) write_transcript_file(path, outcome.transcript);
  write_run_csv(std::cout, params.algo, outcome, true);
  if (!outcome.report.proper) {
    std::cerr << format_report(outcome.report);
    return kExitVerifyFailed;
  }
  return 0;
}

int cmd_verify(const std::string& transcript_path, const std::string& graph_path, bool csv) {
  const Transcript t = read_transcript_file(transcript_path);
  const VerificationReport report = verify(t);
  std::optional<bool> covers;
  if (!graph_path.empty()) covers = covers_exactly(t, read_edge_list_file(graph_path));
  const bool ok = report.proper && covers.value_or(true);
  if (csv) {
    std::cout << kCsvVersion << "\n"
              << "edges,proper,conflicts,distinct_colours,chunk_colours,triple_colours,"
                 "overflow_colours,max_degree,covers_graph\n"
              << report.edge_count << ',' << (report.proper ? 1 : 0) << ','
              << report.conflicts.size() << ',' << report.distinct_colours << ','
              << report.chunk_colours << ',' << report.triple_colours << ','
              << report.overflow_colours << ',' << report.max_degree << ','
              << (covers ? (*covers ? "1" : "0") : "") << "\n";
  } else {
    std::cout << format_report(report);
    if (covers) {
      std::cout << "covers graph: " << (*covers ? "yes" : "no") << "\n";
    }
  }
  return ok ? 0 : kExitVerifyFailed;
}

int cmd_color_offline(const GraphSource& src, const std::string& algo, const std::string& out) {
  const EdgeStream s = src.load();
  const AdjacencyGraph g(s.header.n, s.edges);
  LocalColouring c;
  if (algo == "vizing") {
    c = color_vizing(g);
  } else if (algo == "greedy") {
    c = color_greedy(g);
  } else {
    throw ValidationError("unknown offline algorithm `" + algo + "`");
  }
  Transcript t;
  t.header = s.header;
  for (std::size_t k = 0; k < s.edges.size(); ++k) {
    t.records.push_back({canonicalize(s.edges[k]), ChunkColour{0, c.colour[k]}});
  }
  emit(output_path(out, algo + ".transcript"), [&](std::ostream& o) { write_transcript(o, t); });
  std::cerr << "max degree " << g.max_degree() << ", colours " << c.colour_count() << "\n";
  return is_proper(g, c) ? 0 : kExitVerifyFailed;
}

struct WorstCaseArgs {
  std::uint64_t max_degree = 64;
  std::uint32_t s = 8;
  std::uint64_t n = 100000;
  std::uint64_t seed = 0;
  std::size_t window = WorstCaseOptions{}.candidate_window;
  std::string stream_out;
  std::string transcript_out;
};

int cmd_worst_case(const WorstCaseArgs& args) {
  AdversarialConfig config;
  config.n = args.n;
  config.s = args.s;
  config.seed = args.seed;
  config.expose_randomness = true;
  AdversarialArrivalColorer colourer(config);
  const WorstCaseResult r =
      worst_case_stream(args.max_degree, args.s, colourer, WorstCaseOptions{args.window});
  const std::string stem = "worst_d" + std::to_string(args.max_degree) + "_s" +
                           std::to_string(args.s) + "_seed" + std::to_string(args.seed);
  const std::string stream_path = output_path(args.stream_out, stem + ".edges");
  const std::string transcript_path = output_path(args.transcript_out, stem + ".transcript");
  if (!stream_path.empty()) write_edge_list_file(stream_path, r.stream);
  if (!transcript_path.empty()) write_transcript_file(transcript_path, r.transcript);
  const auto report = verify(r.transcript);
  std::cout << kCsvVersion << "\n"
            << "max_degree,s,vertices_used,edges,colours,target,proper\n"
            << args.max_degree << ',' << args.s << ',' << r.vertices_used << ','
            << r.stream.edges.size() << ',' << report.distinct_colours << ','
            << args.max_degree * args.max_degree / (4 * args.s) << ','
            << (report.proper ? 1 : 0) << "\n";
  return report.proper ? 0 : kExitVerifyFailed;
}

struct SweepArgs {
  std::string family;
  std::string order = "random";
  std::string algo = "chunk";
  std::uint64_t param = 0;
  std::vector<std::uint64_t> seeds;
  std::uint64_t seed_count = 0;
  std::string transcript_dir;
  bool no_timing = false;
  std::string out;
};

int cmd_sweep(const SweepArgs& args) {
  ExperimentSpec spec;
  spec.family = parse_family(args.family);
  spec.order = args.order;
  spec.algo = parse_algorithm(args.algo);
  spec.param = args.param;
  spec.seeds = args.seeds;
  for (std::uint64_t k = 1; k <= args.seed_count; ++k) spec.seeds.push_back(k);
  if (!args.transcript_dir.empty()) spec.transcript_dir = args.transcript_dir;
  spec.record_timing = !args.no_timing;
  const auto rows = run_experiment(spec);
  const std::string path = output_path(
      args.out, "sweep_" + sanitize(args.family) + "_" + args.algo + ".csv");
  emit(path, [&](std::ostream& o) { write_experiment_csv(o, spec, rows); });
  for (const auto& row : rows) {
    if (!row.ok || !row.outcome.report.proper) return kExitVerifyFailed;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"W-streaming edge colouring toolkit"};
  app.require_subcommand(1);

  GraphSource gen_src;
  std::string gen_out;
  auto* gen = app.add_subcommand("generate", "Write a graph stream as an edge list");
  add_source(gen, gen_src);
  gen->add_option("--out", gen_out, "Output path (default stdout or $WSCOLOR_OUT_DIR)");

  GraphSource run_src;
  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Colour a stream and print a CSV row");
  add_source(run, run_src);
  run->add_option("--algo", run_args.algo, "chunk | bipartite | greedy")->capture_default_str();
  run->add_option("--alpha", run_args.alpha, "Chunk parameter (0: ceil(log2 n))");
  run->add_option("--s", run_args.s, "Signature bits (0: ceil(36 ln n))");
  run->add_flag("--sparse", run_args.sparse, "Charge only touched counters");
  run->add_option("--out", run_args.transcript_out, "Transcript output path");

  std::string verify_transcript, verify_graph;
  bool verify_csv = false;
  auto* ver = app.add_subcommand("verify", "Check a transcript for properness");
  ver->add_option("transcript", verify_transcript, "Transcript file")->required();
  ver->add_option("graph", verify_graph, "Edge-list file the transcript must cover");
  ver->add_flag("--csv", verify_csv, "Print one CSV row");

  GraphSource off_src;
  std::string off_algo = "vizing", off_out;
  auto* off = app.add_subcommand("color-offline", "Colour a whole graph in memory");
  add_source(off, off_src);
  off->add_option("--algo", off_algo, "vizing | greedy")->capture_default_str();
  off->add_option("--out", off_out, "Transcript output path");

  WorstCaseArgs wc_args;
  auto* wc = app.add_subcommand("worst-case", "Build the star-gadget stream against a colourer");
  wc->add_option("--max-degree", wc_args.max_degree)->capture_default_str();
  wc->add_option("--s", wc_args.s)->capture_default_str();
  wc->add_option("--n", wc_args.n, "Vertex budget")->capture_default_str();
  wc->add_option("--seed", wc_args.seed)->capture_default_str();
  wc->add_option("--window", wc_args.window, "Leaf candidates scanned per edge")
      ->capture_default_str();
  wc->add_option("--stream-out", wc_args.stream_out);
  wc->add_option("--transcript-out", wc_args.transcript_out);

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Run an experiment over seeds and write CSV");
  sweep->add_option("--family", sweep_args.family)->required();
  sweep->add_option("--order", sweep_args.order)->capture_default_str();
  sweep->add_option("--algo", sweep_args.algo)->capture_default_str();
  sweep->add_option("--param", sweep_args.param, "alpha or s (0: default)");
  sweep->add_option("--seeds", sweep_args.seeds, "Explicit seed list")->delimiter(',');
  sweep->add_option("--seed-count", sweep_args.seed_count, "Use seeds 1..k");
  sweep->add_option("--transcript-dir", sweep_args.transcript_dir);
  sweep->add_flag("--no-timing", sweep_args.no_timing, "Write 0 wall time for byte-stable CSV");
  sweep->add_option("--out", sweep_args.out, "CSV output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) return cmd_generate(gen_src, gen_out);
    if (*run) return cmd_run(run_src, run_args);
    if (*ver) return cmd_verify(verify_transcript, verify_graph, verify_csv);
    if (*off) return cmd_color_offline(off_src, off_algo, off_out);
    if (*wc) return cmd_worst_case(wc_args);
    if (*sweep) return cmd_sweep(sweep_args);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigurationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
