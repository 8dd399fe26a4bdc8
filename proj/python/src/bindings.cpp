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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wscolor/adversarial_arrival.hpp"
#include "wscolor/experiment.hpp"
#include "wscolor/generators.hpp"
#include "wscolor/offline_colorer.hpp"
#include "wscolor/random_arrival.hpp"
#include "wscolor/verifier.hpp"
#include "wscolor/worst_case.hpp"

namespace py = pybind11;
using namespace wscolor;

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;
using Record = std::tuple<VertexId, VertexId, std::string>;

std::vector<Edge> to_edges(const EdgeList& pairs) {
  std::vector<Edge> out;
  out.reserve(pairs.size());
  for (const auto& [u, v] : pairs) out.push_back({u, v});
  return out;
}

EdgeList to_pairs(const std::vector<Edge>& edges) {
  EdgeList out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<Record> to_records(const std::vector<Announcement>& announcements) {
  std::vector<Record> out;
  out.reserve(announcements.size());
  for (const auto& a : announcements) out.emplace_back(a.edge.u, a.edge.v, to_string(a.colour));
  return out;
}

Transcript to_transcript(std::uint64_t n, const std::vector<Record>& records) {
  Transcript t;
  t.header.n = n;
  for (const auto& [u, v, colour] : records) {
    const auto parsed = parse_colour(colour);
    if (!parsed) throw ValidationError("bad colour `" + colour + "`");
    t.records.push_back({{u, v}, *parsed});
  }
  return t;
}

EdgeStream to_stream(std::uint64_t n, const EdgeList& edges) {
  EdgeStream s;
  s.header.n = n;
  s.edges = to_edges(edges);
  return s;
}

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["proper"] = r.proper;
  d["conflicts"] = r.conflicts.size();
  d["edges"] = r.edge_count;
  d["distinct_colours"] = r.distinct_colours;
  d["chunk_colours"] = r.chunk_colours;
  d["triple_colours"] = r.triple_colours;
  d["overflow_colours"] = r.overflow_colours;
  d["max_degree"] = r.max_degree;
  d["duplicate_edges"] = r.duplicate_edges;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "W-streaming edge colouring: generators, colourers and verifier";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_RuntimeError);
  py::register_exception<ConfigurationError>(m, "ConfigurationError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("default_alpha", &default_alpha, py::arg("n"));
  m.def("default_signature_bits", &default_signature_bits, py::arg("n"));

  m.def(
      "generate",
      [](const std::string& family, const std::string& order, std::uint64_t seed) {
        const EdgeStream s = generate(parse_family(family), parse_order(order, seed), seed);
        return py::make_tuple(s.header.n, to_pairs(s.edges));
      },
      py::arg("family"), py::arg("order") = "random", py::arg("seed") = 0,
      "Returns (n, edges) for a family such as 'complete:8' in the given order.");

  py::class_<RandomArrivalColorer>(m, "ChunkColourer")
      .def(py::init([](std::uint64_t n, std::uint64_t alpha, bool greedy) {
             return RandomArrivalColorer(ChunkConfig{n, alpha == 0 ? default_alpha(n) : alpha},
                                         greedy ? OfflineAlgorithm::kGreedy
                                                : OfflineAlgorithm::kVizing);
           }),
           py::arg("n"), py::arg("alpha") = 0, py::arg("greedy") = false)
      .def("feed",
           [](RandomArrivalColorer& c, VertexId u, VertexId v) {
             return to_records(c.feed({u, v}));
           })
      .def("finish", [](RandomArrivalColorer& c) { return to_records(c.finish()); })
      .def_property_readonly("capacity", &RandomArrivalColorer::capacity)
      .def_property_readonly("chunk_index", &RandomArrivalColorer::chunk_index)
      .def_property_readonly("buffered", &RandomArrivalColorer::buffered)
      .def_property_readonly("peak_words",
                             [](const RandomArrivalColorer& c) { return c.meter().peak_words(); });

  py::class_<AdversarialArrivalColorer>(m, "SignatureColourer")
      .def(py::init([](std::uint64_t n, std::uint32_t s, std::uint64_t seed, bool sparse) {
             AdversarialConfig cfg;
             cfg.n = n;
             cfg.s = s == 0 ? default_signature_bits(n) : s;
             cfg.seed = seed;
             cfg.accounting = sparse ? Accounting::kSparse : Accounting::kStrict;
             return AdversarialArrivalColorer(cfg);
           }),
           py::arg("n"), py::arg("s") = 0, py::arg("seed") = 0, py::arg("sparse") = false)
      .def("color_edge",
           [](AdversarialArrivalColorer& c, VertexId u, VertexId v) {
             const Announcement a = c.color_edge({u, v});
             return Record{a.edge.u, a.edge.v, to_string(a.colour)};
           })
      .def("counter", &AdversarialArrivalColorer::counter, py::arg("v"), py::arg("i"))
      .def_property_readonly("s", &AdversarialArrivalColorer::s)
      .def_property_readonly("overflow_count", &AdversarialArrivalColorer::overflow_count)
      .def_property_readonly(
          "peak_words", [](const AdversarialArrivalColorer& c) { return c.meter().peak_words(); });

  m.def(
      "run",
      [](std::uint64_t n, const EdgeList& edges, const std::string& algo, std::uint64_t alpha,
         std::uint32_t s, std::uint64_t seed) {
        RunParams p;
        p.algo = parse_algorithm(algo);
        p.alpha = alpha;
        p.s = s;
        p.seed = seed;
        const RunOutcome o = run_colourer(to_stream(n, edges), p);
        py::dict d = report_dict(o.report);
        d["records"] = to_records(o.transcript.records);
        d["param"] = o.param;
        d["chunks"] = o.chunks;
        d["peak_words"] = o.peak_words;
        d["max_bi_degree"] = o.max_bi_degree;
        d["budget_ok"] = o.budget.pass;
        d["budget_bound"] = o.budget.bound;
        return d;
      },
      py::arg("n"), py::arg("edges"), py::arg("algo") = "chunk", py::arg("alpha") = 0,
      py::arg("s") = 0, py::arg("seed") = 0,
      "Colours a stream with 'chunk', 'bipartite' or 'greedy' and verifies the result.");

  m.def(
      "verify",
      [](std::uint64_t n, const std::vector<Record>& records) {
        return report_dict(verify(to_transcript(n, records)));
      },
      py::arg("n"), py::arg("records"), "Checks (u, v, colour) records for properness.");

  m.def(
      "color_offline",
      [](std::uint64_t n, const EdgeList& edges, bool greedy) {
        const auto list = to_edges(edges);
        const AdjacencyGraph g(n, list);
        return (greedy ? color_greedy(g) : color_vizing(g)).colour;
      },
      py::arg("n"), py::arg("edges"), py::arg("greedy") = false,
      "Colour index per edge from Vizing (default) or greedy.");

  m.def(
      "chromatic_index",
      [](std::uint64_t n, const EdgeList& edges) {
        const auto list = to_edges(edges);
        return chromatic_index_bruteforce(AdjacencyGraph(n, list));
      },
      py::arg("n"), py::arg("edges"), "Exact chromatic index for graphs of at most 12 edges.");

  m.def(
      "worst_case",
      [](std::uint64_t max_degree, std::uint32_t s, std::uint64_t n, std::uint64_t seed) {
        AdversarialConfig cfg;
        cfg.n = n;
        cfg.s = s;
        cfg.seed = seed;
        cfg.expose_randomness = true;
        AdversarialArrivalColorer colourer(cfg);
        const WorstCaseResult r = worst_case_stream(max_degree, s, colourer);
        py::dict d = report_dict(verify(r.transcript));
        d["edges"] = to_pairs(r.stream.edges);
        d["records"] = to_records(r.transcript.records);
        d["vertices_used"] = r.vertices_used;
        return d;
      },
      py::arg("max_degree"), py::arg("s"), py::arg("n") = 100000, py::arg("seed") = 0,
      "Builds the star-gadget stream against a fresh signature colourer.");
}
