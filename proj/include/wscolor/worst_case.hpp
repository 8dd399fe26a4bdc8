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

#ifndef WSCOLOR_WORST_CASE_HPP_
#define WSCOLOR_WORST_CASE_HPP_

#include <cstdint>

#include "wscolor/adversarial_arrival.hpp"
#include "wscolor/edge_io.hpp"
#include "wscolor/types.hpp"

namespace wscolor {

struct WorstCaseOptions {
  // Fresh vertices inspected when picking a star leaf or centre partner; the
  // one with the fewest differing bits wins.
  std::size_t candidate_window = 256;
};

struct WorstCaseResult {
  EdgeStream stream;
  Transcript transcript;
  std::uint64_t vertices_used = 0;
  std::uint64_t star_levels = 0;      // colours (i, j, k) targeted for j, k < levels
  std::uint64_t targeted_colours = 0;
  std::uint64_t wasted_edges = 0;     // edges that landed outside the target B_i
};

// Star-gadget adversary with read access to the colourer's randomness. For
// each bit index i and each pair j, k < levels = max_degree / s it builds a
// left centre whose B_i counter is j and a right centre whose B_i counter is
// k, each grown by attaching fresh leaves until exactly that many edges have
// been routed to B_i, and then joins the two centres. A join that lands in a
// different B_i' is retried against a fresh copy of the smaller star. The
// stream is fed to `colourer` edge by edge as it is emitted.
//
// Requires a colourer that has coloured nothing yet, exposes its randomness
// (ConfigurationError otherwise) and has s == `s`; max_degree >= s. Every
// emitted vertex has degree <= max_degree and no edge repeats. Throws
// ConfigurationError if the colourer's vertex range is exhausted.
WorstCaseResult worst_case_stream(std::uint64_t max_degree, std::uint32_t s,
                                  AdversarialArrivalColorer& colourer,
                                  const WorstCaseOptions& options = {});

}  // namespace wscolor

#endif  // WSCOLOR_WORST_CASE_HPP_
