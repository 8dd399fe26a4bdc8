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

#ifndef WSCOLOR_ADVERSARIAL_ARRIVAL_HPP_
#define WSCOLOR_ADVERSARIAL_ARRIVAL_HPP_

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "wscolor/rng.hpp"
#include "wscolor/space_meter.hpp"
#include "wscolor/types.hpp"

namespace wscolor {

// ceil(36 ln n), at least 1.
std::uint32_t default_signature_bits(std::uint64_t n);

// Set of bit positions, packed 64 per word; bit b lives in word b / 64 at
// position b % 64.
class BitSet {
 public:
  BitSet() = default;
  BitSet(std::size_t bits, std::vector<std::uint64_t> words)
      : bits_(bits), words_(std::move(words)) {}

  std::size_t size() const { return bits_; }
  bool test(std::size_t b) const { return (words_[b / 64] >> (b % 64)) & 1u; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  // Position of the r-th set bit (0-based), r < count().
  std::size_t nth_set(std::size_t r) const;
  std::vector<std::uint32_t> indices() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

// Immutable per-node s-bit random strings drawn from SplitMix64(seed): node 0
// takes the first ceil(s/64) words, node 1 the next, and so on. Bit 0 is the
// least significant bit of a node's first word; unused high bits of the last
// word are discarded.
class BitSignatureTable {
 public:
  BitSignatureTable(std::uint64_t n, std::uint32_t s, SplitMix64& rng);
  // Explicit signatures, one word vector per node (for hand-built cases).
  BitSignatureTable(std::uint32_t s, std::vector<std::vector<std::uint64_t>> rows);

  std::uint64_t n() const { return n_; }
  std::uint32_t s() const { return s_; }
  std::size_t words_per_node() const { return words_per_node_; }
  bool bit(VertexId v, std::uint32_t i) const {
    return (words_[v * words_per_node_ + i / 64] >> (i % 64)) & 1u;
  }
  // Indices where the signatures of u and v differ.
  BitSet differing(VertexId u, VertexId v) const;
  std::size_t differing_count(VertexId u, VertexId v) const;

 private:
  std::uint64_t n_;
  std::uint32_t s_;
  std::size_t words_per_node_;
  std::vector<std::uint64_t> words_;
};

enum class Accounting {
  kStrict,  // counters charged at the worst case n*s words up front
  kSparse,  // 2 words per touched (node, index) counter
};

struct AdversarialConfig {
  std::uint64_t n = 1;
  std::uint32_t s = 1;
  std::uint64_t seed = 0;
  Accounting accounting = Accounting::kStrict;
  bool expose_randomness = false;
};

// Left/right-labelled edge of B_i: left has bit i == 0.
struct BipartiteEdge {
  VertexId left;
  VertexId right;
  friend bool operator==(const BipartiteEdge&, const BipartiteEdge&) = default;
};

class AdversarialArrivalColorer;

// Read access to a colourer's randomness: signatures and the index drawn for
// the most recent edge. Only granted when the colourer was built with
// expose_randomness.
class RandomnessAccess {
 public:
  const BitSignatureTable& signatures() const;
  std::optional<std::uint32_t> last_choice() const;
  std::uint64_t counter(VertexId v, std::uint32_t i) const;

 private:
  friend class AdversarialArrivalColorer;
  explicit RandomnessAccess(const AdversarialArrivalColorer& owner) : owner_(&owner) {}
  const AdversarialArrivalColorer* owner_;
};

// Adversarial-arrival colourer. Each edge (u, v) is routed to B_i for i drawn
// uniformly from the differing-index set of the two signatures, oriented so
// the bit-0 endpoint is left, and announced immediately as
// (i, C_left^(i), C_right^(i)); both counters then increment. Edges between
// equal signatures get a fresh Overflow colour.
class AdversarialArrivalColorer {
 public:
  explicit AdversarialArrivalColorer(const AdversarialConfig& config);
  // Hand-built signatures; index choices still come from SplitMix64(seed).
  AdversarialArrivalColorer(BitSignatureTable signatures, std::uint64_t seed,
                            Accounting accounting = Accounting::kStrict,
                            bool expose_randomness = false);

  // Announced edge is (left, right) for Triple colours, canonical otherwise.
  // Throws ValidationError for a self-loop or a vertex >= n.
  Announcement color_edge(Edge e);

  std::uint64_t n() const { return signatures_.n(); }
  std::uint32_t s() const { return signatures_.s(); }
  BitSet differing_indices(VertexId u, VertexId v) const;
  std::uint64_t counter(VertexId v, std::uint32_t i) const;
  std::uint64_t overflow_count() const { return overflow_serial_; }
  std::uint64_t edges_coloured() const { return edges_coloured_; }
  const SpaceMeter& meter() const { return meter_; }
  bool randomness_exposed() const { return expose_randomness_; }

  // Throws ConfigurationError unless randomness was exposed.
  RandomnessAccess randomness() const;

  // All Triple-coloured records of B_i in `transcript`, labelled by bit i.
  // Throws ValidationError when i >= s.
  std::vector<BipartiteEdge> bipartite_subgraph(const Transcript& transcript,
                                                std::uint32_t i) const;

 private:
  friend class RandomnessAccess;

  std::uint64_t& counter_slot(VertexId v, std::uint32_t i);

  BitSignatureTable signatures_;
  SplitMix64 coin_;
  Accounting accounting_;
  bool expose_randomness_;
  std::unordered_map<std::uint64_t, std::uint64_t> counters_;
  std::uint64_t overflow_serial_ = 0;
  std::uint64_t edges_coloured_ = 0;
  std::optional<std::uint32_t> last_choice_;
  SpaceMeter meter_;
};

}  // namespace wscolor

#endif  // WSCOLOR_ADVERSARIAL_ARRIVAL_HPP_
