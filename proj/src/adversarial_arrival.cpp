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

#include "wscolor/adversarial_arrival.hpp"

#include <bit>
#include <cmath>

namespace wscolor {

namespace {

constexpr std::uint64_t kScalarWords = 4;
constexpr std::uint64_t kWordsPerSparseCounter = 2;

std::size_t words_for(std::uint32_t s) { return (s + 63) / 64; }

std::uint64_t tail_mask(std::uint32_t s) {
  const std::uint32_t rem = s % 64;
  return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}

}  // namespace

std::uint32_t default_signature_bits(std::uint64_t n) {
  if (n <= 1) return 1;
  const double bits = std::ceil(36.0 * std::log(static_cast<double>(n)));
  return static_cast<std::uint32_t>(std::max(bits, 1.0));
}

std::size_t BitSet::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BitSet::nth_set(std::size_t r) const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    std::uint64_t w = words_[k];
    const auto here = static_cast<std::size_t>(std::popcount(w));
    if (r >= here) {
      r -= here;
      continue;
    }
    for (; r > 0; --r) w &= w - 1;
    return k * 64 + static_cast<std::size_t>(std::countr_zero(w));
  }
  throw ContractViolation("BitSet::nth_set rank out of range");
}

std::vector<std::uint32_t> BitSet::indices() const {
  std::vector<std::uint32_t> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    for (std::uint64_t w = words_[k]; w != 0; w &= w - 1) {
      out.push_back(static_cast<std::uint32_t>(k * 64 + std::countr_zero(w)));
    }
  }
  return out;
}

BitSignatureTable::BitSignatureTable(std::uint64_t n, std::uint32_t s,
                                     SplitMix64& rng)
    : n_(n), s_(s), words_per_node_(words_for(s)) {
  if (n == 0) throw ValidationError("signature table requires n >= 1");
  if (s == 0) throw ValidationError("signature table requires s >= 1");
  words_.resize(n * words_per_node_);
  const std::uint64_t mask = tail_mask(s);
  for (std::uint64_t v = 0; v < n; ++v) {
    for (std::size_t k = 0; k < words_per_node_; ++k) {
      std::uint64_t w = rng();
      if (k + 1 == words_per_node_) w &= mask;
      words_[v * words_per_node_ + k] = w;
    }
  }
}

BitSignatureTable::BitSignatureTable(std::uint32_t s,
                                     std::vector<std::vector<std::uint64_t>> rows)
    : n_(rows.size()), s_(s), words_per_node_(words_for(s)) {
  if (n_ == 0) throw ValidationError("signature table requires n >= 1");
  if (s == 0) throw ValidationError("signature table requires s >= 1");
  words_.reserve(n_ * words_per_node_);
  for (auto& row : rows) {
    if (row.size() != words_per_node_) {
      throw ValidationError("signature row has wrong word count");
    }
    row.back() &= tail_mask(s);
    words_.insert(words_.end(), row.begin(), row.end());
  }
}

BitSet BitSignatureTable::differing(VertexId u, VertexId v) const {
  std::vector<std::uint64_t> diff(words_per_node_);
  for (std::size_t k = 0; k < words_per_node_; ++k) {
    diff[k] = words_[u * words_per_node_ + k] ^ words_[v * words_per_node_ + k];
  }
  return BitSet(s_, std::move(diff));
}

std::size_t BitSignatureTable::differing_count(VertexId u, VertexId v) const {
  std::size_t total = 0;
  for (std::size_t k = 0; k < words_per_node_; ++k) {
    total += static_cast<std::size_t>(std::popcount(
        words_[u * words_per_node_ + k] ^ words_[v * words_per_node_ + k]));
  }
  return total;
}

const BitSignatureTable& RandomnessAccess::signatures() const {
  return owner_->signatures_;
}

std::optional<std::uint32_t> RandomnessAccess::last_choice() const {
  return owner_->last_choice_;
}

std::uint64_t RandomnessAccess::counter(VertexId v, std::uint32_t i) const {
  return owner_->counter(v, i);
}

AdversarialArrivalColorer::AdversarialArrivalColorer(const AdversarialConfig& config)
    : AdversarialArrivalColorer(
          [&config] {
            SplitMix64 rng(config.seed);
            return BitSignatureTable(config.n, config.s, rng);
          }(),
          // Index choices continue the same word sequence after the signatures.
          [&config] {
            SplitMix64 rng(config.seed);
            const std::uint64_t words = config.n * words_for(config.s);
            for (std::uint64_t k = 0; k < words; ++k) rng();
            return rng.state();
          }(),
          config.accounting, config.expose_randomness) {}

AdversarialArrivalColorer::AdversarialArrivalColorer(BitSignatureTable signatures,
                                                     std::uint64_t seed,
                                                     Accounting accounting,
                                                     bool expose_randomness)
    : signatures_(std::move(signatures)),
      coin_(seed),
      accounting_(accounting),
      expose_randomness_(expose_randomness) {
  meter_.charge(kScalarWords);
  meter_.charge(signatures_.n() * signatures_.words_per_node());
  if (accounting_ == Accounting::kStrict) {
    meter_.charge(signatures_.n() * signatures_.s());
  }
}

Announcement AdversarialArrivalColorer::color_edge(Edge e) {
  if (e.u >= n() || e.v >= n()) {
    throw ValidationError("vertex id out of range for n=" + std::to_string(n()));
  }
  const Edge canonical = canonicalize(e);
  ++edges_coloured_;
  const BitSet diff = signatures_.differing(canonical.u, canonical.v);
  const std::size_t size = diff.count();
  if (size == 0) {
    last_choice_.reset();
    return {canonical, OverflowColour{overflow_serial_++}};
  }
  const auto i = static_cast<std::uint32_t>(diff.nth_set(coin_.below(size)));
  last_choice_ = i;
  const bool u_left = !signatures_.bit(canonical.u, i);
  const Edge oriented = u_left ? canonical : Edge{canonical.v, canonical.u};
  std::uint64_t& left = counter_slot(oriented.u, i);
  std::uint64_t& right = counter_slot(oriented.v, i);
  const TripleColour colour{i, left, right};
  ++left;
  ++right;
  return {oriented, colour};
}

std::uint64_t& AdversarialArrivalColorer::counter_slot(VertexId v, std::uint32_t i) {
  const std::uint64_t key = std::uint64_t{v} * s() + i;
  auto [it, inserted] = counters_.try_emplace(key, 0);
  if (inserted && accounting_ == Accounting::kSparse) {
    meter_.charge(kWordsPerSparseCounter);
  }
  return it->second;
}

BitSet AdversarialArrivalColorer::differing_indices(VertexId u, VertexId v) const {
  if (u >= n() || v >= n()) throw ValidationError("vertex id out of range");
  return signatures_.differing(u, v);
}

std::uint64_t AdversarialArrivalColorer::counter(VertexId v, std::uint32_t i) const {
  auto it = counters_.find(std::uint64_t{v} * s() + i);
  return it == counters_.end() ? 0 : it->second;
}

RandomnessAccess AdversarialArrivalColorer::randomness() const {
  if (!expose_randomness_) {
    throw ConfigurationError(
        "colourer randomness is not exposed; construct with expose_randomness");
  }
  return RandomnessAccess(*this);
}

std::vector<BipartiteEdge> AdversarialArrivalColorer::bipartite_subgraph(
    const Transcript& transcript, std::uint32_t i) const {
  if (i >= s()) {
    throw ValidationError("bit index " + std::to_string(i) + " >= s=" +
                          std::to_string(s()));
  }
  std::vector<BipartiteEdge> out;
  for (const auto& record : transcript.records) {
    const auto* triple = std::get_if<TripleColour>(&record.colour);
    if (triple == nullptr || triple->index != i) continue;
    const Edge& e = record.edge;
    if (signatures_.bit(e.u, i)) {
      out.push_back({e.v, e.u});
    } else {
      out.push_back({e.u, e.v});
    }
  }
  return out;
}

}  // namespace wscolor
