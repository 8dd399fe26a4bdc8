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

#ifndef WSCOLOR_TYPES_HPP_
#define WSCOLOR_TYPES_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace wscolor {

// Invalid caller input: bad parameters, out-of-range vertices, self-loops.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// API misuse: double finish, meter underflow.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Required access (e.g. colourer randomness) was not granted.
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

using VertexId = std::uint32_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Smaller endpoint first. Throws ValidationError on a self-loop.
Edge canonicalize(Edge e);

struct StreamHeader {
  std::uint64_t n = 1;
  std::optional<std::uint64_t> m;
  std::optional<std::uint64_t> seed;
};

// Throws ValidationError when n == 0 or m exceeds n(n-1)/2.
void validate(const StreamHeader& header);

// Colour from chunk palette `chunk` (random-arrival colourer).
struct ChunkColour {
  std::uint64_t chunk = 0;
  std::uint64_t local = 0;
  friend auto operator<=>(const ChunkColour&, const ChunkColour&) = default;
};

// Colour (i, C_left, C_right) of bipartite subgraph B_i.
struct TripleColour {
  std::uint32_t index = 0;
  std::uint64_t left = 0;
  std::uint64_t right = 0;
  friend auto operator<=>(const TripleColour&, const TripleColour&) = default;
};

// Globally unique fallback colour for edges whose endpoints share a signature.
struct OverflowColour {
  std::uint64_t serial = 0;
  friend auto operator<=>(const OverflowColour&, const OverflowColour&) = default;
};

using ColourId = std::variant<ChunkColour, TripleColour, OverflowColour>;

struct ColourIdHash {
  std::size_t operator()(const ColourId& c) const noexcept;
};

// c:<chunk>:<local>, t:<i>:<j>:<k>, o:<serial>
std::string to_string(const ColourId& c);
// Inverse of to_string; std::nullopt on malformed text.
std::optional<ColourId> parse_colour(std::string_view text);

struct Announcement {
  Edge edge;
  ColourId colour;
  friend bool operator==(const Announcement&, const Announcement&) = default;
};

struct Transcript {
  StreamHeader header;
  std::vector<Announcement> records;
};

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t{e.u} << 32) | e.v);
  }
};

}  // namespace wscolor

#endif  // WSCOLOR_TYPES_HPP_
