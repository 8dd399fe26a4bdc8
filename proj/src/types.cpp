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

#include "wscolor/types.hpp"

#include <charconv>

namespace wscolor {

Edge canonicalize(Edge e) {
  if (e.u == e.v) {
    throw ValidationError("self-loop at vertex " + std::to_string(e.u));
  }
  if (e.u > e.v) return Edge{e.v, e.u};
  return e;
}

void validate(const StreamHeader& header) {
  if (header.n == 0) throw ValidationError("stream header requires n >= 1");
  if (header.m) {
    const unsigned __int128 pairs =
        static_cast<unsigned __int128>(header.n) * (header.n - 1) / 2;
    if (*header.m > pairs) {
      throw ValidationError("stream header m exceeds n(n-1)/2");
    }
  }
}

namespace {

std::size_t mix(std::size_t seed, std::uint64_t value) {
  return seed ^ (std::hash<std::uint64_t>{}(value) + 0x9e3779b97f4a7c15ULL +
                 (seed << 6) + (seed >> 2));
}

// Parses a ':'-separated list of exactly `count` unsigned integers.
template <std::size_t count>
bool parse_fields(std::string_view text, std::uint64_t (&out)[count]) {
  for (std::size_t k = 0; k < count; ++k) {
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out[k]);
    if (ec != std::errc{} || ptr == first) return false;
    text.remove_prefix(static_cast<std::size_t>(ptr - first));
    if (k + 1 < count) {
      if (text.empty() || text.front() != ':') return false;
      text.remove_prefix(1);
    }
  }
  return text.empty();
}

}  // namespace

std::size_t ColourIdHash::operator()(const ColourId& c) const noexcept {
  std::size_t h = c.index();
  std::visit(
      [&h](const auto& colour) {
        using T = std::decay_t<decltype(colour)>;
        if constexpr (std::is_same_v<T, ChunkColour>) {
          h = mix(mix(h, colour.chunk), colour.local);
        } else if constexpr (std::is_same_v<T, TripleColour>) {
          h = mix(mix(mix(h, colour.index), colour.left), colour.right);
        } else {
          h = mix(h, colour.serial);
        }
      },
      c);
  return h;
}

std::string to_string(const ColourId& c) {
  return std::visit(
      [](const auto& colour) -> std::string {
        using T = std::decay_t<decltype(colour)>;
        if constexpr (std::is_same_v<T, ChunkColour>) {
          return "c:" + std::to_string(colour.chunk) + ":" +
                 std::to_string(colour.local);
        } else if constexpr (std::is_same_v<T, TripleColour>) {
          return "t:" + std::to_string(colour.index) + ":" +
                 std::to_string(colour.left) + ":" +
                 std::to_string(colour.right);
        } else {
          return "o:" + std::to_string(colour.serial);
        }
      },
      c);
}

std::optional<ColourId> parse_colour(std::string_view text) {
  if (text.size() < 3 || text[1] != ':') return std::nullopt;
  const char tag = text[0];
  text.remove_prefix(2);
  if (tag == 'c') {
    std::uint64_t f[2];
    if (!parse_fields(text, f)) return std::nullopt;
    return ChunkColour{f[0], f[1]};
  }
  if (tag == 't') {
    std::uint64_t f[3];
    if (!parse_fields(text, f) || f[0] > UINT32_MAX) return std::nullopt;
    return TripleColour{static_cast<std::uint32_t>(f[0]), f[1], f[2]};
  }
  if (tag == 'o') {
    std::uint64_t f[1];
    if (!parse_fields(text, f)) return std::nullopt;
    return OverflowColour{f[0]};
  }
  return std::nullopt;
}

}  // namespace wscolor
