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

#include <sstream>

#include "doctest.h"
#include "wscolor/edge_io.hpp"
#include "wscolor/rng.hpp"
#include "wscolor/space_meter.hpp"
#include "wscolor/types.hpp"

using namespace wscolor;

TEST_CASE("canonicalize orders endpoints and rejects self-loops") {
  CHECK(canonicalize({5, 2}) == Edge{2, 5});
  CHECK(canonicalize({2, 5}) == Edge{2, 5});
  CHECK(canonicalize(canonicalize({9, 4})) == canonicalize({9, 4}));
  CHECK_THROWS_AS(canonicalize({3, 3}), ValidationError);
}

TEST_CASE("space meter tracks current and peak") {
  SpaceMeter meter;
  meter.charge(10);
  CHECK(meter.current_words() == 10);
  CHECK(meter.peak_words() == 10);
  meter.release(10);
  CHECK(meter.current_words() == 0);
  CHECK(meter.peak_words() == 10);

  SpaceMeter empty;
  CHECK_THROWS_AS(empty.release(1), ContractViolation);
}

TEST_CASE("space meter peak depends only on the running maximum") {
  SpaceMeter a, b;
  a.charge(5);
  a.charge(3);
  a.release(4);
  a.charge(2);
  b.charge(8);
  b.release(8);
  b.charge(6);
  CHECK(a.peak_words() == 8);
  CHECK(b.peak_words() == 8);
  CHECK(a.peak_words() >= a.current_words());
}

TEST_CASE("stream header validation") {
  CHECK_NOTHROW(validate(StreamHeader{4, 6, std::nullopt}));
  CHECK_THROWS_AS(validate(StreamHeader{4, 7, std::nullopt}), ValidationError);
  CHECK_THROWS_AS(validate(StreamHeader{0, std::nullopt, std::nullopt}), ValidationError);
}

TEST_CASE("colour ids: variants never compare equal") {
  const ColourId chunk = ChunkColour{0, 0};
  const ColourId triple = TripleColour{0, 0, 0};
  const ColourId overflow = OverflowColour{0};
  CHECK(chunk != triple);
  CHECK(triple != overflow);
  CHECK(chunk != overflow);
  CHECK(ColourId{ChunkColour{1, 2}} == ColourId{ChunkColour{1, 2}});
  CHECK(ColourId{ChunkColour{1, 2}} != ColourId{ChunkColour{2, 2}});
  CHECK(ColourId{TripleColour{1, 0, 0}} != ColourId{TripleColour{2, 0, 0}});
}

TEST_CASE("colour text form") {
  CHECK(to_string(ChunkColour{3, 7}) == "c:3:7");
  CHECK(to_string(TripleColour{1, 0, 4}) == "t:1:0:4");
  CHECK(to_string(OverflowColour{12}) == "o:12");
  CHECK(parse_colour("c:3:7") == ColourId{ChunkColour{3, 7}});
  CHECK_FALSE(parse_colour("c:3"));
  CHECK_FALSE(parse_colour("t:1:2"));
  CHECK_FALSE(parse_colour("x:1"));
  CHECK_FALSE(parse_colour("o:-1"));
  CHECK_FALSE(parse_colour("o:1:2"));
}

TEST_CASE("property: colour text form round-trips") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    ColourId c;
    switch (rng.below(3)) {
      case 0:
        c = ChunkColour{rng(), rng.below(1000)};
        break;
      case 1:
        c = TripleColour{static_cast<std::uint32_t>(rng.below(1u << 20)), rng(), rng()};
        break;
      default:
        c = OverflowColour{rng()};
    }
    const auto parsed = parse_colour(to_string(c));
    REQUIRE(parsed);
    CHECK(*parsed == c);
    CHECK(ColourIdHash{}(*parsed) == ColourIdHash{}(c));
  }
}

TEST_CASE("edge list reading and writing") {
  std::istringstream in("# comment\nn 4 m 3 seed 9\n0 1\n3 2\n\n1 3\n");
  const EdgeStream stream = read_edge_list(in);
  CHECK(stream.header.n == 4);
  CHECK(stream.header.m == 3u);
  CHECK(stream.header.seed == 9u);
  REQUIRE(stream.edges.size() == 3);
  CHECK(stream.edges[1] == Edge{3, 2});  // stream order and orientation kept

  std::ostringstream out;
  write_edge_list(out, stream);
  CHECK(out.str() == "n 4 m 3 seed 9\n0 1\n3 2\n1 3\n");
}

TEST_CASE("property: edge list and transcript files round-trip") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Transcript t;
    t.header.n = 2 + rng.below(50);
    const std::size_t m = rng.below(40);
    for (std::size_t k = 0; k < m; ++k) {
      const auto u = static_cast<VertexId>(rng.below(t.header.n));
      auto v = static_cast<VertexId>(rng.below(t.header.n - 1));
      if (v >= u) ++v;
      t.records.push_back({{u, v}, OverflowColour{rng.below(100)}});
    }
    std::stringstream buffer;
    write_transcript(buffer, t);
    const Transcript back = read_transcript(buffer);
    CHECK(back.header.n == t.header.n);
    CHECK(back.records == t.records);
  }
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const std::string& text, bool transcript) -> std::size_t {
    std::istringstream in(text);
    try {
      if (transcript) {
        read_transcript(in);
      } else {
        read_edge_list(in);
      }
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("n 3\n0 1\n1 1\n", false) == 3);  // self-loop
  CHECK(line_of("n 3\n0 5\n", false) == 2);       // out of range
  CHECK(line_of("n 3\n0 x\n", false) == 2);
  CHECK(line_of("m 3\n", false) == 1);            // no n
  CHECK(line_of("n 3 m 4\n", false) == 1);        // m > n(n-1)/2
  CHECK(line_of("n 3\n0 1 c:0:0\n1 2 q:1\n", true) == 3);
  CHECK(line_of("n 3\n0 1\n", true) == 2);        // missing colour
  std::istringstream empty("");
  CHECK_THROWS_AS(read_edge_list(empty), ParseError);
}
