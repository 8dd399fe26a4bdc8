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

#include "wscolor/edge_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace wscolor {

namespace {

bool skippable(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (ch != ' ' && ch != '\t' && ch != '\r') return false;
  }
  return true;
}

bool read_u64(std::istringstream& in, std::uint64_t& value) {
  std::string token;
  if (!(in >> token)) return false;
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    return false;
  }
  try {
    value = std::stoull(token);
  } catch (const std::out_of_range&) {
    return false;
  }
  return true;
}

Edge parse_edge(std::istringstream& in, const StreamHeader& header,
                std::size_t line_no) {
  std::uint64_t u = 0, v = 0;
  if (!read_u64(in, u) || !read_u64(in, v)) {
    throw ParseError(line_no, "expected `u v` edge");
  }
  if (u >= header.n || v >= header.n) {
    throw ParseError(line_no, "vertex id out of range for n=" +
                                  std::to_string(header.n));
  }
  if (u == v) throw ParseError(line_no, "self-loop");
  return Edge{static_cast<VertexId>(u), static_cast<VertexId>(v)};
}

template <typename Fn>
StreamHeader read_lines(std::istream& in, Fn&& on_record) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<StreamHeader> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    if (!header) {
      header = parse_header(line, line_no);
      continue;
    }
    std::istringstream fields(line);
    on_record(fields, *header, line_no);
  }
  if (!header) throw ParseError(line_no, "missing header line");
  return *header;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigurationError("cannot open " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigurationError("cannot write " + path);
  return out;
}

}  // namespace

std::string format_header(const StreamHeader& header) {
  std::string line = "n " + std::to_string(header.n);
  if (header.m) line += " m " + std::to_string(*header.m);
  if (header.seed) line += " seed " + std::to_string(*header.seed);
  return line;
}

StreamHeader parse_header(const std::string& line, std::size_t line_no) {
  std::istringstream in(line);
  std::string key;
  StreamHeader header;
  bool have_n = false;
  while (in >> key) {
    std::uint64_t value = 0;
    if (!read_u64(in, value)) {
      throw ParseError(line_no, "header key `" + key + "` needs an integer");
    }
    if (key == "n") {
      header.n = value;
      have_n = true;
    } else if (key == "m") {
      header.m = value;
    } else if (key == "seed") {
      header.seed = value;
    } else {
      throw ParseError(line_no, "unknown header key `" + key + "`");
    }
  }
  if (!have_n) throw ParseError(line_no, "header must start with `n <n>`");
  try {
    validate(header);
  } catch (const ValidationError& e) {
    throw ParseError(line_no, e.what());
  }
  return header;
}

void write_edge_list(std::ostream& out, const EdgeStream& stream) {
  out << format_header(stream.header) << '\n';
  for (const Edge& e : stream.edges) out << e.u << ' ' << e.v << '\n';
}

EdgeStream read_edge_list(std::istream& in) {
  EdgeStream stream;
  stream.header = read_lines(
      in, [&stream](std::istringstream& fields, const StreamHeader& header,
                    std::size_t line_no) {
        stream.edges.push_back(parse_edge(fields, header, line_no));
        std::string extra;
        if (fields >> extra) throw ParseError(line_no, "trailing text");
      });
  return stream;
}

EdgeStream read_edge_list_file(const std::string& path) {
  auto in = open_in(path);
  return read_edge_list(in);
}

void write_edge_list_file(const std::string& path, const EdgeStream& stream) {
  auto out = open_out(path);
  write_edge_list(out, stream);
}

void write_transcript(std::ostream& out, const Transcript& transcript) {
  out << format_header(transcript.header) << '\n';
  for (const auto& record : transcript.records) {
    out << record.edge.u << ' ' << record.edge.v << ' '
        << to_string(record.colour) << '\n';
  }
}

Transcript read_transcript(std::istream& in) {
  Transcript transcript;
  transcript.header = read_lines(
      in, [&transcript](std::istringstream& fields, const StreamHeader& header,
                        std::size_t line_no) {
        const Edge e = parse_edge(fields, header, line_no);
        std::string token;
        if (!(fields >> token)) throw ParseError(line_no, "missing colour");
        auto colour = parse_colour(token);
        if (!colour) throw ParseError(line_no, "malformed colour `" + token + "`");
        std::string extra;
        if (fields >> extra) throw ParseError(line_no, "trailing text");
        transcript.records.push_back({e, *colour});
      });
  return transcript;
}

Transcript read_transcript_file(const std::string& path) {
  auto in = open_in(path);
  return read_transcript(in);
}

void write_transcript_file(const std::string& path,
                           const Transcript& transcript) {
  auto out = open_out(path);
  write_transcript(out, transcript);
}

}  // namespace wscolor
