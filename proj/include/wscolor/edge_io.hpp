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

#ifndef WSCOLOR_EDGE_IO_HPP_
#define WSCOLOR_EDGE_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "wscolor/types.hpp"

namespace wscolor {

// An edge stream in arrival order together with its header.
struct EdgeStream {
  StreamHeader header;
  std::vector<Edge> edges;
};

// Header line: `n <n> [m <m>] [seed <seed>]`.
std::string format_header(const StreamHeader& header);
StreamHeader parse_header(const std::string& line, std::size_t line_no = 1);

// Edge-list format: header, then `u v` per line in stream order.
void write_edge_list(std::ostream& out, const EdgeStream& stream);
EdgeStream read_edge_list(std::istream& in);
EdgeStream read_edge_list_file(const std::string& path);
void write_edge_list_file(const std::string& path, const EdgeStream& stream);

// Transcript format: header, then `u v <colour>` per line.
void write_transcript(std::ostream& out, const Transcript& transcript);
Transcript read_transcript(std::istream& in);
Transcript read_transcript_file(const std::string& path);
void write_transcript_file(const std::string& path, const Transcript& transcript);

}  // namespace wscolor

#endif  // WSCOLOR_EDGE_IO_HPP_
