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

#ifndef WSCOLOR_RANDOM_ARRIVAL_HPP_
#define WSCOLOR_RANDOM_ARRIVAL_HPP_

#include <cstdint>
#include <vector>

#include "wscolor/space_meter.hpp"
#include "wscolor/types.hpp"

namespace wscolor {

// Chunk capacity C = alpha^2 * n edges.
struct ChunkConfig {
  std::uint64_t n = 1;
  std::uint64_t alpha = 1;

  // Throws ValidationError when n == 0, alpha == 0 or C overflows.
  void validate() const;
  std::uint64_t capacity() const { return alpha * alpha * n; }
};

// ceil(log2 n), at least 1.
std::uint64_t default_alpha(std::uint64_t n);

enum class OfflineAlgorithm { kVizing, kGreedy };

struct ChunkLog {
  std::uint64_t chunk_index = 0;
  std::uint64_t edges = 0;
  std::uint64_t max_degree = 0;
  std::uint64_t colours_used = 0;
};

// Random-arrival colourer. Edges are buffered into chunks of C edges; a full
// chunk is coloured offline with its own palette and announced at once. The
// final partial chunk is flushed by finish().
//
// Meter accounting: 6 words of scalar state, 2 words per buffered edge, and
// during a flush the offline workspace V*(D+2) + 4*E words for a chunk with V
// touched vertices, E edges and max degree D.
class RandomArrivalColorer {
 public:
  explicit RandomArrivalColorer(ChunkConfig config,
                                OfflineAlgorithm algorithm = OfflineAlgorithm::kVizing);

  // Buffers e; returns the chunk's announcements when the buffer reaches C.
  // Throws ValidationError for a self-loop or a vertex >= n.
  std::vector<Announcement> feed(Edge e);

  // Colours and announces the residual chunk. A second call throws
  // ContractViolation, as does feed() afterwards.
  std::vector<Announcement> finish();

  const ChunkConfig& config() const { return config_; }
  std::uint64_t capacity() const { return capacity_; }
  std::uint64_t chunk_index() const { return chunk_index_; }
  std::size_t buffered() const { return buffer_.size(); }
  std::size_t peak_buffered_edges() const { return peak_buffered_; }
  bool finished() const { return finished_; }
  const SpaceMeter& meter() const { return meter_; }
  const std::vector<ChunkLog>& chunk_logs() const { return logs_; }

 private:
  std::vector<Announcement> flush();

  ChunkConfig config_;
  OfflineAlgorithm algorithm_;
  std::uint64_t capacity_;
  std::vector<Edge> buffer_;
  std::uint64_t chunk_index_ = 0;
  std::size_t peak_buffered_ = 0;
  bool finished_ = false;
  SpaceMeter meter_;
  std::vector<ChunkLog> logs_;
};

}  // namespace wscolor

#endif  // WSCOLOR_RANDOM_ARRIVAL_HPP_
