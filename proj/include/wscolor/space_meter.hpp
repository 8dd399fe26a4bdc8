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

#ifndef WSCOLOR_SPACE_METER_HPP_
#define WSCOLOR_SPACE_METER_HPP_

#include <algorithm>
#include <cstdint>

#include "wscolor/types.hpp"

namespace wscolor {

// Word-count accounting of a colourer's live state. A word is one integer of
// magnitude at most max(n, max degree, number of colours).
class SpaceMeter {
 public:
  void charge(std::uint64_t words) {
    current_ += words;
    peak_ = std::max(peak_, current_);
  }

  void release(std::uint64_t words) {
    if (words > current_) {
      throw ContractViolation("space meter release exceeds current usage");
    }
    current_ -= words;
  }

  std::uint64_t current_words() const { return current_; }
  std::uint64_t peak_words() const { return peak_; }

 private:
  std::uint64_t current_ = 0;
  std::uint64_t peak_ = 0;
};

}  // namespace wscolor

#endif  // WSCOLOR_SPACE_METER_HPP_
