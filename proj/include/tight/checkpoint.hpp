// Copyright 2026 The tightdesign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Plain-text checkpoint records for the search:
//   x_lo x_hi s_lo s_hi status hit_count
//   HIT s x y alpha_1 .. alpha_imax      (hit_count lines)

#include <cstdint>
#include <fstream>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tight/search.hpp"

namespace tight {

std::string format_chunk(const SearchChunk& chunk);

/// Parses a whole checkpoint stream. A final line without a trailing newline
/// (interrupted write) is ignored; any other malformed line is a FormatError.
std::vector<SearchChunk> read_checkpoint(std::istream& in);
/// Missing file reads as empty.
std::vector<SearchChunk> read_checkpoint_file(const std::string& path);

/// The done record with exactly this chunk's ranges, if any.
std::optional<SearchChunk> find_done(const std::vector<SearchChunk>& records,
                                     const SearchChunk& chunk);

/// Largest X such that every x in [1, X] lies in a done record whose s-range
/// contains s and which has no hit for s. 0 when x = 1 is not covered.
std::int64_t hit_free_coverage(const std::vector<SearchChunk>& records, std::int64_t s);

class CheckpointWriter {
 public:
  /// append == false truncates the file.
  CheckpointWriter(const std::string& path, bool append);
  /// Writes and flushes one chunk record.
  void append(const SearchChunk& chunk);

 private:
  std::string path_;
  std::ofstream out_;
};

}  // namespace tight
