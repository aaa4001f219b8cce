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

#include "tight/checkpoint.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "tight/errors.hpp"

namespace tight {

namespace {

std::int64_t parse_int(const std::string& tok, const std::string& line) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || tok.empty()) throw FormatError("checkpoint: bad integer in line: " + line);
  return v;
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

std::string format_chunk(const SearchChunk& chunk) {
  std::ostringstream out;
  out << chunk.x_lo << ' ' << chunk.x_hi << ' ' << chunk.s_lo << ' ' << chunk.s_hi << ' '
      << (chunk.status == ChunkStatus::kDone ? "done" : "pending") << ' ' << chunk.hits.size() << '\n';
  for (const auto& h : chunk.hits) {
    out << "HIT " << h.s << ' ' << h.x << ' ' << h.y;
    for (const auto& a : h.alphas) out << ' ' << a.get_str();
    out << '\n';
  }
  return out.str();
}

std::vector<SearchChunk> read_checkpoint(std::istream& in) {
  std::vector<std::string> lines;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) break;  // torn final line
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }

  std::vector<SearchChunk> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto tok = split(lines[i]);
    if (tok.empty()) continue;
    if (tok.size() != 6) throw FormatError("checkpoint: expected chunk record, got: " + lines[i]);
    SearchChunk c;
    c.x_lo = parse_int(tok[0], lines[i]);
    c.x_hi = parse_int(tok[1], lines[i]);
    c.s_lo = parse_int(tok[2], lines[i]);
    c.s_hi = parse_int(tok[3], lines[i]);
    if (tok[4] == "done") {
      c.status = ChunkStatus::kDone;
    } else if (tok[4] == "pending") {
      c.status = ChunkStatus::kPending;
    } else {
      throw FormatError("checkpoint: unknown status in: " + lines[i]);
    }
    const std::int64_t count = parse_int(tok[5], lines[i]);
    if (count < 0) throw FormatError("checkpoint: negative hit count in: " + lines[i]);
    if (i + static_cast<std::size_t>(count) >= lines.size()) break;  // torn record; chunk is redone
    for (std::int64_t j = 0; j < count; ++j) {
      const std::string& hl = lines[++i];
      const auto ht = split(hl);
      if (ht.size() < 4 || ht[0] != "HIT") throw FormatError("checkpoint: expected HIT line, got: " + hl);
      Hit h;
      h.s = parse_int(ht[1], hl);
      h.x = parse_int(ht[2], hl);
      h.y = parse_int(ht[3], hl);
      for (std::size_t k = 4; k < ht.size(); ++k) {
        BigInt a;
        if (a.set_str(ht[k], 10) != 0) throw FormatError("checkpoint: bad alpha in: " + hl);
        h.alphas.push_back(a);
      }
      c.hits.push_back(std::move(h));
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<SearchChunk> read_checkpoint_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return {};
  return read_checkpoint(in);
}

std::optional<SearchChunk> find_done(const std::vector<SearchChunk>& records, const SearchChunk& chunk) {
  for (const auto& r : records) {
    if (r.status == ChunkStatus::kDone && r.x_lo == chunk.x_lo && r.x_hi == chunk.x_hi &&
        r.s_lo == chunk.s_lo && r.s_hi == chunk.s_hi) {
      return r;
    }
  }
  return std::nullopt;
}

std::int64_t hit_free_coverage(const std::vector<SearchChunk>& records, std::int64_t s) {
  std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
  for (const auto& r : records) {
    if (r.status != ChunkStatus::kDone || s < r.s_lo || s > r.s_hi) continue;
    const bool clean = std::none_of(r.hits.begin(), r.hits.end(), [&](const Hit& h) { return h.s == s; });
    if (clean) ranges.emplace_back(r.x_lo, r.x_hi);
  }
  std::sort(ranges.begin(), ranges.end());
  std::int64_t covered = 0;
  for (auto [lo, hi] : ranges) {
    if (lo > covered + 1) break;
    covered = std::max(covered, hi);
  }
  return covered;
}

CheckpointWriter::CheckpointWriter(const std::string& path, bool append)
    : path_(path), out_(path, append ? std::ios::app : std::ios::trunc) {
  if (!out_) throw ResourceError("cannot open checkpoint file " + path);
}

void CheckpointWriter::append(const SearchChunk& chunk) {
  out_ << format_chunk(chunk);
  out_.flush();
  if (!out_) throw ResourceError("write failed on checkpoint file " + path_);
}

}  // namespace tight
