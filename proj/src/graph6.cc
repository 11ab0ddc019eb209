// Copyright 2026 The sigraph Authors
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

#include "sigraph/graph6.h"

#include <cstdint>
#include <string>

#include "sigraph/errors.h"

namespace sigraph {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";
constexpr std::uint64_t kMaxReadableOrder = 1 << 16;

void AppendSize(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kBias));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kBias));
    }
  }
}

int SixBits(char c) {
  const int value = static_cast<unsigned char>(c) - kBias;
  if (value < 0 || value > 63) {
    throw Graph6Error(std::string("invalid graph6 character '") + c + "'");
  }
  return value;
}

}  // namespace

std::string ToGraph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  AppendSize(out, n);
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    const auto row = g.neighbors(j);
    auto it = row.begin();
    for (Vertex i = 0; i < j; ++i) {
      while (it != row.end() && *it < i) ++it;
      const bool bit = it != row.end() && *it == i;
      acc = (acc << 1) | (bit ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  }
  return out;
}

Graph FromGraph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw Graph6Error("empty graph6 string");
  if (text[0] == ':' || text[0] == ';' || text[0] == '&') {
    throw Graph6Error("sparse6/digraph6 input is not supported");
  }

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (text[0] != 126) {
    n = static_cast<std::uint64_t>(SixBits(text[0]));
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) throw Graph6Error("truncated graph6 size field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | SixBits(text[i]);
    if (n < 63) throw Graph6Error("non-canonical graph6 size field");
    pos = 4;
  } else {
    if (text.size() < 8) throw Graph6Error("truncated graph6 size field");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | SixBits(text[i]);
    if (n < 258048) throw Graph6Error("non-canonical graph6 size field");
    pos = 8;
  }

  if (n > kMaxReadableOrder) {
    throw Graph6Error("graph6 order " + std::to_string(n) + " exceeds " +
                      std::to_string(kMaxReadableOrder));
  }
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw Graph6Error("graph6 body has " + std::to_string(text.size() - pos) +
                      " bytes, expected " + std::to_string(bytes) +
                      " for order " + std::to_string(n));
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  Vertex i = 0;
  Vertex j = 1;
  for (std::size_t b = pos; b < text.size(); ++b) {
    const int value = SixBits(text[b]);
    for (int shift = 5; shift >= 0; --shift, ++k) {
      const bool bit = (value >> shift) & 1;
      if (k >= bits) {
        if (bit) throw Graph6Error("nonzero graph6 padding bits");
        continue;
      }
      if (bit) edges.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

std::vector<Graph> ReadGraph6Lines(std::string_view text) {
  std::vector<Graph> out;
  while (!text.empty()) {
    const std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text.remove_prefix(end == std::string_view::npos ? text.size() : end + 1);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.remove_suffix(1);
    }
    if (!line.empty()) out.push_back(FromGraph6(line));
  }
  return out;
}

}  // namespace sigraph
