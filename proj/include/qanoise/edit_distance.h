// Copyright 2026 The qanoise Authors.
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


#ifndef QANOISE_EDIT_DISTANCE_H_
#define QANOISE_EDIT_DISTANCE_H_

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qanoise {

enum class EditKind { kMatch, kSubstitute, kDelete, kInsert, kTranspose };

std::string_view EditKindName(EditKind kind);

// One step of an edit script. `source` and `target` index the element the
// step consumes (or, for inserts, the source position it precedes and the
// target element it produces; for deletes, the target position it sits
// before). A transpose consumes source[source], source[source + 1] and
// produces target[target], target[target + 1].
template <typename T>
struct EditOp {
  EditKind kind = EditKind::kMatch;
  std::size_t source = 0;
  std::size_t target = 0;
  T symbol{};  // produced element for substitute and insert
};

template <typename T>
struct EditAlignment {
  std::vector<EditOp<T>> ops;
  std::size_t cost = 0;

  std::size_t Count(EditKind kind) const {
    std::size_t n = 0;
    for (const auto& op : ops) n += op.kind == kind;
    return n;
  }
};

// Minimal unit-cost alignment between `a` and `b`. With `allow_transpose`
// the op set adds adjacent transposition at cost 1 (restricted Damerau,
// i.e. no further edits inside a transposed pair); without it the cost is
// the Levenshtein distance.
//
// Ties during the traceback prefer match, substitute, delete, insert,
// transpose in that order.
template <typename T>
EditAlignment<T> Align(std::span<const T> a, std::span<const T> b,
                       bool allow_transpose = false) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  const std::size_t width = m + 1;
  std::vector<std::size_t> d((n + 1) * width);
  const auto at = [&](std::size_t i, std::size_t j) -> std::size_t& {
    return d[i * width + j];
  };
  for (std::size_t i = 0; i <= n; ++i) at(i, 0) = i;
  for (std::size_t j = 0; j <= m; ++j) at(0, j) = j;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t diag = at(i - 1, j - 1) + (a[i - 1] == b[j - 1] ? 0 : 1);
      std::size_t best = std::min({diag, at(i - 1, j) + 1, at(i, j - 1) + 1});
      if (allow_transpose && i > 1 && j > 1 && a[i - 1] == b[j - 2] &&
          a[i - 2] == b[j - 1] && a[i - 1] != b[j - 1]) {
        best = std::min(best, at(i - 2, j - 2) + 1);
      }
      at(i, j) = best;
    }
  }

  EditAlignment<T> result;
  result.cost = at(n, m);
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    const std::size_t here = at(i, j);
    if (i > 0 && j > 0 && a[i - 1] == b[j - 1] && at(i - 1, j - 1) == here) {
      result.ops.push_back({EditKind::kMatch, i - 1, j - 1, T{}});
      --i;
      --j;
    } else if (i > 0 && j > 0 && a[i - 1] != b[j - 1] &&
               at(i - 1, j - 1) + 1 == here) {
      result.ops.push_back({EditKind::kSubstitute, i - 1, j - 1, b[j - 1]});
      --i;
      --j;
    } else if (i > 0 && at(i - 1, j) + 1 == here) {
      result.ops.push_back({EditKind::kDelete, i - 1, j, T{}});
      --i;
    } else if (j > 0 && at(i, j - 1) + 1 == here) {
      result.ops.push_back({EditKind::kInsert, i, j - 1, b[j - 1]});
      --j;
    } else {
      // Only a transposition can explain this cell.
      result.ops.push_back({EditKind::kTranspose, i - 2, j - 2, T{}});
      i -= 2;
      j -= 2;
    }
  }
  std::reverse(result.ops.begin(), result.ops.end());
  return result;
}

template <typename T>
EditAlignment<T> Align(const std::vector<T>& a, const std::vector<T>& b,
                       bool allow_transpose = false) {
  return Align(std::span<const T>(a), std::span<const T>(b), allow_transpose);
}

inline EditAlignment<char32_t> Align(std::u32string_view a,
                                     std::u32string_view b,
                                     bool allow_transpose = false) {
  return Align(std::span<const char32_t>(a.data(), a.size()),
               std::span<const char32_t>(b.data(), b.size()),
               allow_transpose);
}

// Replays `alignment` over `source`, producing the target sequence.
template <typename T>
std::vector<T> ApplyAlignment(std::span<const T> source,
                              const EditAlignment<T>& alignment) {
  std::vector<T> out;
  for (const auto& op : alignment.ops) {
    switch (op.kind) {
      case EditKind::kMatch:
        out.push_back(source[op.source]);
        break;
      case EditKind::kSubstitute:
      case EditKind::kInsert:
        out.push_back(op.symbol);
        break;
      case EditKind::kDelete:
        break;
      case EditKind::kTranspose:
        out.push_back(source[op.source + 1]);
        out.push_back(source[op.source]);
        break;
    }
  }
  return out;
}

// Code-point edit distance between two UTF-8 strings.
std::size_t CharEditDistance(std::string_view a, std::string_view b,
                             bool allow_transpose = false);

}  // namespace qanoise

#endif  // QANOISE_EDIT_DISTANCE_H_
