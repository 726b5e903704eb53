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


#include "qanoise/edit_distance.h"

#include "qanoise/textcore.h"

namespace qanoise {

std::string_view EditKindName(EditKind kind) {
  switch (kind) {
    case EditKind::kMatch: return "match";
    case EditKind::kSubstitute: return "substitute";
    case EditKind::kDelete: return "delete";
    case EditKind::kInsert: return "insert";
    case EditKind::kTranspose: return "transpose";
  }
  return "unknown";
}

std::size_t CharEditDistance(std::string_view a, std::string_view b,
                             bool allow_transpose) {
  const std::u32string ua = DecodeUtf8(a);
  const std::u32string ub = DecodeUtf8(b);
  return Align(std::u32string_view(ua), std::u32string_view(ub),
               allow_transpose)
      .cost;
}

}  // namespace qanoise
