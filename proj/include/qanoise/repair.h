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


#ifndef QANOISE_REPAIR_H_
#define QANOISE_REPAIR_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qanoise/noisegen.h"

namespace qanoise {

enum class RepairMode { kNamedEntity, kContentWord };

std::string_view RepairModeName(RepairMode mode);
RepairMode ParseRepairMode(std::string_view name);

// Denominator of the normalized token distance.
enum class DistanceNorm {
  kMaxLength,  // max of the two token lengths
  kReference,  // length of the context token
};

DistanceNorm ParseDistanceNorm(std::string_view name);

struct RepairOptions {
  RepairMode mode = RepairMode::kContentWord;
  double threshold = 0.5;
  DistanceNorm norm = DistanceNorm::kMaxLength;
};

struct RepairEdit {
  std::string qid;
  std::size_t token_index = 0;
  std::string original;
  std::string replacement;
  double distance = 0.0;
  RepairMode mode = RepairMode::kContentWord;

  bool operator==(const RepairEdit&) const = default;
};

struct RepairResult {
  std::string text;
  std::vector<RepairEdit> edits;  // ascending token index
};

// Replaces out-of-context question tokens of the selected class with the
// closest same-class context token when the normalized character distance
// is within the threshold. Membership is tested on casefolded surfaces;
// replacements carry the original token's case pattern. Single pass over
// the original tokens. Ties go to the lower distance, then the longer
// context token, then the earlier one. Throws ValidationError for an empty
// context and ConfigError for a threshold outside [0, 1].
RepairResult ContextRepair(std::string_view question, std::string_view context,
                           const RepairOptions& options,
                           const TaggingContext& question_tagging = {},
                           const TaggingContext& context_tagging = {});

// Normalized character distance between two tokens, casefolded.
double TokenDistance(std::string_view question_token,
                     std::string_view context_token, DistanceNorm norm);

// Appends "?" unless the right-trimmed question already ends with one. An
// empty question becomes "?" and is flagged.
NoiseOutcome RestoreFinalQuestionMark(std::string_view question);

// Edits log: qid, token_index, original, replacement, distance, mode.
std::string FormatRepairEdits(const std::vector<RepairEdit>& edits);

}  // namespace qanoise

#endif  // QANOISE_REPAIR_H_
