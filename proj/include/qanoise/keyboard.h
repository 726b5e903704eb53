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


#ifndef QANOISE_KEYBOARD_H_
#define QANOISE_KEYBOARD_H_

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace qanoise {

// A letter keyboard modeled as staggered rows of keys. Two adjacency
// relations are derived from the rows:
//  * row-wise: immediate left/right neighbors in the same row;
//  * physical: row-wise plus keys in the rows directly above/below whose
//    horizontal centers lie less than one key width apart.
class KeyboardLayout {
 public:
  struct Row {
    std::string keys;     // lowercase ASCII letters
    double offset = 0.0;  // horizontal stagger, in key widths
  };

  // Throws ConfigError if a letter repeats or a key is not a-z.
  explicit KeyboardLayout(std::vector<Row> rows);

  // US QWERTY: qwertyuiop / asdfghjkl / zxcvbnm with stagger 0, 0.25, 0.75.
  static const KeyboardLayout& Qwerty();

  // One row per line: `keys [offset]`. Blank lines and '#' comments skipped.
  static KeyboardLayout FromFile(const std::string& path);
  static KeyboardLayout Parse(std::string_view text);

  const std::vector<Row>& rows() const { return rows_; }

  bool HasKey(char key) const;

  // Neighbor lists are empty for characters not on the layout. Queries are
  // case-insensitive; results are lowercase.
  const std::string& RowNeighbors(char key) const;
  const std::string& PhysicalNeighbors(char key) const;
  bool RowAdjacent(char a, char b) const;
  bool PhysicallyAdjacent(char a, char b) const;

 private:
  static int Slot(char key);

  std::vector<Row> rows_;
  std::array<std::string, 26> row_neighbors_;
  std::array<std::string, 26> physical_neighbors_;
  std::array<bool, 26> present_{};
};

}  // namespace qanoise

#endif  // QANOISE_KEYBOARD_H_
