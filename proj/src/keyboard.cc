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


#include "qanoise/keyboard.h"

#include <cmath>
#include <sstream>

#include "qanoise/errors.h"
#include "qanoise/util.h"

namespace qanoise {

int KeyboardLayout::Slot(char key) {
  if (key >= 'A' && key <= 'Z') key = static_cast<char>(key - 'A' + 'a');
  if (key < 'a' || key > 'z') return -1;
  return key - 'a';
}

KeyboardLayout::KeyboardLayout(std::vector<Row> rows) : rows_(std::move(rows)) {
  for (const Row& row : rows_) {
    for (char key : row.keys) {
      if (key < 'a' || key > 'z') {
        throw ConfigError(std::string("keyboard key '") + key +
                          "' is not a lowercase letter");
      }
      if (present_[Slot(key)]) {
        throw ConfigError(std::string("keyboard key '") + key +
                          "' appears more than once");
      }
      present_[Slot(key)] = true;
    }
  }

  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::string& keys = rows_[r].keys;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      std::string& row_out = row_neighbors_[Slot(keys[i])];
      std::string& phys_out = physical_neighbors_[Slot(keys[i])];
      if (i > 0) row_out += keys[i - 1];
      if (i + 1 < keys.size()) row_out += keys[i + 1];
      phys_out = row_out;

      const double center = static_cast<double>(i) + rows_[r].offset;
      for (std::size_t other : {r - 1, r + 1}) {
        if (other >= rows_.size()) continue;  // wraps for r == 0
        const Row& near = rows_[other];
        for (std::size_t k = 0; k < near.keys.size(); ++k) {
          const double c = static_cast<double>(k) + near.offset;
          if (std::fabs(c - center) < 1.0) phys_out += near.keys[k];
        }
      }
    }
  }
}

const KeyboardLayout& KeyboardLayout::Qwerty() {
  static const KeyboardLayout layout({{"qwertyuiop", 0.0},
                                      {"asdfghjkl", 0.25},
                                      {"zxcvbnm", 0.75}});
  return layout;
}

KeyboardLayout KeyboardLayout::Parse(std::string_view text) {
  std::vector<Row> rows;
  for (const std::string& raw : SplitLines(text)) {
    const std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::istringstream in{std::string(line)};
    Row row;
    in >> row.keys;
    if (!(in >> row.offset)) row.offset = 0.0;
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ConfigError("keyboard layout has no rows");
  return KeyboardLayout(std::move(rows));
}

KeyboardLayout KeyboardLayout::FromFile(const std::string& path) {
  return Parse(ReadFile(path));
}

bool KeyboardLayout::HasKey(char key) const {
  const int slot = Slot(key);
  return slot >= 0 && present_[slot];
}

const std::string& KeyboardLayout::RowNeighbors(char key) const {
  static const std::string kNone;
  const int slot = Slot(key);
  return slot < 0 ? kNone : row_neighbors_[slot];
}

const std::string& KeyboardLayout::PhysicalNeighbors(char key) const {
  static const std::string kNone;
  const int slot = Slot(key);
  return slot < 0 ? kNone : physical_neighbors_[slot];
}

bool KeyboardLayout::RowAdjacent(char a, char b) const {
  const int slot = Slot(b);
  return slot >= 0 &&
         RowNeighbors(a).find(static_cast<char>('a' + slot)) !=
             std::string::npos;
}

bool KeyboardLayout::PhysicallyAdjacent(char a, char b) const {
  const int slot = Slot(b);
  return slot >= 0 &&
         PhysicalNeighbors(a).find(static_cast<char>('a' + slot)) !=
             std::string::npos;
}

}  // namespace qanoise
