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

#include <gtest/gtest.h>

#include "qanoise/errors.h"

namespace qanoise {
namespace {

TEST(KeyboardTest, QwertyRowNeighbors) {
  const KeyboardLayout& kb = KeyboardLayout::Qwerty();
  EXPECT_EQ(kb.RowNeighbors('q'), "w");
  EXPECT_EQ(kb.RowNeighbors('s'), "ad");
  EXPECT_EQ(kb.RowNeighbors('M'), "n");
  EXPECT_TRUE(kb.RowAdjacent('o', 'i'));
  EXPECT_FALSE(kb.RowAdjacent('o', 'k'));
  EXPECT_TRUE(kb.RowNeighbors('1').empty());
}

TEST(KeyboardTest, QwertyPhysicalNeighbors) {
  const KeyboardLayout& kb = KeyboardLayout::Qwerty();
  // 'o' sits above 'k' and 'l' on a staggered board.
  EXPECT_TRUE(kb.PhysicallyAdjacent('o', 'k'));
  EXPECT_TRUE(kb.PhysicallyAdjacent('o', 'l'));
  EXPECT_TRUE(kb.PhysicallyAdjacent('o', 'i'));
  EXPECT_FALSE(kb.PhysicallyAdjacent('o', 'j'));
  EXPECT_TRUE(kb.PhysicallyAdjacent('g', 'v'));
  EXPECT_FALSE(kb.PhysicallyAdjacent('q', 'z'));
}

TEST(KeyboardTest, AdjacencyIsSymmetric) {
  const KeyboardLayout& kb = KeyboardLayout::Qwerty();
  for (char a = 'a'; a <= 'z'; ++a) {
    for (char b = 'a'; b <= 'z'; ++b) {
      EXPECT_EQ(kb.PhysicallyAdjacent(a, b), kb.PhysicallyAdjacent(b, a));
      EXPECT_EQ(kb.RowAdjacent(a, b), kb.RowAdjacent(b, a));
      if (kb.RowAdjacent(a, b)) EXPECT_TRUE(kb.PhysicallyAdjacent(a, b));
    }
  }
}

TEST(KeyboardTest, ParseCustomLayout) {
  const KeyboardLayout kb = KeyboardLayout::Parse(
      "# AZERTY letters\nazertyuiop 0\nqsdfghjklm 0.25\nwxcvbn 0.75\n");
  EXPECT_EQ(kb.RowNeighbors('a'), "z");
  EXPECT_TRUE(kb.RowAdjacent('l', 'm'));
}

TEST(KeyboardTest, RejectsDuplicatesAndNonLetters) {
  EXPECT_THROW(KeyboardLayout::Parse("abca\n"), ConfigError);
  EXPECT_THROW(KeyboardLayout::Parse("ab1\n"), ConfigError);
}

}  // namespace
}  // namespace qanoise
