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


#ifndef QANOISE_PHONETIC_H_
#define QANOISE_PHONETIC_H_

#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qanoise {

struct PhoneticForm {
  enum class Source { kG2pTable, kBuiltinEncoder };

  std::vector<std::string> phonemes;
  Source source = Source::kBuiltinEncoder;
};

// Pronunciation dictionary loaded from `word<TAB>ph1 ph2 ...` lines. Lookups
// are case-insensitive; the first row for a word wins.
class G2pTable {
 public:
  G2pTable() = default;

  static G2pTable FromFile(const std::string& path);
  static G2pTable Parse(std::string_view text);

  void Add(std::string_view word, std::vector<std::string> phonemes);
  const std::vector<std::string>* Find(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, std::vector<std::string>> entries_;
};

// Returns the table pronunciation when `table` covers the word, otherwise
// the built-in encoding. Throws ValidationError for words without letters.
//
// Built-in encoding (a coarse consonant skeleton with two vowel classes):
//  1. casefold and keep letters only; collapse doubled letters;
//  2. drop a final 'e' after a consonant when an earlier vowel exists;
//  3. map digraphs: ph->F, sh->SH, ch->CH, th->TH, ck->K, qu->K W, wh->W,
//     word-initial kn->N and wr->R, gh->G word-initially and silent
//     elsewhere;
//  4. c->S before e/i/y, else K; q,k->K; s,z->S; x->K S; 'h' after a vowel
//     and not before one is silent;
//  5. a maximal vowel run (a e i o u, and y when not word-initial) becomes
//     "E" if it only contains e/i/y, else "A";
//  6. other letters map to their uppercase form; adjacent repeats collapse.
PhoneticForm PhoneticEncode(std::string_view word,
                            const G2pTable* table = nullptr);

// Substitution costs between phoneme symbols; symmetric. Unlisted pairs
// cost 1, identical symbols 0, insertions and deletions `indel`.
class PhonemeWeights {
 public:
  PhonemeWeights() = default;

  // Lines `ph1<TAB>ph2<TAB>cost`; an `*<TAB>*<TAB>cost` row sets indel cost.
  static PhonemeWeights FromFile(const std::string& path);
  static PhonemeWeights Parse(std::string_view text);

  void Set(const std::string& a, const std::string& b, double cost);
  double Substitution(const std::string& a, const std::string& b) const;
  double indel() const { return indel_; }
  void set_indel(double cost) { indel_ = cost; }

 private:
  std::map<std::pair<std::string, std::string>, double> costs_;
  double indel_ = 1.0;
};

// Weighted edit distance divided by max(|a|, |b|); 0 when both are empty.
double NormalizedPhonemeDistance(const std::vector<std::string>& a,
                                 const std::vector<std::string>& b,
                                 const PhonemeWeights& weights);

}  // namespace qanoise

#endif  // QANOISE_PHONETIC_H_
