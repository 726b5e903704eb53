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


#include "qanoise/textcore.h"

#include <algorithm>
#include <optional>

namespace qanoise {
namespace {

bool InRange(char32_t cp, char32_t lo, char32_t hi) {
  return cp >= lo && cp <= hi;
}

bool IsAsciiPunctuation(char32_t cp) {
  switch (cp) {
    case '!': case '"': case '\'': case '(': case ')': case ',': case '-':
    case '.': case '/': case ':': case ';': case '?': case '[': case ']':
    case '{': case '}':
      return true;
    default:
      return false;
  }
}

bool IsSymbol(char32_t cp) {
  if (cp < 0x80) {
    return cp > 0x20 && cp < 0x7f && !IsAsciiPunctuation(cp) &&
           !((cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') ||
             (cp >= 'A' && cp <= 'Z'));
  }
  if (IsPunctuation(cp) || IsSpace(cp)) return false;
  if (InRange(cp, 0x80, 0xBF)) return cp != 0xAA && cp != 0xB5 && cp != 0xBA;
  return cp == 0xD7 || cp == 0xF7 || InRange(cp, 0x2000, 0x2BFF) ||
         InRange(cp, 0x3000, 0x303F) || InRange(cp, 0xFE00, 0xFE0F) ||
         InRange(cp, 0xFF00, 0xFF0F) || InRange(cp, 0xFF1A, 0xFF20) ||
         InRange(cp, 0xFF3B, 0xFF40) || InRange(cp, 0xFF5B, 0xFF65) ||
         InRange(cp, 0x1F000, 0x1FAFF) || cp == 0xFFFD;
}

bool IsApostrophe(char32_t cp) { return cp == '\'' || cp == 0x2019; }

bool IsWordCharForArticles(char32_t cp) {
  return IsLetter(cp) || IsDigit(cp) || cp == '_';
}

bool IsSquadPunctuation(char32_t cp) {
  // Python's string.punctuation.
  return cp < 0x80 && cp > 0x20 && cp < 0x7f &&
         !((cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') ||
           (cp >= 'A' && cp <= 'Z'));
}

struct Decoded {
  char32_t cp;
  std::size_t length;
};

Decoded DecodeAt(std::string_view text, std::size_t pos) {
  const auto byte = [&](std::size_t i) {
    return static_cast<unsigned char>(text[i]);
  };
  const unsigned char lead = byte(pos);
  if (lead < 0x80) return {lead, 1};
  std::size_t len = 0;
  char32_t cp = 0;
  if ((lead & 0xE0) == 0xC0) {
    len = 2;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    len = 3;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    len = 4;
    cp = lead & 0x07;
  } else {
    return {0xFFFD, 1};
  }
  if (pos + len > text.size()) return {0xFFFD, 1};
  for (std::size_t i = 1; i < len; ++i) {
    const unsigned char c = byte(pos + i);
    if ((c & 0xC0) != 0x80) return {0xFFFD, 1};
    cp = (cp << 6) | (c & 0x3F);
  }
  // Reject overlong forms and surrogates.
  if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
      (len == 4 && (cp < 0x10000 || cp > 0x10FFFF)) ||
      InRange(cp, 0xD800, 0xDFFF)) {
    return {0xFFFD, 1};
  }
  return {cp, len};
}

}  // namespace

std::u32string DecodeUtf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size();) {
    const Decoded d = DecodeAt(text, pos);
    out.push_back(d.cp);
    pos += d.length;
  }
  return out;
}

void AppendUtf8(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

std::string EncodeUtf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) AppendUtf8(cp, out);
  return out;
}

std::size_t CodePointCount(std::string_view text) {
  std::size_t count = 0;
  for (std::size_t pos = 0; pos < text.size(); ++count) {
    pos += DecodeAt(text, pos).length;
  }
  return count;
}

std::size_t ByteOffsetOfCodePoint(std::string_view text,
                                  std::size_t cp_index) {
  std::size_t pos = 0;
  for (std::size_t i = 0; i < cp_index; ++i) {
    if (pos >= text.size()) return std::string_view::npos;
    pos += DecodeAt(text, pos).length;
  }
  return pos;
}

bool IsSpace(char32_t cp) {
  return cp == ' ' || InRange(cp, 0x09, 0x0D) || cp == 0x85 || cp == 0xA0 ||
         cp == 0x1680 || InRange(cp, 0x2000, 0x200B) || cp == 0x2028 ||
         cp == 0x2029 || cp == 0x202F || cp == 0x205F || cp == 0x3000 ||
         cp == 0xFEFF;
}

bool IsDigit(char32_t cp) { return cp >= '0' && cp <= '9'; }

bool IsPunctuation(char32_t cp) {
  if (cp < 0x80) return IsAsciiPunctuation(cp);
  switch (cp) {
    case 0xA1: case 0xA7: case 0xAB: case 0xB6: case 0xB7: case 0xBB:
    case 0xBF:
      return true;
    default:
      break;
  }
  return InRange(cp, 0x2010, 0x2027) || InRange(cp, 0x2030, 0x205E) ||
         InRange(cp, 0x2E00, 0x2E7F) || InRange(cp, 0x3001, 0x3003) ||
         InRange(cp, 0x3008, 0x3011) || InRange(cp, 0x3014, 0x301F) ||
         InRange(cp, 0xFF01, 0xFF03) || InRange(cp, 0xFF05, 0xFF0A) ||
         InRange(cp, 0xFF0C, 0xFF0F) || cp == 0xFF1A || cp == 0xFF1B ||
         cp == 0xFF1F || cp == 0xFF20 || InRange(cp, 0xFF3B, 0xFF3D) ||
         cp == 0xFF3F || cp == 0xFF5B || cp == 0xFF5D ||
         InRange(cp, 0xFF5F, 0xFF65);
}

bool IsLetter(char32_t cp) {
  if (cp < 0x80) return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
  if (cp == 0xAA || cp == 0xB5 || cp == 0xBA) return true;
  if (cp < 0xC0) return false;
  return !IsSpace(cp) && !IsPunctuation(cp) && !IsSymbol(cp);
}

char32_t ToLower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp < 0xC0) return cp;
  if (InRange(cp, 0xC0, 0xDE) && cp != 0xD7) return cp + 0x20;
  if (InRange(cp, 0x100, 0x137) || InRange(cp, 0x14A, 0x177)) {
    return cp | 1;
  }
  if (InRange(cp, 0x139, 0x148) || InRange(cp, 0x179, 0x17E)) {
    return (cp & 1) ? cp + 1 : cp;
  }
  if (cp == 0x178) return 0xFF;
  if (InRange(cp, 0x391, 0x3A9) && cp != 0x3A2) return cp + 0x20;
  if (InRange(cp, 0x410, 0x42F)) return cp + 0x20;
  if (InRange(cp, 0x400, 0x40F)) return cp + 0x50;
  return cp;
}

char32_t ToUpper(char32_t cp) {
  if (cp >= 'a' && cp <= 'z') return cp - 0x20;
  if (cp < 0xE0) return cp;
  if (InRange(cp, 0xE0, 0xFE) && cp != 0xF7) return cp - 0x20;
  if (cp == 0xFF) return 0x178;
  if (InRange(cp, 0x100, 0x137) || InRange(cp, 0x14A, 0x177)) {
    return cp & ~char32_t{1};
  }
  if (InRange(cp, 0x139, 0x148) || InRange(cp, 0x179, 0x17E)) {
    return (cp & 1) ? cp : cp - 1;
  }
  if (InRange(cp, 0x3B1, 0x3C9) && cp != 0x3C2) return cp - 0x20;
  if (InRange(cp, 0x430, 0x44F)) return cp - 0x20;
  if (InRange(cp, 0x450, 0x45F)) return cp - 0x50;
  return cp;
}

bool IsUpper(char32_t cp) { return ToLower(cp) != cp; }
bool IsLower(char32_t cp) { return ToUpper(cp) != cp; }

std::string CaseFold(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size();) {
    const Decoded d = DecodeAt(text, pos);
    if (d.cp < 0x80) {
      out += static_cast<char>(ToLower(d.cp));
    } else if (d.cp == 0xFFFD && d.length == 1) {
      out += text[pos];  // keep invalid bytes untouched
    } else {
      AppendUtf8(ToLower(d.cp), out);
    }
    pos += d.length;
  }
  return out;
}

CasePattern DetectCasePattern(std::string_view word) {
  std::size_t letters = 0;
  std::size_t upper = 0;
  bool first_upper = false;
  for (char32_t cp : DecodeUtf8(word)) {
    if (!IsLetter(cp)) continue;
    if (letters == 0) first_upper = IsUpper(cp);
    ++letters;
    if (IsUpper(cp)) ++upper;
  }
  if (letters >= 2 && upper == letters) return CasePattern::kUpper;
  if (first_upper) return CasePattern::kTitle;
  return CasePattern::kLower;
}

std::string ApplyCasePattern(std::string_view word, CasePattern pattern) {
  std::u32string cps = DecodeUtf8(word);
  bool seen_letter = false;
  for (char32_t& cp : cps) {
    switch (pattern) {
      case CasePattern::kLower:
        cp = ToLower(cp);
        break;
      case CasePattern::kUpper:
        cp = ToUpper(cp);
        break;
      case CasePattern::kTitle:
        if (IsLetter(cp) && !seen_letter) {
          cp = ToUpper(cp);
          seen_letter = true;
        } else {
          cp = ToLower(cp);
        }
        break;
    }
  }
  return EncodeUtf8(cps);
}

std::vector<Token> Tokenize(std::string_view text) {
  struct Unit {
    char32_t cp;
    std::size_t begin;
    std::size_t end;
  };
  std::vector<Unit> units;
  for (std::size_t pos = 0; pos < text.size();) {
    const Decoded d = DecodeAt(text, pos);
    units.push_back({d.cp, pos, pos + d.length});
    pos += d.length;
  }

  std::vector<Token> tokens;
  const auto emit = [&](std::size_t first, std::size_t last, TokenKind kind) {
    Token t;
    t.begin = units[first].begin;
    t.end = units[last].end;
    t.surface = std::string(text.substr(t.begin, t.end - t.begin));
    t.kind = kind;
    tokens.push_back(std::move(t));
  };

  std::size_t i = 0;
  while (i < units.size()) {
    const char32_t cp = units[i].cp;
    if (IsSpace(cp)) {
      ++i;
    } else if (IsLetter(cp)) {
      std::size_t j = i;
      while (j + 1 < units.size()) {
        const char32_t next = units[j + 1].cp;
        if (IsLetter(next)) {
          ++j;
        } else if (IsApostrophe(next) && j + 2 < units.size() &&
                   IsLetter(units[j + 2].cp)) {
          j += 2;
        } else {
          break;
        }
      }
      emit(i, j, TokenKind::kWord);
      i = j + 1;
    } else if (IsDigit(cp)) {
      std::size_t j = i;
      while (j + 1 < units.size() && IsDigit(units[j + 1].cp)) ++j;
      emit(i, j, TokenKind::kNumber);
      i = j + 1;
    } else {
      emit(i, i,
           IsPunctuation(cp) ? TokenKind::kPunctuation : TokenKind::kSymbol);
      ++i;
    }
  }
  return tokens;
}

std::string ReplaceTokens(std::string_view text,
                          const std::vector<Token>& tokens,
                          const std::vector<const std::string*>& replacements) {
  std::string out;
  out.reserve(text.size());
  std::size_t cursor = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    out.append(text.substr(cursor, t.begin - cursor));
    if (i < replacements.size() && replacements[i] != nullptr) {
      out += *replacements[i];
    } else {
      out.append(text.substr(t.begin, t.end - t.begin));
    }
    cursor = t.end;
  }
  out.append(text.substr(cursor));
  return out;
}

std::string CollapseWhitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (std::size_t pos = 0; pos < text.size();) {
    const Decoded d = DecodeAt(text, pos);
    if (IsSpace(d.cp)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out += ' ';
      pending_space = false;
      out.append(text.substr(pos, d.length));
    }
    pos += d.length;
  }
  return out;
}

std::string RemoveTokens(std::string_view text, const std::vector<Token>& tokens,
                         const std::vector<bool>& remove) {
  std::string out;
  bool emitted = false;
  std::size_t prev_end = 0;
  // Gap in front of the first removed token of the current run.
  std::optional<std::string_view> run_gap;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    const std::string_view gap = text.substr(prev_end, t.begin - prev_end);
    prev_end = t.end;
    if (i < remove.size() && remove[i]) {
      if (!run_gap) run_gap = gap;
      continue;
    }
    if (!emitted) {
      // Leading text of the input, then the token.
      out += run_gap ? *run_gap : gap;
    } else if (!run_gap) {
      out += gap;
    } else if (gap.empty() && t.kind != TokenKind::kPunctuation) {
      // Keep words apart when the removed run was glued to this token.
      out += *run_gap;
    } else {
      out += gap;
    }
    out += t.surface;
    emitted = true;
    run_gap.reset();
  }
  out += text.substr(prev_end);
  return CollapseWhitespace(out);
}

std::vector<std::string> NormalizeAnswer(std::string_view text) {
  std::u32string folded;
  for (char32_t cp : DecodeUtf8(text)) {
    if (IsSquadPunctuation(cp)) continue;
    folded.push_back(ToLower(cp));
  }

  // Articles are removed where a regex \b(a|an|the)\b would match: a maximal
  // run of word characters equal to one of the three forms.
  std::vector<std::string> out;
  std::u32string current;
  const auto flush = [&] {
    if (!current.empty()) out.push_back(EncodeUtf8(current));
    current.clear();
  };
  std::size_t i = 0;
  while (i < folded.size()) {
    if (IsSpace(folded[i])) {
      flush();
      ++i;
      continue;
    }
    if (!IsWordCharForArticles(folded[i])) {
      current.push_back(folded[i++]);
      continue;
    }
    std::size_t j = i;
    while (j < folded.size() && IsWordCharForArticles(folded[j])) ++j;
    const std::u32string_view run(folded.data() + i, j - i);
    if (run == U"a" || run == U"an" || run == U"the") {
      flush();  // the article becomes a space
    } else {
      current.append(run);
    }
    i = j;
  }
  flush();
  return out;
}

}  // namespace qanoise
