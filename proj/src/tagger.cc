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


#include "qanoise/tagger.h"

#include <map>

#include "qanoise/errors.h"
#include "qanoise/util.h"

namespace qanoise {
namespace {

constexpr const char* kFunctionWords[] = {
    // articles and determiners
    "a", "an", "the", "this", "that", "these", "those", "some", "any", "each",
    "every", "either", "neither", "no", "all", "both", "such",
    // conjunctions
    "and", "or", "but", "nor", "so", "yet", "although", "because", "unless",
    "while", "whereas", "if", "though", "whether", "than", "as",
    // pronouns, including interrogatives
    "i", "me", "my", "mine", "myself", "you", "your", "yours", "yourself",
    "yourselves", "he", "him", "his", "himself", "she", "her", "hers",
    "herself", "it", "its", "itself", "we", "us", "our", "ours", "ourselves",
    "they", "them", "their", "theirs", "themselves", "who", "whom", "whose",
    "which", "what", "whatever", "whoever", "whichever", "someone", "anyone",
    "everyone", "something", "anything", "everything", "nothing", "nobody",
    "somebody", "anybody", "everybody", "one",
    // auxiliaries and modals
    "be", "am", "is", "are", "was", "were", "been", "being", "have", "has",
    "had", "having", "do", "does", "did", "will", "would", "shall", "should",
    "can", "could", "may", "might", "must",
    // contractions
    "it's", "that's", "there's", "what's", "who's", "don't", "doesn't",
    "didn't", "isn't", "aren't", "wasn't", "weren't", "can't", "won't",
    // prepositions
    "of", "in", "on", "at", "by", "for", "with", "about", "against",
    "between", "into", "through", "during", "before", "after", "above",
    "below", "to", "from", "up", "down", "out", "off", "over", "under",
    "across", "along", "among", "around", "behind", "beside", "beneath",
    "beyond", "despite", "except", "inside", "near", "onto", "outside", "per",
    "since", "toward", "towards", "upon", "via", "within", "without", "like",
    // adverbial closed class and wh-adverbs
    "not", "there", "here", "then", "when", "where", "why", "how", "also",
    "too", "very", "just", "only",
};

constexpr const char* kVerbs[] = {
    "get", "gets", "got", "gotten", "make", "makes", "made", "go", "goes",
    "went", "gone", "come", "comes", "came", "take", "takes", "took", "taken",
    "give", "gives", "gave", "given", "know", "knows", "knew", "known",
    "think", "thinks", "thought", "see", "sees", "saw", "seen", "find",
    "finds", "found", "tell", "tells", "told", "become", "becomes", "became",
    "leave", "leaves", "left", "feel", "feels", "felt", "bring", "brings",
    "brought", "begin", "begins", "began", "begun", "keep", "keeps", "kept",
    "hold", "holds", "held", "write", "writes", "wrote", "written", "stand",
    "stands", "stood", "hear", "hears", "heard", "let", "lets", "mean",
    "means", "meant", "meet", "meets", "met", "run", "runs", "ran", "pay",
    "pays", "paid", "sit", "sits", "sat", "speak", "speaks", "spoke",
    "spoken", "lead", "leads", "led", "read", "reads", "grow", "grows",
    "grew", "grown", "lose", "loses", "lost", "fall", "falls", "fell",
    "fallen", "send", "sends", "sent", "build", "builds", "built",
    "understand", "understood", "draw", "drew", "drawn", "break", "breaks",
    "broke", "broken", "spend", "spent", "rise", "rises", "rose", "risen",
    "drive", "drove", "driven", "buy", "bought", "wear", "wore", "worn",
    "choose", "chose", "chosen", "sleep", "sleeps", "slept", "say", "says",
    "said", "use", "uses", "used", "want", "wants", "wanted", "need", "needs",
    "needed", "call", "calls", "called", "try", "tries", "tried", "ask",
    "asks", "asked", "seem", "seems", "seemed", "help", "helps", "helped",
    "show", "shows", "showed", "shown", "play", "plays", "played", "move",
    "moves", "moved", "live", "lives", "lived", "believe", "believed",
    "happen", "happened", "include", "includes", "included", "win", "wins",
    "won", "die", "died", "born", "selected", "named", "located", "based",
    "throw", "throws", "threw", "thrown", "catch", "catches", "caught",
    "fight", "fights", "fought", "teach", "teaches", "taught", "sell",
    "sells", "sold", "fly", "flies", "flew", "flown", "sing", "sang", "sung",
    "eat", "eats", "ate", "eaten", "score", "scored", "create", "created",
    "discover", "discovered", "establish", "established", "founded",
    "invent", "invented", "produce", "produced", "receive", "received",
    "develop", "developed", "occur", "occurred", "start", "started",
    "end", "ended", "join", "joined", "defeat", "defeated", "invade",
    "invaded", "describe", "described", "consider", "considered", "hit",
};

std::string StripBio(const std::string& label, char* prefix) {
  *prefix = 0;
  if (label.size() > 2 && (label[0] == 'B' || label[0] == 'I') &&
      label[1] == '-') {
    *prefix = label[0];
    return label.substr(2);
  }
  return label;
}

WordClass ClassOfPosTag(const std::string& tag) {
  static const std::unordered_set<std::string> kContentTags = {
      "NOUN", "PROPN", "ADJ", "NN", "NNS", "NNP", "NNPS", "JJ", "JJR", "JJS"};
  static const std::unordered_set<std::string> kFunctionTags = {
      "DET",  "PRON", "CCONJ", "SCONJ", "CONJ", "AUX", "ADP", "DT", "PDT",
      "PRP",  "PRP$", "WP",    "WP$",   "WDT",  "CC",  "IN",  "MD", "TO",
      "EX"};
  if (kContentTags.contains(tag)) return WordClass::kContent;
  if (kFunctionTags.contains(tag)) return WordClass::kFunction;
  return WordClass::kOther;
}

bool IsSentenceEnd(const Token& t) {
  return t.kind == TokenKind::kPunctuation &&
         (t.surface == "." || t.surface == "!" || t.surface == "?");
}

}  // namespace

const WordClassLexicon& WordClassLexicon::Default() {
  static const WordClassLexicon lexicon = [] {
    WordClassLexicon l;
    for (const char* w : kFunctionWords) l.function_.insert(w);
    for (const char* w : kVerbs) l.verbs_.insert(w);
    return l;
  }();
  return lexicon;
}

WordClassLexicon WordClassLexicon::Parse(std::string_view text) {
  WordClassLexicon l;
  std::size_t line_no = 0;
  for (const std::string& line : SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty() || line.front() == '#') continue;
    const std::vector<std::string> cells = SplitString(line, '\t');
    if (cells.size() != 2 || (cells[0] != "function" && cells[0] != "verb")) {
      throw ParseError("word class lexicon line " + std::to_string(line_no) +
                       ": expected function|verb<TAB>word");
    }
    (cells[0] == "function" ? l.function_ : l.verbs_)
        .insert(CaseFold(Trim(cells[1])));
  }
  return l;
}

WordClassLexicon WordClassLexicon::FromFile(const std::string& path) {
  return Parse(ReadFile(path));
}

bool WordClassLexicon::IsFunctionWord(std::string_view word) const {
  return function_.contains(CaseFold(word));
}

bool WordClassLexicon::IsVerb(std::string_view word) const {
  return verbs_.contains(CaseFold(word));
}

std::vector<WordClass> TagWordClasses(const std::vector<Token>& tokens,
                                      const WordClassLexicon& lexicon,
                                      const std::vector<TokenAnnotation>* pos) {
  std::vector<WordClass> classes(tokens.size(), WordClass::kOther);
  if (pos != nullptr) {
    for (const TokenAnnotation& a : *pos) {
      if (a.token_index < tokens.size()) {
        classes[a.token_index] = ClassOfPosTag(a.label);
      }
    }
    return classes;
  }
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].kind != TokenKind::kWord) continue;
    if (lexicon.IsFunctionWord(tokens[i].surface)) {
      classes[i] = WordClass::kFunction;
    } else if (!lexicon.IsVerb(tokens[i].surface)) {
      classes[i] = WordClass::kContent;
    }
  }
  return classes;
}

std::vector<EntitySpan> DetectEntities(const std::vector<Token>& tokens,
                                       const WordClassLexicon& lexicon,
                                       const std::vector<TokenAnnotation>* ne) {
  std::vector<EntitySpan> spans;
  if (ne != nullptr) {
    std::map<std::size_t, const TokenAnnotation*> by_index;
    for (const TokenAnnotation& a : *ne) {
      if (a.token_index < tokens.size()) by_index[a.token_index] = &a;
    }
    for (const auto& [index, annotation] : by_index) {
      char prefix = 0;
      const std::string type = StripBio(annotation->label, &prefix);
      if (type == "O" || type.empty()) continue;
      const bool continues = prefix != 'B' && !spans.empty() &&
                             spans.back().last == index &&
                             spans.back().type == type;
      if (continues) {
        spans.back().last = index + 1;
      } else {
        spans.push_back({index, index + 1, type});
      }
    }
    return spans;
  }

  bool sentence_start = true;
  bool in_run = false;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    bool entity = false;
    if (t.kind == TokenKind::kWord) {
      const CasePattern pattern = DetectCasePattern(t.surface);
      if (pattern == CasePattern::kUpper) {
        entity = true;  // acronym
      } else if (pattern == CasePattern::kTitle && !sentence_start &&
                 !lexicon.IsFunctionWord(t.surface)) {
        entity = true;
      }
      sentence_start = false;
    } else if (t.kind == TokenKind::kNumber) {
      sentence_start = false;
    }
    if (entity) {
      if (in_run) {
        spans.back().last = i + 1;
      } else {
        spans.push_back({i, i + 1, "ENT"});
      }
    }
    in_run = entity;
    if (IsSentenceEnd(t)) sentence_start = true;
  }
  return spans;
}

}  // namespace qanoise
