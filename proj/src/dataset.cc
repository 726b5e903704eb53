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


#include "qanoise/dataset.h"

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "qanoise/errors.h"
#include "qanoise/textcore.h"
#include "qanoise/util.h"

namespace qanoise {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const json& Require(const json& node, const char* key, json::value_t type,
                    const std::string& path) {
  if (!node.is_object()) throw ParseError(path + ": expected an object");
  const auto it = node.find(key);
  if (it == node.end()) {
    throw ParseError(path + ": missing field '" + key + "'");
  }
  const bool ok = type == json::value_t::number_unsigned
                      ? it->is_number_integer() && it->get<long long>() >= 0
                      : it->type() == type;
  if (!ok) {
    throw ParseError(path + "." + key + ": unexpected type " +
                     std::string(it->type_name()));
  }
  return *it;
}

std::string JoinIds(const std::vector<std::string>& ids) {
  std::string out;
  const std::size_t shown = std::min<std::size_t>(ids.size(), 20);
  for (std::size_t i = 0; i < shown; ++i) {
    if (i) out += ", ";
    out += ids[i];
  }
  if (ids.size() > shown) {
    out += ", ... (" + std::to_string(ids.size()) + " total)";
  }
  return out;
}

bool AnswerMatches(std::string_view context, const Answer& answer) {
  const std::size_t begin = ByteOffsetOfCodePoint(context, answer.answer_start);
  if (begin == std::string_view::npos) return false;
  return context.substr(begin).starts_with(answer.text) &&
         (begin + answer.text.size() == context.size() ||
          // the span must end on a code point boundary
          (static_cast<unsigned char>(context[begin + answer.text.size()]) &
           0xC0) != 0x80);
}

}  // namespace

Dataset::Dataset(std::vector<ContextParagraph> contexts,
                 std::vector<QuestionRecord> questions)
    : contexts_(std::move(contexts)), questions_(std::move(questions)) {
  for (std::size_t i = 0; i < contexts_.size(); ++i) {
    const ContextParagraph& c = contexts_[i];
    if (c.text.empty()) {
      throw ValidationError("context '" + c.context_id + "' is empty");
    }
    if (!context_index_.emplace(c.context_id, i).second) {
      throw ValidationError("duplicate context id '" + c.context_id + "'");
    }
  }
  std::vector<std::string> duplicates;
  std::vector<std::string> unanswerable;
  std::vector<std::string> bad_spans;
  for (std::size_t i = 0; i < questions_.size(); ++i) {
    const QuestionRecord& q = questions_[i];
    if (!question_index_.emplace(q.qid, i).second) duplicates.push_back(q.qid);
    const auto ctx = context_index_.find(q.context_id);
    if (ctx == context_index_.end()) {
      throw ValidationError("question '" + q.qid + "' references unknown " +
                            "context '" + q.context_id + "'");
    }
    if (q.answers.empty()) {
      unanswerable.push_back(q.qid);
      continue;
    }
    for (const Answer& a : q.answers) {
      if (!AnswerMatches(contexts_[ctx->second].text, a)) {
        bad_spans.push_back(q.qid);
        break;
      }
    }
  }
  if (!duplicates.empty()) {
    throw ValidationError("duplicate qids: " + JoinIds(duplicates));
  }
  if (!unanswerable.empty()) {
    throw ValidationError("questions without answers: " +
                          JoinIds(unanswerable));
  }
  if (!bad_spans.empty()) {
    throw ValidationError("answer spans do not match context for qids: " +
                          JoinIds(bad_spans));
  }
}

const QuestionRecord* Dataset::FindQuestion(std::string_view qid) const {
  const auto it = question_index_.find(std::string(qid));
  return it == question_index_.end() ? nullptr : &questions_[it->second];
}

const ContextParagraph* Dataset::FindContext(
    std::string_view context_id) const {
  const auto it = context_index_.find(std::string(context_id));
  return it == context_index_.end() ? nullptr : &contexts_[it->second];
}

const ContextParagraph& Dataset::ContextOf(const QuestionRecord& record) const {
  return contexts_[context_index_.at(record.context_id)];
}

Dataset ParseSquad(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  std::vector<ContextParagraph> contexts;
  std::vector<QuestionRecord> questions;
  const json& data = Require(root, "data", json::value_t::array, "$");
  for (std::size_t a = 0; a < data.size(); ++a) {
    const std::string apath = "data[" + std::to_string(a) + "]";
    const json& article = data[a];
    if (!article.is_object()) throw ParseError(apath + ": expected an object");
    std::string title;
    if (const auto it = article.find("title");
        it != article.end() && it->is_string()) {
      title = it->get<std::string>();
    }
    const json& paragraphs =
        Require(article, "paragraphs", json::value_t::array, apath);
    for (std::size_t p = 0; p < paragraphs.size(); ++p) {
      const std::string ppath = apath + ".paragraphs[" + std::to_string(p) + "]";
      const json& para = paragraphs[p];
      ContextParagraph ctx;
      ctx.context_id = "a" + std::to_string(a) + "p" + std::to_string(p);
      ctx.text = Require(para, "context", json::value_t::string, ppath)
                     .get<std::string>();
      ctx.article_title = title;
      const json& qas = Require(para, "qas", json::value_t::array, ppath);
      for (std::size_t q = 0; q < qas.size(); ++q) {
        const std::string qpath = ppath + ".qas[" + std::to_string(q) + "]";
        const json& qa = qas[q];
        QuestionRecord rec;
        rec.qid = Require(qa, "id", json::value_t::string, qpath)
                      .get<std::string>();
        rec.question = Require(qa, "question", json::value_t::string, qpath)
                           .get<std::string>();
        rec.context_id = ctx.context_id;
        const json& answers =
            Require(qa, "answers", json::value_t::array, qpath);
        for (std::size_t k = 0; k < answers.size(); ++k) {
          const std::string anpath =
              qpath + ".answers[" + std::to_string(k) + "]";
          Answer ans;
          ans.text = Require(answers[k], "text", json::value_t::string, anpath)
                         .get<std::string>();
          ans.answer_start = Require(answers[k], "answer_start",
                                     json::value_t::number_unsigned, anpath)
                                 .get<std::size_t>();
          rec.answers.push_back(std::move(ans));
        }
        questions.push_back(std::move(rec));
      }
      contexts.push_back(std::move(ctx));
    }
  }
  return Dataset(std::move(contexts), std::move(questions));
}

Dataset LoadSquad(const std::string& path) {
  try {
    return ParseSquad(ReadFile(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::string SerializeSquad(const Dataset& dataset,
                           const ordered_json& metadata) {
  std::unordered_map<std::string, std::vector<const QuestionRecord*>> by_context;
  for (const QuestionRecord& q : dataset.questions()) {
    by_context[q.context_id].push_back(&q);
  }
  ordered_json root = ordered_json::object();
  root["version"] = "1.1";
  ordered_json data = ordered_json::array();
  const std::string* current_title = nullptr;
  for (const ContextParagraph& c : dataset.contexts()) {
    if (current_title == nullptr || *current_title != c.article_title) {
      ordered_json article = ordered_json::object();
      article["title"] = c.article_title;
      article["paragraphs"] = ordered_json::array();
      data.push_back(std::move(article));
      current_title = &c.article_title;
    }
    ordered_json para = ordered_json::object();
    para["context"] = c.text;
    para["qas"] = ordered_json::array();
    for (const QuestionRecord* q : by_context[c.context_id]) {
      ordered_json qa = ordered_json::object();
      qa["id"] = q->qid;
      qa["question"] = q->question;
      qa["answers"] = ordered_json::array();
      for (const Answer& a : q->answers) {
        qa["answers"].push_back({{"text", a.text},
                                 {"answer_start", a.answer_start}});
      }
      para["qas"].push_back(std::move(qa));
    }
    data.back()["paragraphs"].push_back(std::move(para));
  }
  root["data"] = std::move(data);
  if (!metadata.is_null()) root["qanoise"] = metadata;
  return root.dump(-1, ' ', false, ordered_json::error_handler_t::replace) +
         "\n";
}

std::map<std::string, std::string> ParsePredictions(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid predictions JSON: ") + e.what());
  }
  if (!root.is_object()) {
    throw ParseError("predictions: expected a JSON object qid -> answer");
  }
  std::map<std::string, std::string> out;
  for (const auto& [qid, value] : root.items()) {
    if (!value.is_string()) {
      throw ParseError("predictions['" + qid + "']: expected a string");
    }
    out.emplace(qid, value.get<std::string>());
  }
  return out;
}

std::map<std::string, std::string> LoadPredictions(const std::string& path) {
  try {
    return ParsePredictions(ReadFile(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

ChallengeSet PairChallenge(const Dataset& base,
                           const std::map<std::string, std::string>& noisy,
                           Provenance provenance) {
  ChallengeSet set;
  set.provenance = std::move(provenance);
  std::vector<std::string> unknown;
  for (const auto& [qid, text] : noisy) {
    const QuestionRecord* rec = base.FindQuestion(qid);
    if (rec == nullptr) {
      unknown.push_back(qid);
      continue;
    }
    set.pairs.emplace(qid, ChallengePair{rec->question, text});
  }
  if (!unknown.empty()) {
    throw ValidationError("challenge set references qids missing from the "
                          "base dataset: " + JoinIds(unknown));
  }
  return set;
}

std::map<std::string, std::string> ParseChallengeSidecar(
    std::string_view text) {
  std::map<std::string, std::string> out;
  std::size_t line_no = 0;
  for (const std::string& line : SplitLines(text)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw ParseError("challenge sidecar line " + std::to_string(line_no) +
                       ": expected qid<TAB>question");
    }
    std::string qid = UnescapeTsv(std::string_view(line).substr(0, tab));
    if (!out.emplace(qid, UnescapeTsv(std::string_view(line).substr(tab + 1)))
             .second) {
      throw ParseError("challenge sidecar line " + std::to_string(line_no) +
                       ": duplicate qid '" + qid + "'");
    }
  }
  return out;
}

std::string FormatChallengeSidecar(const ChallengeSet& set,
                                   const std::vector<std::string>& header) {
  std::string out;
  for (const std::string& h : header) out += "# " + h + "\n";
  for (const auto& [qid, pair] : set.pairs) {
    out += EscapeTsv(qid) + "\t" + EscapeTsv(pair.noisy) + "\n";
  }
  return out;
}

ordered_json ProvenanceToJson(const Provenance& provenance) {
  ordered_json out = ordered_json::object();
  out["interface"] = provenance.interface_kind;
  out["generator"] = provenance.generator;
  out["parameters"] = provenance.parameters;
  if (provenance.seed) {
    out["seed"] = *provenance.seed;
  } else {
    out["seed"] = nullptr;
  }
  return out;
}

Provenance ProvenanceFromJson(const json& node) {
  Provenance p;
  if (!node.is_object()) throw ParseError("provenance: expected an object");
  p.interface_kind = node.value("interface", std::string());
  p.generator = node.value("generator", std::string());
  if (const auto it = node.find("parameters"); it != node.end()) {
    p.parameters = ordered_json::parse(it->dump());
  }
  if (const auto it = node.find("seed");
      it != node.end() && it->is_number_integer()) {
    p.seed = it->get<std::uint64_t>();
  }
  return p;
}

ChallengeSet LoadChallengeSet(const Dataset& base, const std::string& path) {
  Provenance provenance;
  const std::string meta_path = path + ".meta.json";
  if (std::filesystem::exists(meta_path)) {
    try {
      provenance = ProvenanceFromJson(json::parse(ReadFile(meta_path)));
    } catch (const json::parse_error& e) {
      throw ParseError(meta_path + ": " + e.what());
    }
  }
  std::map<std::string, std::string> noisy;
  try {
    noisy = ParseChallengeSidecar(ReadFile(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
  return PairChallenge(base, noisy, std::move(provenance));
}

AnnotationSidecar AnnotationSidecar::Parse(std::string_view text) {
  AnnotationSidecar sidecar;
  std::size_t line_no = 0;
  for (const std::string& line : SplitLines(text)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const std::vector<std::string> cells = SplitString(line, '\t');
    char* end = nullptr;
    const unsigned long long index =
        cells.size() == 3 ? std::strtoull(cells[1].c_str(), &end, 10) : 0;
    if (cells.size() != 3 || end == cells[1].c_str() || *end != '\0') {
      throw ParseError("annotation sidecar line " + std::to_string(line_no) +
                       ": expected id<TAB>token_index<TAB>label");
    }
    sidecar.Add(cells[0], {static_cast<std::size_t>(index), cells[2]});
  }
  return sidecar;
}

AnnotationSidecar AnnotationSidecar::FromFile(const std::string& path) {
  return Parse(ReadFile(path));
}

void AnnotationSidecar::Add(const std::string& id, TokenAnnotation annotation) {
  entries_[id].push_back(std::move(annotation));
}

const std::vector<TokenAnnotation>* AnnotationSidecar::Find(
    std::string_view id) const {
  const auto it = entries_.find(id);
  return it == entries_.end() ? nullptr : &it->second;
}

void AnnotationSidecar::Validate(std::string_view id,
                                 std::string_view text) const {
  const auto* annotations = Find(id);
  if (annotations == nullptr) return;
  const std::size_t count = Tokenize(text).size();
  for (const TokenAnnotation& a : *annotations) {
    if (a.token_index >= count) {
      throw ValidationError("annotation for '" + std::string(id) +
                            "' references token " +
                            std::to_string(a.token_index) + " of " +
                            std::to_string(count));
    }
  }
}

}  // namespace qanoise
