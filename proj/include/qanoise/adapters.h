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


#ifndef QANOISE_ADAPTERS_H_
#define QANOISE_ADAPTERS_H_

#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qanoise/errors.h"

namespace qanoise {

// External engines (MT, TTS, ASR, spellcheck) behind one call contract.
// Engines must tolerate concurrent calls.

enum class EngineOp { kTranslate, kTts, kAsr, kSpellcheck };

std::string_view EngineOpName(EngineOp op);

struct EngineRequest {
  EngineOp op = EngineOp::kTranslate;
  std::string payload;  // text, or an audio path for kAsr
  std::string src_lang;
  std::string tgt_lang;
  std::string qid;      // optional; lets scripted engines key on it
};

struct EngineResponse {
  std::string payload;  // text, or an audio path for kTts
  std::chrono::milliseconds latency{0};
  std::string engine_id;
};

enum class AdapterErrorKind {
  kTransport,
  kUnsupportedPair,
  kRateLimit,
  kTimeout,
  kUnscripted,
  kMissingAudio,
  kBadResponse,
};

std::string_view AdapterErrorKindName(AdapterErrorKind kind);

class AdapterError : public Error {
 public:
  AdapterError(AdapterErrorKind kind, const std::string& message)
      : Error(message), kind_(kind) {}
  AdapterErrorKind kind() const { return kind_; }
  // Transport failures, rate limits and timeouts may succeed on retry.
  bool retryable() const;

 private:
  AdapterErrorKind kind_;
};

// Content key of a request: hash over op, languages and payload.
std::string RequestHash(const EngineRequest& request);

// Throws ConfigError unless `code` looks like a BCP-47 tag (en, de, en-US).
void CheckLanguageTag(std::string_view code);

class Engine {
 public:
  virtual ~Engine() = default;
  virtual std::string id() const = 0;
  virtual EngineResponse Call(const EngineRequest& request) = 0;
};

// Returns text unchanged. TTS stores the text as mock audio (a file under
// `audio_dir`, or in a process-wide memory store when empty) and ASR reads
// it back, optionally lowercased.
class IdentityEngine : public Engine {
 public:
  struct Options {
    std::string id = "identity";
    bool lowercase_asr = false;
    std::string audio_dir;
  };
  IdentityEngine() : IdentityEngine(Options{}) {}
  explicit IdentityEngine(Options options);

  std::string id() const override { return options_.id; }
  EngineResponse Call(const EngineRequest& request) override;

 private:
  Options options_;
};

// Replays outputs from a `key<TAB>output` script. Keys are tried in order:
// "<qid>@<target language>" (or "<qid>@<op>" for tts/asr/spellcheck),
// "<qid>", "#<request hash>", then the payload
// verbatim. A miss raises kUnscripted. When `pairs` is non-empty, translate
// requests for other "src-tgt" pairs raise kUnsupportedPair. TTS outputs are
// treated as audio paths; ASR requests are keyed the same way as text.
class ScriptedEngine : public Engine {
 public:
  ScriptedEngine(std::string id, std::map<std::string, std::string> script,
                 std::set<std::string> pairs = {});
  static ScriptedEngine FromFile(std::string id, const std::string& path,
                                 std::set<std::string> pairs = {});
  static std::map<std::string, std::string> ParseScript(std::string_view text);

  std::string id() const override { return id_; }
  EngineResponse Call(const EngineRequest& request) override;
  std::size_t size() const { return script_.size(); }

 private:
  std::string id_;
  std::map<std::string, std::string> script_;
  std::set<std::string> pairs_;
};

// Declarative HTTP engine. See README for the config schema.
struct HttpEngineConfig {
  std::string id = "http";
  std::string url;  // scheme://host[:port]/path
  std::string method = "POST";
  std::map<std::string, std::string> headers;
  std::string credentials_env;  // value sent in credentials_header
  std::string credentials_header = "Authorization";
  std::string credentials_prefix = "Bearer ";
  // Placeholders: {{text}}, {{src}}, {{tgt}}, {{audio_base64}}; values are
  // JSON-escaped when content_type is JSON.
  std::string body_template;
  std::string content_type = "application/json";
  // Dotted path into the JSON response ("data.translations.0.text").
  std::string response_field;
  // For TTS: the response field holds base64 audio written under audio_dir.
  std::string audio_dir;
  std::set<std::string> pairs;
  int timeout_ms = 30000;
  int max_parallel = 4;

  static HttpEngineConfig FromJson(const nlohmann::json& json);
};

class HttpEngine : public Engine {
 public:
  explicit HttpEngine(HttpEngineConfig config);
  ~HttpEngine() override;

  std::string id() const override { return config_.id; }
  EngineResponse Call(const EngineRequest& request) override;

  // Builds the request body for `request` (exposed for tests).
  std::string RenderBody(const EngineRequest& request) const;
  // Extracts the configured field from a response body.
  std::string ExtractField(std::string_view body) const;

 private:
  struct Slots;
  HttpEngineConfig config_;
  std::unique_ptr<Slots> slots_;
};

// Builds an engine from an adapter config file (JSON). `engine` selects
// "identity", "scripted" or "http"; relative script paths resolve against
// the config file's directory.
std::unique_ptr<Engine> LoadEngine(const std::string& config_path);
std::unique_ptr<Engine> MakeEngine(const nlohmann::json& config,
                                   const std::string& base_dir);

// ---- Audit and retry ---------------------------------------------------------

struct AuditEntry {
  std::string qid;
  std::size_t step = 0;     // call index within the record's pipeline
  std::size_t attempt = 1;
  std::string engine_id;
  EngineOp op = EngineOp::kTranslate;
  std::string request_hash;
  std::string outcome;      // "ok" or an error kind name
};

class AuditLog {
 public:
  void Record(AuditEntry entry);
  // Entries ordered by (qid, step, attempt), independent of thread timing.
  std::vector<AuditEntry> Entries() const;
  std::string Format() const;

 private:
  mutable std::mutex mu_;
  std::vector<AuditEntry> entries_;
};

struct RetryPolicy {
  int max_attempts = 3;
  std::chrono::milliseconds initial_backoff{200};
  double multiplier = 2.0;
  // Replaceable for tests.
  std::function<void(std::chrono::milliseconds)> sleep;
};

// Per-record call state: qid, audit sink and step counter.
struct CallContext {
  std::string qid;
  std::string record;  // audit key when it differs from qid
  AuditLog* audit = nullptr;
  RetryPolicy retry;
  std::size_t next_step = 0;
};

// Calls the engine, retrying retryable failures with exponential backoff.
// Every attempt is audited. The last error propagates.
EngineResponse CallEngine(Engine& engine, EngineRequest request,
                          CallContext& context);

// Engine output verbatim.
std::string Translate(std::string_view text, std::string_view src_lang,
                      std::string_view tgt_lang, Engine& engine,
                      CallContext& context);
// en -> pivot -> en, both hops audited.
std::string BackTranslate(std::string_view text, std::string_view pivot_lang,
                          Engine& engine, CallContext& context,
                          std::string_view source_lang = "en");

struct SpokenTranscript {
  std::string transcript;
  std::string audio_path;
};

SpokenTranscript TtsThenAsr(std::string_view text, Engine& tts, Engine& asr,
                            CallContext& context);

struct SpellcheckOutcome {
  std::string text;
  bool failed = false;
  std::string warning;
};

// The checker's output, or the input unchanged with a warning when the
// checker fails.
SpellcheckOutcome SpellcheckRepair(std::string_view question, Engine& checker,
                                   CallContext& context);

}  // namespace qanoise

#endif  // QANOISE_ADAPTERS_H_
