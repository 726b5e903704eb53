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


#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "qanoise/adapters.h"

#include <openssl/evp.h>

#include <algorithm>
#include <filesystem>
#include <regex>
#include <semaphore>
#include <thread>
#include <tuple>

#include "httplib.h"
#include "qanoise/textcore.h"
#include "qanoise/util.h"

namespace qanoise {
namespace {

using Clock = std::chrono::steady_clock;

std::chrono::milliseconds Since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start);
}

std::string PairKey(std::string_view src, std::string_view tgt) {
  return std::string(src) + "-" + std::string(tgt);
}

void CheckPair(const std::set<std::string>& pairs, const EngineRequest& r,
               const std::string& engine_id) {
  if (r.op != EngineOp::kTranslate || pairs.empty()) return;
  if (!pairs.contains(PairKey(r.src_lang, r.tgt_lang))) {
    throw AdapterError(AdapterErrorKind::kUnsupportedPair,
                       engine_id + ": unsupported language pair " +
                           PairKey(r.src_lang, r.tgt_lang));
  }
}

std::string Base64Encode(std::string_view bytes) {
  std::string out(4 * ((bytes.size() + 2) / 3) + 1, '\0');
  const int n = EVP_EncodeBlock(
      reinterpret_cast<unsigned char*>(out.data()),
      reinterpret_cast<const unsigned char*>(bytes.data()),
      static_cast<int>(bytes.size()));
  out.resize(static_cast<std::size_t>(n));
  return out;
}

std::string Base64Decode(std::string_view text) {
  std::string clean;
  for (char c : text) {
    if (c != '\n' && c != '\r' && c != ' ') clean += c;
  }
  if (clean.size() % 4 != 0) {
    throw AdapterError(AdapterErrorKind::kBadResponse, "malformed base64 audio");
  }
  std::string out(clean.size() / 4 * 3 + 1, '\0');
  const int n = EVP_DecodeBlock(
      reinterpret_cast<unsigned char*>(out.data()),
      reinterpret_cast<const unsigned char*>(clean.data()),
      static_cast<int>(clean.size()));
  if (n < 0) {
    throw AdapterError(AdapterErrorKind::kBadResponse, "malformed base64 audio");
  }
  std::size_t size = static_cast<std::size_t>(n);
  // EVP_DecodeBlock counts padding bytes as output.
  if (!clean.empty() && clean.back() == '=') --size;
  if (clean.size() > 1 && clean[clean.size() - 2] == '=') --size;
  out.resize(size);
  return out;
}

std::string ReplaceAll(std::string text, std::string_view from,
                       std::string_view to) {
  std::size_t pos = 0;
  while ((pos = text.find(from, pos)) != std::string::npos) {
    text.replace(pos, from.size(), to);
    pos += to.size();
  }
  return text;
}

std::string ReadAudio(const std::string& path) {
  if (!std::filesystem::exists(path)) {
    throw AdapterError(AdapterErrorKind::kMissingAudio,
                       "audio file not found: " + path);
  }
  return ReadFile(path);
}

std::string WriteAudio(const std::string& dir, const std::string& key,
                       std::string_view bytes, std::string_view extension) {
  std::filesystem::create_directories(dir);
  const std::string path =
      (std::filesystem::path(dir) / (key + std::string(extension))).string();
  WriteFile(path, bytes);
  return path;
}

}  // namespace

std::string_view EngineOpName(EngineOp op) {
  switch (op) {
    case EngineOp::kTranslate: return "translate";
    case EngineOp::kTts: return "tts";
    case EngineOp::kAsr: return "asr";
    case EngineOp::kSpellcheck: return "spellcheck";
  }
  return "translate";
}

std::string_view AdapterErrorKindName(AdapterErrorKind kind) {
  switch (kind) {
    case AdapterErrorKind::kTransport: return "transport";
    case AdapterErrorKind::kUnsupportedPair: return "unsupported_pair";
    case AdapterErrorKind::kRateLimit: return "rate_limit";
    case AdapterErrorKind::kTimeout: return "timeout";
    case AdapterErrorKind::kUnscripted: return "unscripted";
    case AdapterErrorKind::kMissingAudio: return "missing_audio";
    case AdapterErrorKind::kBadResponse: return "bad_response";
  }
  return "transport";
}

bool AdapterError::retryable() const {
  return kind_ == AdapterErrorKind::kTransport ||
         kind_ == AdapterErrorKind::kRateLimit ||
         kind_ == AdapterErrorKind::kTimeout;
}

std::string RequestHash(const EngineRequest& request) {
  std::string key(EngineOpName(request.op));
  key += '\x1f';
  key += request.src_lang;
  key += '\x1f';
  key += request.tgt_lang;
  key += '\x1f';
  key += request.payload;
  return HexDigest(Fnv1a64(key));
}

void CheckLanguageTag(std::string_view code) {
  static const std::regex kTag("^[A-Za-z]{2,3}(-[A-Za-z0-9]{2,8})*$");
  if (!std::regex_match(code.begin(), code.end(), kTag)) {
    throw ConfigError("invalid language tag '" + std::string(code) + "'");
  }
}

// ---- IdentityEngine ------------------------------------------------------------

namespace {

// In-process audio shared by all identity engines, so one instance can
// read back what another synthesized.
struct MemoryAudio {
  std::mutex mu;
  std::map<std::string, std::string> clips;
};

MemoryAudio& SharedMemoryAudio() {
  static MemoryAudio store;
  return store;
}

}  // namespace

IdentityEngine::IdentityEngine(Options options) : options_(std::move(options)) {}

EngineResponse IdentityEngine::Call(const EngineRequest& request) {
  const auto start = Clock::now();
  EngineResponse response;
  response.engine_id = options_.id;
  switch (request.op) {
    case EngineOp::kTranslate:
    case EngineOp::kSpellcheck:
      response.payload = request.payload;
      break;
    case EngineOp::kTts: {
      const std::string key = RequestHash(request);
      if (options_.audio_dir.empty()) {
        MemoryAudio& store = SharedMemoryAudio();
        std::lock_guard lock(store.mu);
        response.payload = "mem:" + key;
        store.clips[response.payload] = request.payload;
      } else {
        response.payload =
            WriteAudio(options_.audio_dir, key, request.payload, ".txt");
      }
      break;
    }
    case EngineOp::kAsr: {
      std::string text;
      if (request.payload.starts_with("mem:")) {
        MemoryAudio& store = SharedMemoryAudio();
        std::lock_guard lock(store.mu);
        const auto it = store.clips.find(request.payload);
        if (it == store.clips.end()) {
          throw AdapterError(AdapterErrorKind::kMissingAudio,
                             "audio not found: " + request.payload);
        }
        text = it->second;
      } else {
        text = ReadAudio(request.payload);
      }
      response.payload = options_.lowercase_asr ? CaseFold(text) : text;
      break;
    }
  }
  response.latency = Since(start);
  return response;
}

// ---- ScriptedEngine --------------------------------------------------------------

ScriptedEngine::ScriptedEngine(std::string id,
                               std::map<std::string, std::string> script,
                               std::set<std::string> pairs)
    : id_(std::move(id)), script_(std::move(script)), pairs_(std::move(pairs)) {}

ScriptedEngine ScriptedEngine::FromFile(std::string id, const std::string& path,
                                        std::set<std::string> pairs) {
  return ScriptedEngine(std::move(id), ParseScript(ReadFile(path)),
                        std::move(pairs));
}

std::map<std::string, std::string> ScriptedEngine::ParseScript(
    std::string_view text) {
  std::map<std::string, std::string> script;
  std::size_t line_no = 0;
  for (const std::string& line : SplitLines(text)) {
    ++line_no;
    const std::size_t tab = line.find('\t');
    // "#<hash>" keys share the comment prefix; comments have no tab.
    if (line.empty() || (line.front() == '#' && tab == std::string::npos)) {
      continue;
    }
    if (tab == std::string::npos) {
      throw ParseError("script line " + std::to_string(line_no) +
                       ": expected key<TAB>output");
    }
    script.emplace(UnescapeTsv(line.substr(0, tab)),
                   UnescapeTsv(line.substr(tab + 1)));
  }
  return script;
}

EngineResponse ScriptedEngine::Call(const EngineRequest& request) {
  const auto start = Clock::now();
  CheckPair(pairs_, request, id_);
  std::vector<std::string> keys;
  if (!request.qid.empty()) {
    keys.push_back(request.qid + "@" +
                   (request.tgt_lang.empty() ? std::string(EngineOpName(request.op))
                                             : request.tgt_lang));
    keys.push_back(request.qid);
  }
  keys.push_back("#" + RequestHash(request));
  keys.push_back(request.payload);
  for (const std::string& key : keys) {
    const auto it = script_.find(key);
    if (it != script_.end()) {
      return {it->second, Since(start), id_};
    }
  }
  throw AdapterError(AdapterErrorKind::kUnscripted,
                     id_ + ": unscripted input for " +
                         std::string(EngineOpName(request.op)) +
                         (request.qid.empty() ? "" : " (qid " + request.qid + ")"));
}

// ---- HttpEngine --------------------------------------------------------------------

struct HttpEngine::Slots {
  explicit Slots(int n) : semaphore(n) {}
  std::counting_semaphore<1024> semaphore;
};

HttpEngineConfig HttpEngineConfig::FromJson(const nlohmann::json& json) {
  HttpEngineConfig c;
  c.id = json.value("id", c.id);
  c.url = json.value("url", "");
  if (c.url.empty()) throw ConfigError("http engine needs a url");
  c.method = json.value("method", c.method);
  if (json.contains("headers")) {
    for (const auto& [k, v] : json.at("headers").items()) {
      c.headers[k] = v.get<std::string>();
    }
  }
  c.credentials_env = json.value("credentials_env", "");
  c.credentials_header = json.value("credentials_header", c.credentials_header);
  c.credentials_prefix = json.value("credentials_prefix", c.credentials_prefix);
  c.body_template = json.value("body_template", "");
  c.content_type = json.value("content_type", c.content_type);
  c.response_field = json.value("response_field", "");
  c.audio_dir = json.value("audio_dir", "");
  if (json.contains("pairs")) {
    for (const auto& p : json.at("pairs")) c.pairs.insert(p.get<std::string>());
  }
  c.timeout_ms = json.value("timeout_ms", c.timeout_ms);
  c.max_parallel = json.value("max_parallel", c.max_parallel);
  if (c.max_parallel < 1 || c.max_parallel > 1024) {
    throw ConfigError("max_parallel must lie in [1, 1024]");
  }
  if (c.method != "POST" && c.method != "GET") {
    throw ConfigError("http engine method must be POST or GET");
  }
  return c;
}

HttpEngine::HttpEngine(HttpEngineConfig config)
    : config_(std::move(config)),
      slots_(std::make_unique<Slots>(config_.max_parallel)) {}

HttpEngine::~HttpEngine() = default;

std::string HttpEngine::RenderBody(const EngineRequest& request) const {
  const bool json = config_.content_type.find("json") != std::string::npos;
  const auto escape = [json](const std::string& value) {
    if (!json) return value;
    const std::string quoted = nlohmann::json(value).dump();
    return quoted.substr(1, quoted.size() - 2);
  };
  std::string body = config_.body_template;
  if (request.op == EngineOp::kAsr) {
    body = ReplaceAll(body, "{{audio_base64}}",
                      Base64Encode(ReadAudio(request.payload)));
  } else {
    body = ReplaceAll(body, "{{text}}", escape(request.payload));
  }
  body = ReplaceAll(body, "{{src}}", escape(request.src_lang));
  body = ReplaceAll(body, "{{tgt}}", escape(request.tgt_lang));
  return body;
}

std::string HttpEngine::ExtractField(std::string_view body) const {
  const nlohmann::json doc = nlohmann::json::parse(body, nullptr, false);
  if (doc.is_discarded()) {
    throw AdapterError(AdapterErrorKind::kBadResponse,
                       config_.id + ": response is not JSON");
  }
  const nlohmann::json* node = &doc;
  for (const std::string& part : SplitString(config_.response_field, '.')) {
    if (part.empty()) continue;
    if (node->is_array()) {
      const bool numeric = std::all_of(part.begin(), part.end(),
                                       [](char c) { return c >= '0' && c <= '9'; });
      const std::size_t index = numeric ? std::stoul(part) : node->size();
      if (index >= node->size()) node = nullptr;
      else node = &(*node)[index];
    } else if (node->is_object() && node->contains(part)) {
      node = &node->at(part);
    } else {
      node = nullptr;
    }
    if (node == nullptr) {
      throw AdapterError(AdapterErrorKind::kBadResponse,
                         config_.id + ": response lacks field '" +
                             config_.response_field + "'");
    }
  }
  if (!node->is_string()) {
    throw AdapterError(AdapterErrorKind::kBadResponse,
                       config_.id + ": response field is not a string");
  }
  return node->get<std::string>();
}

EngineResponse HttpEngine::Call(const EngineRequest& request) {
  CheckPair(config_.pairs, request, config_.id);
  static const std::regex kUrl("^(https?://[^/]+)(/.*)?$");
  std::smatch match;
  if (!std::regex_match(config_.url, match, kUrl)) {
    throw ConfigError(config_.id + ": malformed url '" + config_.url + "'");
  }
  const std::string origin = match[1];
  const std::string path = match[2].matched ? std::string(match[2]) : "/";
  const std::string body = RenderBody(request);

  httplib::Headers headers;
  for (const auto& [k, v] : config_.headers) headers.emplace(k, v);
  if (!config_.credentials_env.empty()) {
    const char* secret = std::getenv(config_.credentials_env.c_str());
    if (secret == nullptr) {
      throw ConfigError(config_.id + ": environment variable " +
                        config_.credentials_env + " is not set");
    }
    headers.emplace(config_.credentials_header,
                    config_.credentials_prefix + secret);
  }

  slots_->semaphore.acquire();
  const auto start = Clock::now();
  httplib::Result result;
  {
    httplib::Client client(origin);
    const auto timeout = std::chrono::milliseconds(config_.timeout_ms);
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);
    result = config_.method == "GET"
                 ? client.Get(path, headers)
                 : client.Post(path, headers, body, config_.content_type);
  }
  slots_->semaphore.release();

  if (!result) {
    const httplib::Error err = result.error();
    const AdapterErrorKind kind = err == httplib::Error::ConnectionTimeout ||
                                          err == httplib::Error::Read
                                      ? AdapterErrorKind::kTimeout
                                      : AdapterErrorKind::kTransport;
    throw AdapterError(kind, config_.id + ": " + httplib::to_string(err));
  }
  if (result->status == 429) {
    throw AdapterError(AdapterErrorKind::kRateLimit, config_.id + ": HTTP 429");
  }
  if (result->status < 200 || result->status >= 300) {
    throw AdapterError(AdapterErrorKind::kTransport,
                       config_.id + ": HTTP " + std::to_string(result->status));
  }
  EngineResponse response;
  response.engine_id = config_.id;
  std::string payload = ExtractField(result->body);
  if (request.op == EngineOp::kTts) {
    if (config_.audio_dir.empty()) {
      throw ConfigError(config_.id + ": TTS needs audio_dir");
    }
    payload = WriteAudio(config_.audio_dir, RequestHash(request),
                         Base64Decode(payload), ".audio");
  }
  response.payload = std::move(payload);
  response.latency = Since(start);
  return response;
}

// ---- Engine factory ------------------------------------------------------------------

std::unique_ptr<Engine> MakeEngine(const nlohmann::json& config,
                                   const std::string& base_dir) {
  if (!config.is_object() || !config.contains("engine")) {
    throw ConfigError("adapter config needs an \"engine\" field");
  }
  const std::string kind = config.at("engine").get<std::string>();
  const auto resolve = [&base_dir](const std::string& p) {
    const std::filesystem::path path(p);
    return path.is_absolute() || base_dir.empty()
               ? path.string()
               : (std::filesystem::path(base_dir) / path).string();
  };
  std::set<std::string> pairs;
  if (config.contains("pairs")) {
    for (const auto& p : config.at("pairs")) pairs.insert(p.get<std::string>());
  }
  if (kind == "identity") {
    IdentityEngine::Options options;
    options.id = config.value("id", options.id);
    options.lowercase_asr = config.value("lowercase", false);
    const std::string dir = config.value("audio_dir", "");
    options.audio_dir = dir.empty() ? dir : resolve(dir);
    return std::make_unique<IdentityEngine>(std::move(options));
  }
  if (kind == "scripted") {
    const std::string script = config.value("script", "");
    if (script.empty()) throw ConfigError("scripted engine needs a script path");
    return std::make_unique<ScriptedEngine>(ScriptedEngine::FromFile(
        config.value("id", "scripted"), resolve(script), std::move(pairs)));
  }
  if (kind == "http") {
    HttpEngineConfig http = HttpEngineConfig::FromJson(config);
    if (!http.audio_dir.empty()) http.audio_dir = resolve(http.audio_dir);
    return std::make_unique<HttpEngine>(std::move(http));
  }
  throw ConfigError("unknown engine kind '" + kind +
                    "' (expected identity, scripted or http)");
}

std::unique_ptr<Engine> LoadEngine(const std::string& config_path) {
  const nlohmann::json config =
      nlohmann::json::parse(ReadFile(config_path), nullptr, false);
  if (config.is_discarded()) {
    throw ConfigError("adapter config " + config_path + " is not valid JSON");
  }
  return MakeEngine(config,
                    std::filesystem::path(config_path).parent_path().string());
}

// ---- Audit and retry ------------------------------------------------------------------

void AuditLog::Record(AuditEntry entry) {
  std::lock_guard lock(mu_);
  entries_.push_back(std::move(entry));
}

std::vector<AuditEntry> AuditLog::Entries() const {
  std::vector<AuditEntry> sorted;
  {
    std::lock_guard lock(mu_);
    sorted = entries_;
  }
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const AuditEntry& a, const AuditEntry& b) {
                     return std::tie(a.qid, a.step, a.attempt) <
                            std::tie(b.qid, b.step, b.attempt);
                   });
  return sorted;
}

std::string AuditLog::Format() const {
  std::string out = "qid\tstep\tattempt\tengine\top\trequest_hash\toutcome\n";
  for (const AuditEntry& e : Entries()) {
    out += EscapeTsv(e.qid) + "\t" + std::to_string(e.step) + "\t" +
           std::to_string(e.attempt) + "\t" + EscapeTsv(e.engine_id) + "\t" +
           std::string(EngineOpName(e.op)) + "\t" + e.request_hash + "\t" +
           e.outcome + "\n";
  }
  return out;
}

EngineResponse CallEngine(Engine& engine, EngineRequest request,
                          CallContext& context) {
  request.qid = context.qid;
  const std::size_t step = context.next_step++;
  const std::string hash = RequestHash(request);
  auto backoff = context.retry.initial_backoff;
  const int attempts = std::max(1, context.retry.max_attempts);
  for (int attempt = 1;; ++attempt) {
    AuditEntry entry{context.record.empty() ? context.qid : context.record, step, static_cast<std::size_t>(attempt),
                     engine.id(), request.op, hash, "ok"};
    try {
      EngineResponse response = engine.Call(request);
      if (context.audit) context.audit->Record(std::move(entry));
      return response;
    } catch (const AdapterError& e) {
      entry.outcome = AdapterErrorKindName(e.kind());
      if (context.audit) context.audit->Record(std::move(entry));
      if (!e.retryable() || attempt >= attempts) throw;
    }
    if (context.retry.sleep) {
      context.retry.sleep(backoff);
    } else {
      std::this_thread::sleep_for(backoff);
    }
    backoff = std::chrono::milliseconds(static_cast<long long>(
        static_cast<double>(backoff.count()) * context.retry.multiplier));
  }
}

std::string Translate(std::string_view text, std::string_view src_lang,
                      std::string_view tgt_lang, Engine& engine,
                      CallContext& context) {
  CheckLanguageTag(src_lang);
  CheckLanguageTag(tgt_lang);
  EngineRequest request;
  request.op = EngineOp::kTranslate;
  request.payload = std::string(text);
  request.src_lang = std::string(src_lang);
  request.tgt_lang = std::string(tgt_lang);
  return CallEngine(engine, std::move(request), context).payload;
}

std::string BackTranslate(std::string_view text, std::string_view pivot_lang,
                          Engine& engine, CallContext& context,
                          std::string_view source_lang) {
  const std::string pivot =
      Translate(text, source_lang, pivot_lang, engine, context);
  return Translate(pivot, pivot_lang, source_lang, engine, context);
}

SpokenTranscript TtsThenAsr(std::string_view text, Engine& tts, Engine& asr,
                            CallContext& context) {
  EngineRequest speak;
  speak.op = EngineOp::kTts;
  speak.payload = std::string(text);
  SpokenTranscript out;
  out.audio_path = CallEngine(tts, std::move(speak), context).payload;
  EngineRequest listen;
  listen.op = EngineOp::kAsr;
  listen.payload = out.audio_path;
  out.transcript = CallEngine(asr, std::move(listen), context).payload;
  return out;
}

SpellcheckOutcome SpellcheckRepair(std::string_view question, Engine& checker,
                                   CallContext& context) {
  EngineRequest request;
  request.op = EngineOp::kSpellcheck;
  request.payload = std::string(question);
  try {
    return {CallEngine(checker, std::move(request), context).payload, false, {}};
  } catch (const AdapterError& e) {
    return {std::string(question), true,
            "spellcheck failed for " + context.qid + ": " + e.what()};
  }
}

}  // namespace qanoise
