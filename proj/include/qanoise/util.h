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


#ifndef QANOISE_UTIL_H_
#define QANOISE_UTIL_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace qanoise {

inline constexpr std::string_view kToolVersion = "0.3.0";

// 64-bit FNV-1a. Stable across platforms, used for content keys and
// per-record seed derivation.
std::uint64_t Fnv1a64(std::string_view bytes);
std::string HexDigest(std::uint64_t value);

// splitmix64 finalizer over (seed, salt).
std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t salt);

// Seed for one record: independent of batch order and thread schedule.
inline std::uint64_t RecordSeed(std::uint64_t global_seed,
                                std::string_view qid) {
  return MixSeed(global_seed, Fnv1a64(qid));
}

// Thin wrapper over mt19937_64 with portable sampling helpers. The standard
// distributions are implementation-defined, so they are avoided to keep
// outputs identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53 bits of precision.
  double Uniform();
  // Uniform integer in [0, n). n must be positive.
  std::size_t Index(std::size_t n);
  bool Bernoulli(double p) { return p >= 1.0 || (p > 0.0 && Uniform() < p); }

 private:
  std::mt19937_64 engine_;
};

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

// Splits on '\n', dropping a trailing '\r' from each line.
std::vector<std::string> SplitLines(std::string_view text);
std::vector<std::string> SplitString(std::string_view text, char sep);
std::string_view Trim(std::string_view text);

// Escapes '\\', '\t', '\n' and '\r' so a value fits in one TSV cell.
std::string EscapeTsv(std::string_view value);
std::string UnescapeTsv(std::string_view value);

// Runs body(i) for i in [0, n) on up to `jobs` threads. Each index is
// processed exactly once; callers store results by index.
void ParallelFor(std::size_t n, int jobs,
                 const std::function<void(std::size_t)>& body);

}  // namespace qanoise

#endif  // QANOISE_UTIL_H_
