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


#ifndef QANOISE_CLI_H_
#define QANOISE_CLI_H_

#include <iosfwd>

namespace qanoise {

// Entry point of the `qanoise` command-line tool. Returns the process exit
// code: 0 on success, 1 for data errors, 2 for usage and configuration
// errors.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace qanoise

#endif  // QANOISE_CLI_H_
