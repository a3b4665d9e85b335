// Copyright 2026 The mcnli Authors.
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

// The `mcnli` command line.
//
// Exit codes: 0 success, 1 usage error, 2 data or validation error,
// 3 converter backend failure.

#ifndef MCNLI_CLI_H_
#define MCNLI_CLI_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mcnli {

inline constexpr std::string_view kToolVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitBackend = 3;

// `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcnli

#endif  // MCNLI_CLI_H_
