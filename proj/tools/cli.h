// Copyright 2026 The beliefmix Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: subcommands tssr, exploit, heatmap, match and
// policy, configured by a "key = value" file plus per-key flag overrides.
//
// Exit status: 0 on success, 2 on an invalid configuration or command line,
// 3 when a policy does not stabilize, 1 on any other failure.

#ifndef BELIEFMIX_TOOLS_CLI_H_
#define BELIEFMIX_TOOLS_CLI_H_

#include <string>
#include <string_view>

namespace beliefmix::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNoConvergence = 3;

// Default output directory when no output path is configured; relative
// output paths are resolved against it as well.
inline constexpr const char* kOutputDirEnv = "BELIEFMIX_OUTPUT_DIR";

// SHA-1 of "blob <size>\0<content>", as printed by `git hash-object`.
std::string GitBlobSha1(std::string_view content);

int Run(int argc, const char* const* argv);

}  // namespace beliefmix::cli

#endif  // BELIEFMIX_TOOLS_CLI_H_
