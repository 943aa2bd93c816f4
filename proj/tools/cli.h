// Copyright 2026 The qwalk Authors
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

#ifndef QWALK_TOOLS_CLI_H_
#define QWALK_TOOLS_CLI_H_

#include <iosfwd>

namespace qwalk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitConfig = 2;

// Entry point of the `qwalk` tool. Diagnostics go to `err`, summaries to
// `out`.
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qwalk::cli

#endif  // QWALK_TOOLS_CLI_H_
