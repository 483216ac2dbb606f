// Copyright 2026 The corrdetect Authors.
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

#ifndef CORRDETECT_TOOLS_CLI_H_
#define CORRDETECT_TOOLS_CLI_H_

#include <iosfwd>

namespace corrdetect::cli {

// Runs `corrdetect <subcommand> ...`. Returns the process exit code: 0 on
// success, 2 on parameter or parse errors, 3 on capacity errors, 1 otherwise.
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace corrdetect::cli

#endif  // CORRDETECT_TOOLS_CLI_H_
