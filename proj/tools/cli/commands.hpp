// Copyright 2026 The CSM Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>

namespace csm::cli {

/// Process exit codes. Every command returns one of these.
enum ExitCode : int {
    kSuccess = 0,  // success, or the theorem-confirming outcome
    kNegative = 1, // well-formed input with a semantically negative result
    kUsage = 2,    // malformed input, usage error, failed precondition
};

/// Entry point shared by the executable and the in-process tests.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace csm::cli
