// Copyright 2026 The memchan Authors
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

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

namespace memchan::cli {

inline constexpr std::string_view kVersion = MEMCHAN_VERSION;

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitIo = 3,
};

/// Runs the command line `args` (program name excluded). Regular output goes
/// to `out`, diagnostics to `err`; the return value is the process exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace memchan::cli
