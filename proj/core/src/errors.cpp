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

#include "memchan/errors.hpp"

namespace memchan {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kNotHermitian: return "NotHermitian";
    case ErrorKind::kNotUnitTrace: return "NotUnitTrace";
    case ErrorKind::kNotPositiveSemidefinite: return "NotPositiveSemidefinite";
    case ErrorKind::kNotNormalized: return "NotNormalized";
    case ErrorKind::kUnknownPreset: return "UnknownPreset";
    case ErrorKind::kUnknownScheme: return "UnknownScheme";
    case ErrorKind::kLengthMismatch: return "LengthMismatch";
    case ErrorKind::kBadQubitList: return "BadQubitList";
    case ErrorKind::kBadEnsemble: return "BadEnsemble";
    case ErrorKind::kDegenerateCurves: return "DegenerateCurves";
    case ErrorKind::kBadK: return "BadK";
  }
  return "Unknown";
}

}  // namespace memchan
