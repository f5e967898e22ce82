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

#include <cstddef>
#include <functional>

namespace memchan {

/// Worker count used by the grid evaluators. Zero means "pick a default"
/// (hardware concurrency).
struct Parallelism {
  unsigned threads = 0;

  /// Reads MEMCHAN_THREADS; unset, empty or unparsable values give the
  /// default.
  static Parallelism from_environment();
  unsigned resolved() const;
};

/// Calls body(i) for every i in [0, n), distributing indices over worker
/// threads. Bodies must write only to their own slot of any shared output.
/// The first exception thrown by any body is rethrown after all workers stop.
void parallel_for(std::size_t n, Parallelism parallelism,
                  const std::function<void(std::size_t)>& body);

}  // namespace memchan
