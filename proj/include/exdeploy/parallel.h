// Copyright 2026 The exdeploy Authors
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

#ifndef EXDEPLOY_PARALLEL_H_
#define EXDEPLOY_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace exdeploy {

// Runs fn(i) for i in [0, n) on up to `threads` workers (0 = hardware
// concurrency). Iterations must not share mutable state. The first exception
// thrown by any iteration is rethrown on the calling thread.
void ParallelFor(std::size_t n, int threads,
                 const std::function<void(std::size_t)>& fn);

}  // namespace exdeploy

#endif  // EXDEPLOY_PARALLEL_H_
