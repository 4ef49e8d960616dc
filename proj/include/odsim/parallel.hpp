// Copyright 2026 The odsim Authors
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

namespace odsim {

/// Worker count to use. A nonzero request wins; otherwise ODSIM_THREADS (0 or unset means
/// one worker per hardware thread).
unsigned resolve_thread_count(unsigned requested = 0);

/// Calls fn(i) for i in [0, n) on up to `threads` workers. Each index is visited exactly once;
/// fn must only write to storage owned by index i.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace odsim
