// Copyright 2026 The codezeta Authors.
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

#ifndef CODEZETA_PARALLEL_HPP
#define CODEZETA_PARALLEL_HPP

#include <cstdint>
#include <functional>

namespace codezeta {

/// Worker cap for data-parallel enumeration; 0 restores the default
/// (hardware concurrency).
void set_worker_count(unsigned count) noexcept;
unsigned worker_count() noexcept;

/// Runs body(chunk, begin, end) over [0, total) split into contiguous
/// chunks, one per worker. Chunk results are merged by the caller in chunk
/// order, so output never depends on scheduling.
void parallel_chunks(std::uint64_t total, unsigned chunks,
                     const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& body);

}  // namespace codezeta

#endif  // CODEZETA_PARALLEL_HPP
