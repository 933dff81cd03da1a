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

#include "codezeta/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace codezeta {

namespace {
std::atomic<unsigned> g_worker_cap{0};
}

void set_worker_count(unsigned count) noexcept { g_worker_cap.store(count); }

unsigned worker_count() noexcept {
  const unsigned cap = g_worker_cap.load();
  if (cap != 0) return cap;
  return std::max(1U, std::thread::hardware_concurrency());
}

void parallel_chunks(std::uint64_t total, unsigned chunks,
                     const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& body) {
  chunks = std::max(1U, chunks);
  const auto bound = [&](unsigned c) { return total * c / chunks; };
  if (chunks == 1) {
    body(0, 0, total);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(chunks);
  threads.reserve(chunks);
  for (unsigned c = 0; c < chunks; ++c) {
    threads.emplace_back([&, c] {
      try {
        body(c, bound(c), bound(c + 1));
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace codezeta
