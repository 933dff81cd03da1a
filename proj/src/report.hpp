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

// JSON reports behind the C API. Rationals are "num/den" strings, big
// integers are decimal strings, and objects use sorted keys so identical
// inputs give byte-identical output.

#ifndef CODEZETA_SRC_REPORT_HPP
#define CODEZETA_SRC_REPORT_HPP

#include <cstdint>

#include <json.hpp>

#include "codezeta/code.hpp"

namespace codezeta::report {

using Json = nlohmann::json;

/// Every builder returns an object with a boolean "passed" member.
Json weights(const LinearCode& code);
Json zeta(const LinearCode& code);
Json rankgen(const LinearCode& code);
Json greene(const LinearCode& code);
Json twovar(const LinearCode& code);
Json bounds(const LinearCode& code);
Json clifford(const LinearCode& code, bool exhaustive, std::uint64_t samples, std::uint64_t seed);
Json extremal(int q, int c, int n, bool ultraspherical);
/// All per-code sections; clifford is exhaustive up to the subset cap and
/// sampled (4096 subsets, seed 0) beyond it.
Json full(const LinearCode& code);

}  // namespace codezeta::report

#endif  // CODEZETA_SRC_REPORT_HPP
