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

// Human-readable rendering of the JSON reports produced by the C API.

#ifndef CODEZETA_TOOLS_RENDER_HPP
#define CODEZETA_TOOLS_RENDER_HPP

#include <string>

#include <json.hpp>

namespace codezeta::cli {

/// Dispatches on doc["command"]; ends with a "result: PASS|FAIL" line.
std::string render(const nlohmann::json& doc);

}  // namespace codezeta::cli

#endif  // CODEZETA_TOOLS_RENDER_HPP
