/*
 * Copyright 2026 The tensorqaoa Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "tqaoa/protes.hpp"
#include "tqaoa/refine.hpp"

namespace tqaoa {

/// Flat "key = value" document. '#' starts a comment; blank lines ignored.
using KeyValues = std::map<std::string, std::string>;

KeyValues parse_key_values(std::string_view text);
KeyValues load_key_values(const std::filesystem::path& path);

/// Applies recognized keys onto the two configs. Keys (case-sensitive):
///   R K k k_gd lambda N m seed          -> ProtesConfig
///   max_evals initial_step tol          -> RefineConfig
/// `seed` is applied to both. Unknown keys throw.
void apply_config(const KeyValues& kv, ProtesConfig& protes, RefineConfig& refine);

}  // namespace tqaoa
