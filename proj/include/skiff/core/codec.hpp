// Copyright 2026 The Skiff Authors
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

#pragma once

#include <string>

#include "skiff/core/types.hpp"
#include "skiff/core/util.hpp"

namespace skiff {

inline constexpr size_t kSandboxRecordBytes = 16;

// Fixed-width binary form of a sandbox record, 16 bytes exactly:
// id(8) || ip(4) || port(2) || worker_index(2), big-endian.
std::string encode_sandbox(const SandboxRecord& rec);

// Inverse of encode_sandbox. Inputs that are not exactly 16 bytes are
// malformed.
Result<SandboxRecord> decode_sandbox(const std::string& bytes);

inline std::string sandbox_to_hex(const SandboxRecord& rec) { return to_hex(encode_sandbox(rec)); }
Result<SandboxRecord> sandbox_from_hex(const std::string& hex);

}  // namespace skiff
