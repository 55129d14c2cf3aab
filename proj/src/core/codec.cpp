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

#include "skiff/core/codec.hpp"

namespace skiff {

namespace {

void put_be(std::string& out, uint64_t v, int bytes) {
  for (int i = bytes - 1; i >= 0; i--) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

uint64_t get_be(const unsigned char* p, int bytes) {
  uint64_t v = 0;
  for (int i = 0; i < bytes; i++) v = (v << 8) | p[i];
  return v;
}

}  // namespace

std::string encode_sandbox(const SandboxRecord& rec) {
  std::string out;
  out.reserve(kSandboxRecordBytes);
  put_be(out, rec.id, 8);
  put_be(out, rec.ip, 4);
  put_be(out, rec.port, 2);
  put_be(out, rec.worker_index, 2);
  return out;
}

Result<SandboxRecord> decode_sandbox(const std::string& bytes) {
  if (bytes.size() != kSandboxRecordBytes)
    return Err{"malformed sandbox record: expected 16 bytes, got " + std::to_string(bytes.size())};
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  SandboxRecord rec;
  rec.id = get_be(p, 8);
  rec.ip = static_cast<uint32_t>(get_be(p + 8, 4));
  rec.port = static_cast<uint16_t>(get_be(p + 12, 2));
  rec.worker_index = static_cast<uint16_t>(get_be(p + 14, 2));
  return rec;
}

Result<SandboxRecord> sandbox_from_hex(const std::string& hex) {
  auto raw = from_hex(hex);
  if (!raw) return Err{raw.error()};
  return decode_sandbox(raw.value());
}

}  // namespace skiff
