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

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace skiff {

using Duration = std::chrono::milliseconds;

// Milliseconds on the monotonic clock. All scheduling and timeout logic uses
// this domain; wall-clock time appears only in logs and report output.
int64_t steady_ms();
int64_t wall_ms();

void sleep_ms(int64_t ms);

// --- error handling -------------------------------------------------------

struct Err {
  std::string msg;
};

template <typename T>
class Result {
 public:
  Result(T value) : value_(std::move(value)) {}
  Result(Err err) : err_(std::move(err)) {}

  bool ok() const { return value_.has_value(); }
  explicit operator bool() const { return ok(); }
  const T& value() const { return *value_; }
  T& value() { return *value_; }
  const std::string& error() const { return err_.msg; }

 private:
  std::optional<T> value_;
  Err err_;
};

template <>
class Result<void> {
 public:
  Result() = default;
  Result(Err err) : failed_(true), err_(std::move(err)) {}
  bool ok() const { return !failed_; }
  explicit operator bool() const { return ok(); }
  const std::string& error() const { return err_.msg; }

 private:
  bool failed_ = false;
  Err err_;
};

// --- bytes / addresses ----------------------------------------------------

std::string to_hex(const std::string& bytes);
Result<std::string> from_hex(const std::string& hex);

// "10.0.0.2" <-> host-order u32. Parsing rejects anything that is not a
// dotted quad.
std::string ipv4_to_string(uint32_t ip);
Result<uint32_t> parse_ipv4(const std::string& s);

// FNV-1a, 64-bit. Published router hash; stable across builds and platforms.
uint64_t fnv1a64(std::string_view data);

// --- misc -----------------------------------------------------------------

std::string random_hex_id(size_t bytes = 8);

std::vector<std::string> split(const std::string& s, char sep);
std::string trim(const std::string& s);

// "host:port" -> pair. Errors on missing/invalid port.
Result<std::pair<std::string, uint16_t>> parse_hostport(const std::string& s);

}  // namespace skiff
