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

#include <cstdarg>
#include <string>

namespace skiff::log {

enum class Level { Debug = 0, Info = 1, Warn = 2, Error = 3 };

// Process-wide tag printed with every line, e.g. "cp-0" or "worker-3".
void set_component(const std::string& tag);
void set_level(Level level);
Level level();

void write(Level level, const char* fmt, ...) __attribute__((format(printf, 2, 3)));

}  // namespace skiff::log

#define SKIFF_LOG_DEBUG(...)                                      \
  do {                                                            \
    if (::skiff::log::level() <= ::skiff::log::Level::Debug)      \
      ::skiff::log::write(::skiff::log::Level::Debug, __VA_ARGS__); \
  } while (0)
#define SKIFF_LOG_INFO(...) ::skiff::log::write(::skiff::log::Level::Info, __VA_ARGS__)
#define SKIFF_LOG_WARN(...) ::skiff::log::write(::skiff::log::Level::Warn, __VA_ARGS__)
#define SKIFF_LOG_ERROR(...) ::skiff::log::write(::skiff::log::Level::Error, __VA_ARGS__)
