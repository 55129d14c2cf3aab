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

#include "skiff/core/log.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <ctime>
#include <mutex>

namespace skiff::log {

namespace {

std::atomic<Level> g_level{Level::Info};
std::string g_component = "skiff";
std::mutex g_mu;
bool g_env_checked = false;

void check_env() {
  if (g_env_checked) return;
  g_env_checked = true;
  const char* v = std::getenv("SKIFF_LOG");
  if (!v) return;
  if (!strcmp(v, "debug")) g_level = Level::Debug;
  else if (!strcmp(v, "info")) g_level = Level::Info;
  else if (!strcmp(v, "warn")) g_level = Level::Warn;
  else if (!strcmp(v, "error")) g_level = Level::Error;
}

const char* level_name(Level l) {
  switch (l) {
    case Level::Debug: return "DBG";
    case Level::Info: return "INF";
    case Level::Warn: return "WRN";
    case Level::Error: return "ERR";
  }
  return "?";
}

}  // namespace

void set_component(const std::string& tag) {
  std::lock_guard<std::mutex> lk(g_mu);
  g_component = tag;
}

void set_level(Level level) { g_level = level; }

Level level() {
  std::lock_guard<std::mutex> lk(g_mu);
  check_env();
  return g_level.load();
}

void write(Level lvl, const char* fmt, ...) {
  if (lvl < level()) return;
  char msg[1024];
  va_list ap;
  va_start(ap, fmt);
  vsnprintf(msg, sizeof msg, fmt, ap);
  va_end(ap);

  struct timespec ts;
  clock_gettime(CLOCK_REALTIME, &ts);
  struct tm tm_buf;
  localtime_r(&ts.tv_sec, &tm_buf);
  char when[32];
  strftime(when, sizeof when, "%H:%M:%S", &tm_buf);

  std::lock_guard<std::mutex> lk(g_mu);
  fprintf(stderr, "%s.%03ld %s [%s] %s\n", when, ts.tv_nsec / 1000000, level_name(lvl),
          g_component.c_str(), msg);
}

}  // namespace skiff::log
