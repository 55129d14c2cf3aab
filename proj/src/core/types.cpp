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

#include "skiff/core/types.hpp"

namespace skiff {

std::string SchedulingConfig::validate() const {
  if (concurrency_target < 1) return "concurrency_target must be >= 1";
  if (panic_window > stable_window) return "panic_window must be <= stable_window";
  if (min_scale > max_scale) return "min_scale must be <= max_scale";
  if (max_scale == 0) return "max_scale must be >= 1";
  if (panic_threshold <= 0) return "panic_threshold must be positive";
  if (stable_window.count() <= 0 || panic_window.count() <= 0)
    return "scaling windows must be positive";
  if (queue_timeout.count() <= 0) return "queue_timeout must be positive";
  return "";
}

std::string FunctionSpec::validate() const {
  if (name.empty()) return "function name must be non-empty";
  for (char c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
              c == '-' || c == '_' || c == '.';
    if (!ok) return "function name may contain only [A-Za-z0-9._-]";
  }
  if (port < 1) return "port must be in [1, 65535]";
  if (image.empty()) return "image must be non-empty";
  return sched.validate();
}

const char* component_kind_name(ComponentKind k) {
  switch (k) {
    case ComponentKind::DataPlane: return "dataplane";
    case ComponentKind::WorkerNode: return "worker";
  }
  return "?";
}

}  // namespace skiff
