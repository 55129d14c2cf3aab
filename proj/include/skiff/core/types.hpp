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

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "skiff/core/util.hpp"

namespace skiff {

inline constexpr uint32_t kUnboundedScale = std::numeric_limits<uint32_t>::max();

// Per-function scheduling knobs. Defaults are defined once here; every
// component that needs a default reads this struct.
struct SchedulingConfig {
  uint32_t concurrency_target = 1;       // max in-flight requests per sandbox
  Duration stable_window = Duration{60000};
  Duration panic_window = Duration{6000};
  double panic_threshold = 2.0;
  Duration scale_to_zero_grace = Duration{30000};
  uint32_t min_scale = 0;
  uint32_t max_scale = kUnboundedScale;  // kUnboundedScale = unbounded
  uint32_t cpu_request_m = 100;          // millicores
  uint32_t mem_request_mib = 128;
  Duration queue_timeout = Duration{30000};

  // Empty string when valid, else a description of the violated invariant.
  std::string validate() const;

  bool operator==(const SchedulingConfig&) const = default;
};

// The persisted recipe for creating sandboxes of a function.
struct FunctionSpec {
  std::string name;
  std::string image;
  uint16_t port = 0;  // port the sandbox listens on
  SchedulingConfig sched;

  std::string validate() const;

  bool operator==(const FunctionSpec&) const = default;
};

// Memory-only record of one running sandbox. Wire and storage form is the
// fixed 16-byte codec in codec.hpp.
struct SandboxRecord {
  uint64_t id = 0;
  uint32_t ip = 0;  // IPv4, host order
  uint16_t port = 0;
  uint16_t worker_index = 0;

  bool operator==(const SandboxRecord&) const = default;
};

enum class ComponentKind : uint8_t { DataPlane = 0, WorkerNode = 1 };

const char* component_kind_name(ComponentKind k);

// Persisted registration of a data plane replica or worker node.
struct ComponentRecord {
  ComponentKind kind = ComponentKind::DataPlane;
  std::string name;  // empty allowed for data planes
  uint32_t ip = 0;
  uint16_t port = 0;
  uint32_t cpu_capacity_m = 0;    // workers only
  uint32_t mem_capacity_mib = 0;  // workers only

  std::string address() const { return ipv4_to_string(ip) + ":" + std::to_string(port); }

  bool operator==(const ComponentRecord&) const = default;
};

// Versioned per-function endpoint list pushed from control plane to data
// planes. Data planes apply a set only if version exceeds their cached one.
struct EndpointSet {
  std::string function;
  uint64_t version = 0;
  std::vector<SandboxRecord> endpoints;
};

struct MetricsSample {
  std::string function;
  uint32_t inflight = 0;  // executing + queued at the sending data plane
  int64_t timestamp_ms = 0;
};

}  // namespace skiff
