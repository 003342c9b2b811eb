// Copyright 2026 The Taxopairs Authors.
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

#include "taxopairs/logging.h"

#include <spdlog/sinks/stdout_sinks.h>

namespace taxopairs {

spdlog::logger &Log() {
  static auto *logger = [] {
    auto sink = std::make_shared<spdlog::sinks::stderr_sink_mt>();
    auto *l = new spdlog::logger("taxopairs", std::move(sink));
    l->set_pattern("[%H:%M:%S.%e] [%l] %v");
    l->set_level(spdlog::level::info);
    return l;
  }();
  return *logger;
}

}  // namespace taxopairs
