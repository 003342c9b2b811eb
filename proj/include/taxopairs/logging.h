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

#ifndef TAXOPAIRS_LOGGING_H_
#define TAXOPAIRS_LOGGING_H_

#include <spdlog/spdlog.h>

namespace taxopairs {

// Process-wide logger writing to standard error.
spdlog::logger &Log();

}  // namespace taxopairs

#endif  // TAXOPAIRS_LOGGING_H_
