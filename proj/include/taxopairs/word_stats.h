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

#ifndef TAXOPAIRS_WORD_STATS_H_
#define TAXOPAIRS_WORD_STATS_H_

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "taxopairs/labels.h"

namespace taxopairs {

struct StopwordPolicy {
  std::set<std::string> stopwords;
  // Compare tokens to stopwords after lowercasing both.
  bool case_insensitive = true;
};

// Most frequent tokens, count descending, ties in byte order.
struct FrequencyReport {
  std::vector<std::pair<std::string, uint64_t>> entries;

  nlohmann::json ToJson() const;
};

// Tokens are whitespace-separated words of both texts of every row, case
// preserved.
FrequencyReport TopFrequentWords(std::span<const DatasetRow> rows, size_t k,
                                 const StopwordPolicy &policy = {});

}  // namespace taxopairs

#endif  // TAXOPAIRS_WORD_STATS_H_
