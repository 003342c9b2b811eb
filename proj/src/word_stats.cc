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

#include "taxopairs/word_stats.h"

#include <algorithm>
#include <unordered_map>

#include "taxopairs/text.h"

namespace taxopairs {

nlohmann::json FrequencyReport::ToJson() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto &[token, count] : entries) {
    out.push_back({{"token", token}, {"count", count}});
  }
  return out;
}

FrequencyReport TopFrequentWords(std::span<const DatasetRow> rows, size_t k,
                                 const StopwordPolicy &policy) {
  std::set<std::string> stop;
  for (const std::string &w : policy.stopwords) {
    stop.insert(policy.case_insensitive ? text::ToLowerUtf8(w) : w);
  }
  std::unordered_map<std::string, uint64_t> counts;
  for (const DatasetRow &row : rows) {
    for (const std::string *t : {&row.text1, &row.text2}) {
      for (std::string &token : text::SplitWhitespace(*t)) {
        if (!stop.empty() &&
            stop.count(policy.case_insensitive ? text::ToLowerUtf8(token)
                                               : token)) {
          continue;
        }
        ++counts[std::move(token)];
      }
    }
  }
  FrequencyReport report;
  report.entries.assign(counts.begin(), counts.end());
  auto order = [](const auto &x, const auto &y) {
    if (x.second != y.second) return x.second > y.second;
    return x.first < y.first;
  };
  size_t n = std::min(k, report.entries.size());
  std::partial_sort(report.entries.begin(), report.entries.begin() + n,
                    report.entries.end(), order);
  report.entries.resize(n);
  return report;
}

}  // namespace taxopairs
