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

#ifndef TAXOPAIRS_FILTER_H_
#define TAXOPAIRS_FILTER_H_

#include <array>
#include <cstdint>
#include <istream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "taxopairs/category_graph.h"

namespace taxopairs {

enum class ScriptFilter {
  kNone,
  // Reject any title containing a run of ASCII letters, i.e. an English
  // word, whether or not it is whitespace-delimited.
  kRejectLatinTokens,
};

struct FilterConfig {
  size_t max_len = 50;  // in code points
  std::set<std::string> keyword_blacklist = {
      "of", "at", "in", "by", "from", "to", "about", "stubs", "lists"};
  bool reject_digits = true;
  std::set<char32_t> reject_chars = {U'.', U'!', U'?'};
  ScriptFilter script_filter = ScriptFilter::kNone;
  bool substring_filter = true;
  // Match blacklist entries as substrings instead of whole tokens. Needed
  // for scripts written without spaces.
  bool keyword_substring_match = false;
};

// Why a title failed; the first failing rule in this order is reported.
enum class FilterVerdict {
  kPass = 0,
  kInvalidText,
  kTooLong,
  kDigit,
  kRejectChar,
  kBlacklist,
  kLatinToken,
};
inline constexpr size_t kFilterVerdictCount = 7;

std::string_view FilterVerdictName(FilterVerdict verdict);

FilterVerdict CheckTitle(std::string_view title, const FilterConfig &config);

inline bool PassesFilter(std::string_view title, const FilterConfig &config) {
  return CheckTitle(title, config) == FilterVerdict::kPass;
}

// True iff either title, lowercased, is a contiguous substring of the other.
bool SubstringReject(std::string_view a, std::string_view b);

// Overrides fields of `base` from a language config JSON object:
//   {"max_len": 50, "keyword_blacklist": [...], "reject_digits": true,
//    "reject_chars": [".", "!"], "script_filter": "reject_latin_tokens",
//    "substring_filter": true, "keyword_substring_match": false}
// Absent keys keep their base value. Throws a config error on bad input.
FilterConfig ApplyLanguageConfig(const nlohmann::json &config,
                                 FilterConfig base = {});
FilterConfig LoadLanguageConfig(std::istream &in, FilterConfig base = {});

nlohmann::json FilterConfigToJson(const FilterConfig &config);

struct FilterTally {
  std::array<uint64_t, kFilterVerdictCount> counts{};

  uint64_t total() const;
  uint64_t passed() const { return counts[0]; }
  nlohmann::json ToJson() const;
};

// Per-node filter outcome for a graph, computed once and shared by the
// samplers.
class TitleFilter {
 public:
  TitleFilter(const CategoryGraph &graph, const FilterConfig &config,
              int workers = 1);

  bool passes(NodeId id) const { return pass_[id.value] != 0; }
  const FilterConfig &config() const { return config_; }
  const FilterTally &tally() const { return tally_; }

  // Ids of passing nodes in increasing order.
  const std::vector<NodeId> &eligible() const { return eligible_; }

  // Pair-level rule: substring rejection when enabled.
  bool RejectPair(std::string_view a, std::string_view b) const {
    return config_.substring_filter && SubstringReject(a, b);
  }

 private:
  FilterConfig config_;
  std::vector<uint8_t> pass_;
  std::vector<NodeId> eligible_;
  FilterTally tally_;
};

}  // namespace taxopairs

#endif  // TAXOPAIRS_FILTER_H_
