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

#include "taxopairs/filter.h"

#include <algorithm>

#include "taxopairs/error.h"
#include "taxopairs/parallel.h"
#include "taxopairs/text.h"

namespace taxopairs {

std::string_view FilterVerdictName(FilterVerdict verdict) {
  switch (verdict) {
    case FilterVerdict::kPass: return "pass";
    case FilterVerdict::kInvalidText: return "invalid_text";
    case FilterVerdict::kTooLong: return "too_long";
    case FilterVerdict::kDigit: return "digit";
    case FilterVerdict::kRejectChar: return "reject_char";
    case FilterVerdict::kBlacklist: return "blacklist";
    case FilterVerdict::kLatinToken: return "latin_token";
  }
  return "pass";
}

FilterVerdict CheckTitle(std::string_view title, const FilterConfig &config) {
  auto cps = text::DecodeUtf8(title);
  if (!cps || cps->empty()) return FilterVerdict::kInvalidText;
  if (cps->size() > config.max_len) return FilterVerdict::kTooLong;
  if (config.reject_digits &&
      std::any_of(cps->begin(), cps->end(), text::IsDecimalDigit)) {
    return FilterVerdict::kDigit;
  }
  for (char32_t cp : *cps) {
    if (config.reject_chars.count(cp) != 0) return FilterVerdict::kRejectChar;
  }
  if (!config.keyword_blacklist.empty()) {
    std::string lower = text::ToLowerUtf8(title);
    if (config.keyword_substring_match) {
      for (const std::string &word : config.keyword_blacklist) {
        if (lower.find(word) != std::string::npos) {
          return FilterVerdict::kBlacklist;
        }
      }
    } else {
      for (const std::string &token : text::SplitWhitespace(lower)) {
        if (config.keyword_blacklist.count(token) != 0) {
          return FilterVerdict::kBlacklist;
        }
      }
    }
  }
  if (config.script_filter == ScriptFilter::kRejectLatinTokens &&
      std::any_of(cps->begin(), cps->end(), text::IsAsciiLetter)) {
    return FilterVerdict::kLatinToken;
  }
  return FilterVerdict::kPass;
}

bool SubstringReject(std::string_view a, std::string_view b) {
  std::string la = text::ToLowerUtf8(a);
  std::string lb = text::ToLowerUtf8(b);
  if (la.size() > lb.size()) std::swap(la, lb);
  return lb.find(la) != std::string::npos;
}

namespace {

std::string ScriptFilterName(ScriptFilter f) {
  return f == ScriptFilter::kRejectLatinTokens ? "reject_latin_tokens" : "none";
}

}  // namespace

FilterConfig ApplyLanguageConfig(const nlohmann::json &config,
                                 FilterConfig base) {
  if (!config.is_object()) {
    throw ConfigError("language config must be a JSON object");
  }
  static const std::set<std::string> kKnown = {
      "language", "max_len", "keyword_blacklist", "reject_digits",
      "reject_chars", "script_filter", "substring_filter",
      "keyword_substring_match"};
  for (const auto &[key, value] : config.items()) {
    if (kKnown.count(key) == 0) {
      throw ConfigError("language config: unknown key '" + key + "'");
    }
  }
  try {
    if (config.contains("max_len")) {
      auto v = config.at("max_len").get<int64_t>();
      if (v <= 0) throw ConfigError("language config: max_len must be positive");
      base.max_len = static_cast<size_t>(v);
    }
    if (config.contains("keyword_blacklist")) {
      base.keyword_blacklist.clear();
      for (const auto &w : config.at("keyword_blacklist")) {
        auto word = w.get<std::string>();
        if (!text::IsValidUtf8(word) || word.empty()) {
          throw ConfigError("language config: bad blacklist entry");
        }
        base.keyword_blacklist.insert(text::ToLowerUtf8(word));
      }
    }
    if (config.contains("reject_digits")) {
      base.reject_digits = config.at("reject_digits").get<bool>();
    }
    if (config.contains("reject_chars")) {
      base.reject_chars.clear();
      for (const auto &c : config.at("reject_chars")) {
        auto cps = text::DecodeUtf8(c.get<std::string>());
        if (!cps || cps->size() != 1) {
          throw ConfigError(
              "language config: reject_chars entries must be single characters");
        }
        base.reject_chars.insert((*cps)[0]);
      }
    }
    if (config.contains("script_filter")) {
      auto name = config.at("script_filter").get<std::string>();
      if (name == "none") {
        base.script_filter = ScriptFilter::kNone;
      } else if (name == "reject_latin_tokens") {
        base.script_filter = ScriptFilter::kRejectLatinTokens;
      } else {
        throw ConfigError("language config: unknown script_filter '" + name + "'");
      }
    }
    if (config.contains("substring_filter")) {
      base.substring_filter = config.at("substring_filter").get<bool>();
    }
    if (config.contains("keyword_substring_match")) {
      base.keyword_substring_match =
          config.at("keyword_substring_match").get<bool>();
    }
  } catch (const nlohmann::json::exception &e) {
    throw ConfigError(std::string("language config: ") + e.what());
  }
  return base;
}

FilterConfig LoadLanguageConfig(std::istream &in, FilterConfig base) {
  nlohmann::json config;
  try {
    config = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception &e) {
    throw ConfigError(std::string("language config: ") + e.what());
  }
  return ApplyLanguageConfig(config, std::move(base));
}

nlohmann::json FilterConfigToJson(const FilterConfig &config) {
  nlohmann::json chars = nlohmann::json::array();
  for (char32_t c : config.reject_chars) {
    chars.push_back(text::EncodeUtf8(std::u32string(1, c)));
  }
  return {
      {"max_len", config.max_len},
      {"keyword_blacklist", config.keyword_blacklist},
      {"reject_digits", config.reject_digits},
      {"reject_chars", chars},
      {"script_filter", ScriptFilterName(config.script_filter)},
      {"substring_filter", config.substring_filter},
      {"keyword_substring_match", config.keyword_substring_match},
  };
}

uint64_t FilterTally::total() const {
  uint64_t sum = 0;
  for (uint64_t c : counts) sum += c;
  return sum;
}

nlohmann::json FilterTally::ToJson() const {
  nlohmann::json rejected = nlohmann::json::object();
  for (size_t i = 1; i < kFilterVerdictCount; ++i) {
    rejected[std::string(FilterVerdictName(static_cast<FilterVerdict>(i)))] =
        counts[i];
  }
  return {{"titles", total()}, {"passed", passed()}, {"rejected", rejected}};
}

TitleFilter::TitleFilter(const CategoryGraph &graph, const FilterConfig &config,
                         int workers)
    : config_(config), pass_(graph.node_count(), 0) {
  std::vector<FilterVerdict> verdicts(graph.node_count());
  ParallelFor(graph.node_count(), workers,
              [&](size_t, size_t begin, size_t end) {
                for (size_t i = begin; i < end; ++i) {
                  verdicts[i] = CheckTitle(
                      graph.title(NodeId{static_cast<uint32_t>(i)}), config_);
                }
              });
  for (size_t i = 0; i < verdicts.size(); ++i) {
    ++tally_.counts[static_cast<size_t>(verdicts[i])];
    if (verdicts[i] == FilterVerdict::kPass) {
      pass_[i] = 1;
      eligible_.push_back(NodeId{static_cast<uint32_t>(i)});
    }
  }
}

}  // namespace taxopairs
