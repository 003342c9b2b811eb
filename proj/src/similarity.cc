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

#include "taxopairs/similarity.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

#include "taxopairs/error.h"
#include "taxopairs/text.h"

namespace taxopairs {

namespace {

double Cosine(double dot, double norm_a_sq, double norm_b_sq) {
  if (norm_a_sq == 0.0 || norm_b_sq == 0.0) return 0.0;
  // sqrt of the product keeps identical integer profiles at exactly 1.
  double c = dot / std::sqrt(norm_a_sq * norm_b_sq);
  return std::clamp(c, -1.0, 1.0);
}

}  // namespace

LexicalNGramScorer::LexicalNGramScorer(int n) : n_(n) {
  if (n < 1) throw ConfigError("n-gram size must be positive");
}

LexicalNGramScorer::Profile LexicalNGramScorer::MakeProfile(
    std::string_view title) const {
  std::u32string cps;
  if (auto decoded = text::DecodeUtf8(title)) {
    cps = text::ToLower(*decoded);
  } else {
    for (unsigned char c : title) cps.push_back(text::ToLower(c));
  }
  std::map<std::u32string, uint32_t> counts;
  size_t n = static_cast<size_t>(n_);
  if (!cps.empty() && cps.size() < n) {
    counts[cps] = 1;
  } else {
    for (size_t i = 0; i + n <= cps.size(); ++i) ++counts[cps.substr(i, n)];
  }
  return Profile(counts.begin(), counts.end());
}

std::optional<double> LexicalNGramScorer::Score(std::string_view a,
                                                std::string_view b) const {
  Profile pa = MakeProfile(a);
  Profile pb = MakeProfile(b);
  double na = 0, nb = 0, dot = 0;
  for (const auto &[g, c] : pa) na += double(c) * c;
  for (const auto &[g, c] : pb) nb += double(c) * c;
  auto i = pa.begin();
  auto j = pb.begin();
  while (i != pa.end() && j != pb.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      dot += double(i->second) * j->second;
      ++i;
      ++j;
    }
  }
  return Cosine(dot, na, nb);
}

std::string LexicalNGramScorer::Describe() const {
  return "lexical-ngram(n=" + std::to_string(n_) + ")";
}

VectorTable LoadVectors(std::istream &in, VectorLoadReport *report) {
  if (!in.good()) throw IoError("vector stream is not readable");
  VectorLoadReport local;
  if (report == nullptr) report = &local;
  VectorTable table;
  std::string line;
  uint64_t line_no = 0;
  bool have_dimension = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto where = [&] { return "vector file line " + std::to_string(line_no); };
    size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw DataError(where() + ": expected title<TAB>values");
    }
    std::string title = line.substr(0, tab);
    if (!text::IsValidUtf8(title)) throw DataError(where() + ": invalid UTF-8");

    std::vector<double> values;
    const char *p = line.data() + tab + 1;
    const char *end = line.data() + line.size();
    while (p < end) {
      while (p < end && (*p == ' ' || *p == '\t')) ++p;
      if (p == end) break;
      double v;
      auto [next, ec] = std::from_chars(p, end, v);
      if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t')) {
        throw DataError(where() + ": unparseable number");
      }
      if (!std::isfinite(v)) throw DataError(where() + ": non-finite value");
      values.push_back(v);
      p = next;
    }
    if (values.empty()) throw DataError(where() + ": no values");
    if (!have_dimension) {
      table.dimension = values.size();
      have_dimension = true;
    } else if (values.size() != table.dimension) {
      throw DataError(where() + ": dimension " + std::to_string(values.size()) +
                      " differs from " + std::to_string(table.dimension));
    }
    ++report->rows;
    auto [it, inserted] = table.vectors.insert_or_assign(title, std::move(values));
    if (!inserted) {
      ++report->duplicates;
      report->warnings.push_back(where() + ": duplicate title '" + title +
                                 "', keeping the last row");
    }
  }
  if (in.bad()) throw IoError("read error in vector file");
  return table;
}

VectorScorer::VectorScorer(VectorTable table) : dimension_(table.dimension) {
  table_.reserve(table.vectors.size());
  for (auto &[title, values] : table.vectors) {
    double norm = 0;
    for (double v : values) norm += v * v;
    table_.emplace(title, Entry{std::move(values), norm});
  }
}

const VectorScorer::Entry *VectorScorer::Lookup(std::string_view title) const {
  auto it = table_.find(std::string(title));
  return it == table_.end() ? nullptr : &it->second;
}

bool VectorScorer::Contains(std::string_view title) const {
  return Lookup(title) != nullptr;
}

std::optional<double> VectorScorer::Score(std::string_view a,
                                          std::string_view b) const {
  const Entry *ea = Lookup(a);
  const Entry *eb = Lookup(b);
  if (ea == nullptr || eb == nullptr) return std::nullopt;
  if (ea == eb) return ea->norm_sq == 0 ? 0.0 : 1.0;
  double dot = 0;
  for (size_t i = 0; i < dimension_; ++i) dot += ea->values[i] * eb->values[i];
  return Cosine(dot, ea->norm_sq, eb->norm_sq);
}

std::string VectorScorer::Describe() const {
  return "precomputed-vectors(d=" + std::to_string(dimension_) +
         ", titles=" + std::to_string(table_.size()) + ")";
}

}  // namespace taxopairs
