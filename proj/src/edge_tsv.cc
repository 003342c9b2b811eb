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

#include "taxopairs/edge_tsv.h"

#include <algorithm>

#include "taxopairs/text.h"

namespace taxopairs {

EdgeTsvReader::EdgeTsvReader(std::istream &in) : in_(in) {
  if (!in_.good()) throw IoError("edge TSV stream is not readable");
}

bool EdgeTsvReader::Next(RawEdge *edge) {
  while (std::getline(in_, buffer_)) {
    ++line_;
    if (!buffer_.empty() && buffer_.back() == '\r') buffer_.pop_back();
    if (buffer_.empty() || buffer_[0] == '#') continue;

    auto columns = std::count(buffer_.begin(), buffer_.end(), '\t') + 1;
    if (columns != 2) {
      errors_.push_back({0, line_,
                         "expected 2 tab-separated columns, got " +
                             std::to_string(columns)});
      continue;
    }
    size_t tab = buffer_.find('\t');
    std::string child = buffer_.substr(0, tab);
    std::string parent = buffer_.substr(tab + 1);
    if (child.empty() || parent.empty()) {
      errors_.push_back({0, line_, "empty title"});
      continue;
    }
    if (!text::IsValidUtf8(child) || !text::IsValidUtf8(parent)) {
      errors_.push_back({0, line_, "invalid UTF-8"});
      continue;
    }
    edge->child_title = std::move(child);
    edge->parent_title = std::move(parent);
    return true;
  }
  if (in_.bad()) throw IoError("read error in edge TSV");
  return false;
}

std::vector<RawEdge> ReadEdgeTsv(std::istream &in,
                                 std::vector<RecordError> *errors) {
  EdgeTsvReader reader(in);
  std::vector<RawEdge> edges;
  RawEdge edge;
  while (reader.Next(&edge)) edges.push_back(std::move(edge));
  if (errors != nullptr) {
    errors->insert(errors->end(), reader.errors().begin(),
                   reader.errors().end());
  }
  return edges;
}

void WriteEdgeTsv(std::ostream &out, std::span<const RawEdge> edges) {
  for (const RawEdge &e : edges) {
    out << e.child_title << '\t' << e.parent_title << '\n';
  }
}

}  // namespace taxopairs
