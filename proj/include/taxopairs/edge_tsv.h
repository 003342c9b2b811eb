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

#ifndef TAXOPAIRS_EDGE_TSV_H_
#define TAXOPAIRS_EDGE_TSV_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "taxopairs/error.h"

namespace taxopairs {

// A child -> parent relation between two titles.
struct RawEdge {
  std::string child_title;
  std::string parent_title;

  auto operator<=>(const RawEdge &other) const = default;
};

// Reads `child<TAB>parent` lines. Blank lines and lines starting with '#'
// are skipped; a trailing CR is tolerated.
class EdgeTsvReader {
 public:
  explicit EdgeTsvReader(std::istream &in);

  // Returns false at end of input. Malformed lines are recorded in errors()
  // and skipped.
  bool Next(RawEdge *edge);

  const std::vector<RecordError> &errors() const { return errors_; }
  uint64_t line_number() const { return line_; }

 private:
  std::istream &in_;
  std::string buffer_;
  uint64_t line_ = 0;
  std::vector<RecordError> errors_;
};

// Reads the whole stream. Errors are appended to *errors when non-null.
std::vector<RawEdge> ReadEdgeTsv(std::istream &in,
                                 std::vector<RecordError> *errors = nullptr);

void WriteEdgeTsv(std::ostream &out, std::span<const RawEdge> edges);

}  // namespace taxopairs

#endif  // TAXOPAIRS_EDGE_TSV_H_
