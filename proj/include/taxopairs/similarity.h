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

#ifndef TAXOPAIRS_SIMILARITY_H_
#define TAXOPAIRS_SIMILARITY_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "taxopairs/error.h"

namespace taxopairs {

// Relatedness of two category titles, used to rank neutral candidates.
// Implementations are immutable after construction and safe to share
// between threads. Scores are cosines in [-1, 1] and symmetric; a zero
// representation scores 0 against everything.
class SimilarityScorer {
 public:
  virtual ~SimilarityScorer() = default;

  // nullopt when a title cannot be represented (e.g. missing vector).
  virtual std::optional<double> Score(std::string_view a,
                                      std::string_view b) const = 0;

  virtual std::string Describe() const = 0;
};

// Cosine over character n-gram count vectors of the lowercased titles.
// N-grams are taken over code points. A nonempty title shorter than n
// contributes itself as a single gram.
class LexicalNGramScorer final : public SimilarityScorer {
 public:
  using Profile = std::vector<std::pair<std::u32string, uint32_t>>;

  explicit LexicalNGramScorer(int n = 3);

  std::optional<double> Score(std::string_view a,
                              std::string_view b) const override;
  std::string Describe() const override;

  // Sorted (gram, count) list.
  Profile MakeProfile(std::string_view title) const;

  int n() const { return n_; }

 private:
  int n_;
};

struct VectorTable {
  size_t dimension = 0;
  std::unordered_map<std::string, std::vector<double>> vectors;
};

struct VectorLoadReport {
  size_t rows = 0;
  size_t duplicates = 0;
  std::vector<std::string> warnings;
};

// Reads `title<TAB>v1 v2 ... vd` lines (UTF-8, fixed d per file). Blank
// lines and '#' lines are skipped. Duplicate titles: last row wins, with a
// warning. Dimension mismatches and unparseable or non-finite numbers throw
// a data error naming the line.
VectorTable LoadVectors(std::istream &in, VectorLoadReport *report = nullptr);

// Cosine over precomputed embeddings, e.g. layer-averaged contextual vectors
// produced by an external encoder.
class VectorScorer final : public SimilarityScorer {
 public:
  explicit VectorScorer(VectorTable table);

  std::optional<double> Score(std::string_view a,
                              std::string_view b) const override;
  std::string Describe() const override;

  bool Contains(std::string_view title) const;

 private:
  struct Entry {
    std::vector<double> values;
    double norm_sq;
  };
  const Entry *Lookup(std::string_view title) const;

  size_t dimension_;
  std::unordered_map<std::string, Entry> table_;
};

}  // namespace taxopairs

#endif  // TAXOPAIRS_SIMILARITY_H_
