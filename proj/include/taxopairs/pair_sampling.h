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

#ifndef TAXOPAIRS_PAIR_SAMPLING_H_
#define TAXOPAIRS_PAIR_SAMPLING_H_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "taxopairs/category_graph.h"
#include "taxopairs/filter.h"
#include "taxopairs/labels.h"
#include "taxopairs/similarity.h"

namespace taxopairs {

// ---------------------------------------------------------------------------
// Direct relations.

struct DirectPairStats {
  uint64_t edges = 0;
  uint64_t rejected_title = 0;
  uint64_t rejected_substring = 0;
  // Second edge of a two-node cycle; only one of the two is used.
  uint64_t reverse_duplicates = 0;
  uint64_t child = 0;
  uint64_t parent = 0;

  nlohmann::json ToJson() const;
};

// One pair per retained edge (child c, parent p), visited in (c, p) title
// order. A seeded coin keyed by the edge picks the direction: Child yields
// (c, p), Parent yields (p, c). The coin depends only on (seed, edge), so the
// result is independent of evaluation order.
std::vector<LabeledPair> ExtractDirectPairs(const CategoryGraph &graph,
                                            const TitleFilter &filter,
                                            uint64_t seed,
                                            DirectPairStats *stats = nullptr);

std::vector<LabeledPair> ExtractDirectPairs(const CategoryGraph &graph,
                                            const FilterConfig &config,
                                            uint64_t seed,
                                            DirectPairStats *stats = nullptr);

// ---------------------------------------------------------------------------
// Neutral pairs.

struct NeutralOptions {
  size_t needed = 0;
  double oversample = 5.0;
  uint64_t seed = 0;
  // Fourway-style neutrals also exclude pairs sharing a parent.
  bool exclude_siblings = false;
  uint32_t max_depth = kUnlimitedDepth;
  int workers = 1;
  // Return what was found instead of failing when short.
  bool allow_shortfall = false;
};

struct NeutralStats {
  uint64_t eligible_nodes = 0;
  uint64_t draws = 0;
  uint64_t duplicate_draws = 0;
  uint64_t rejected_substring = 0;
  uint64_t rejected_ancestor = 0;
  uint64_t rejected_sibling = 0;
  uint64_t unscored = 0;
  uint64_t scored = 0;
  uint64_t selected = 0;
  double min_selected_score = 0;

  nlohmann::json ToJson() const;
};

struct ScoredPair {
  LabeledPair pair;
  double score = 0;
};

// The k-th draw of the seeded candidate stream: two distinct positions in
// the eligible-node list, picked uniformly. Counter-based, so any prefix of
// the stream is the same regardless of its length or how it is partitioned.
struct CandidateDraw {
  uint32_t first = 0;
  uint32_t second = 0;
};
CandidateDraw NeutralCandidateAt(uint64_t seed, uint64_t index,
                                 size_t eligible_count);

// ceil(needed * oversample).
uint64_t NeutralDrawCount(size_t needed, double oversample);

// Draws NeutralDrawCount() candidates from filter-passing nodes, drops
// repeats of an unordered pair, substring-related pairs, pairs where either
// node is an ancestor of the other, and (optionally) siblings, then scores
// the survivors and keeps the `needed` best. Ranking is global: score
// descending, then (text1, text2) ascending. Returned in rank order.
//
// Throws a data error when fewer than two nodes pass the filter, or when
// fewer than `needed` pairs survive and allow_shortfall is false.
std::vector<ScoredPair> SampleNeutralPairs(const CategoryGraph &graph,
                                           const TitleFilter &filter,
                                           const SimilarityScorer &scorer,
                                           const NeutralOptions &options,
                                           NeutralStats *stats = nullptr);

// ---------------------------------------------------------------------------
// Sibling pairs.

struct SiblingOptions {
  size_t needed = 0;
  uint64_t seed = 0;
  uint32_t max_depth = kUnlimitedDepth;
  // Populations up to this many (parent, pair) slots are enumerated exactly;
  // larger ones are rejection-sampled.
  uint64_t enumeration_limit = 4'000'000;
  bool allow_shortfall = false;
};

struct SiblingStats {
  std::string method;
  uint64_t population_bound = 0;
  uint64_t candidates = 0;
  uint64_t rejected_substring = 0;
  uint64_t rejected_ancestor = 0;
  uint64_t selected = 0;

  nlohmann::json ToJson() const;
};

// Uniform sample without replacement of distinct unordered sibling pairs
// whose titles pass the filter and are neither substring- nor
// ancestor-related; each pair's orientation is a seeded coin. Throws a data
// error with the achieved count when short (unless allow_shortfall).
std::vector<LabeledPair> SampleSiblingPairs(const CategoryGraph &graph,
                                            const TitleFilter &filter,
                                            const SiblingOptions &options,
                                            SiblingStats *stats = nullptr);

}  // namespace taxopairs

#endif  // TAXOPAIRS_PAIR_SAMPLING_H_
