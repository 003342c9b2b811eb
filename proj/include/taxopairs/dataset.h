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

#ifndef TAXOPAIRS_DATASET_H_
#define TAXOPAIRS_DATASET_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "json.hpp"
#include "taxopairs/category_graph.h"
#include "taxopairs/error.h"
#include "taxopairs/filter.h"
#include "taxopairs/labels.h"

namespace taxopairs {

struct DatasetSpec {
  Scheme scheme = Scheme::kThreeway;
  size_t train_size = 100'000;
  size_t dev_size = 5'000;
  uint64_t seed = 0;
  double neutral_oversample = 5.0;
  FilterConfig filter;
  // Shrink both splits, keeping their ratio, to the largest balanced size
  // the pools can fill instead of failing.
  bool cap_to_available = false;
  // Bound on ancestor searches during neutral/sibling rejection.
  uint32_t ancestor_max_depth = kUnlimitedDepth;

  nlohmann::json ToJson() const;
};

// Throws a config error on zero sizes or a bad oversample factor.
void ValidateSpec(const DatasetSpec &spec);

// Count per RelationLabel, indexed by Index(label).
using RelationCounts = std::array<size_t, 4>;

// Per-relation quotas for one split. Each output class gets
// split_size / class_count, the remainder going to the earliest classes; a
// class made of several relations splits its quota the same way.
RelationCounts PlanQuotas(Scheme scheme, size_t split_size);

// Candidate pairs per relation, indexed by Index(label).
using PairPools = std::array<std::vector<LabeledPair>, 4>;

// Drops repeated ordered (text1, text2) pairs across all pools, keeping the
// first occurrence in relation order. Returns the number removed.
size_t DedupPools(PairPools *pools);

struct SplitSizes {
  size_t train = 0;
  size_t dev = 0;
};

// The requested sizes if the pools can fill them. Otherwise, with
// cap_to_available, the largest train size t (and dev size
// ceil(t * dev / train)) that fits; without it, the requested sizes.
SplitSizes FeasibleSizes(const DatasetSpec &spec,
                         const RelationCounts &available);

struct DatasetSplits {
  Scheme scheme = Scheme::kThreeway;
  std::vector<LabeledPair> train;
  std::vector<LabeledPair> dev;
};

struct AssemblyStats {
  RelationCounts pool_sizes{};
  size_t duplicates_removed = 0;
  SplitSizes requested;
  SplitSizes actual;
  bool capped = false;

  nlohmann::json ToJson() const;
};

// Balanced train/dev assembly. Pools are deduplicated, each pool is shuffled
// with its own seeded stream, dev quotas are filled first and train quotas
// from the remainder, so the splits are disjoint. Both splits are shuffled
// at the end. Throws a data error naming the class on a shortfall.
DatasetSplits AssembleDataset(const DatasetSpec &spec, PairPools pools,
                              AssemblyStats *stats = nullptr);

std::vector<DatasetRow> ToRows(std::span<const LabeledPair> pairs,
                               Scheme scheme);

// `text1<TAB>text2<TAB>label` lines, LF endings. Throws a data error if a
// text contains a tab or newline.
void WriteDatasetTsv(std::ostream &out, std::span<const DatasetRow> rows);
void WriteDatasetTsv(std::ostream &out, std::span<const LabeledPair> pairs,
                     Scheme scheme);

// Malformed lines throw a data error naming the line.
std::vector<DatasetRow> ReadDatasetTsv(std::istream &in);
std::vector<DatasetRow> ReadDatasetTsv(const std::filesystem::path &path);

// {"total": n, "labels": {...}, "relations": {...}}
nlohmann::json SplitSummary(std::span<const LabeledPair> pairs, Scheme scheme);

inline constexpr int kReportSchemaVersion = 1;

// Writes train.tsv, dev.tsv and report.json into `dir` (created if
// missing). The report is `report` plus "schema_version" and per-split
// class counts under "splits". Output is a pure function of the inputs.
void EmitDataset(const DatasetSplits &splits, const std::filesystem::path &dir,
                 nlohmann::json report);

}  // namespace taxopairs

#endif  // TAXOPAIRS_DATASET_H_
