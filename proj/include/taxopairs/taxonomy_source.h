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

#ifndef TAXOPAIRS_TAXONOMY_SOURCE_H_
#define TAXOPAIRS_TAXONOMY_SOURCE_H_

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <vector>

#include "taxopairs/edge_tsv.h"
#include "taxopairs/error.h"
#include "taxopairs/labels.h"

namespace taxopairs {

// An external hierarchy already rendered to text edges, e.g. WordNet
// hyponym/hypernym lemmas or Wikidata subclass-of labels. Edges may contain
// cycles.
struct TaxonomySource {
  std::string name;
  std::vector<RawEdge> edges;
  std::string provenance;
};

enum class TaxonomyFormat { kEdgeTsv };

// Malformed lines are appended to *errors (when non-null) and skipped.
// Throws a config error on an empty name.
TaxonomySource IngestTaxonomy(std::istream &in, TaxonomyFormat format,
                              std::string name, std::string provenance = {},
                              std::vector<RecordError> *errors = nullptr);

// Seeded stratified subsample of `quota_each` rows from each input. Within a
// source the quota is split evenly over the labels that source uses (in
// label order, remainder to the earliest), each label sampled uniformly
// without replacement. The two samples are concatenated and reshuffled.
// Throws a data error naming the source and label on a shortfall.
std::vector<DatasetRow> MixSources(std::span<const DatasetRow> a,
                                   std::span<const DatasetRow> b,
                                   size_t quota_each, uint64_t seed);

}  // namespace taxopairs

#endif  // TAXOPAIRS_TAXONOMY_SOURCE_H_
