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

#include "taxopairs/taxonomy_source.h"

#include <algorithm>
#include <map>

#include "taxopairs/random.h"

namespace taxopairs {

TaxonomySource IngestTaxonomy(std::istream &in, TaxonomyFormat format,
                              std::string name, std::string provenance,
                              std::vector<RecordError> *errors) {
  if (name.empty()) throw ConfigError("taxonomy source needs a name");
  TaxonomySource source;
  source.name = std::move(name);
  source.provenance = std::move(provenance);
  switch (format) {
    case TaxonomyFormat::kEdgeTsv:
      source.edges = ReadEdgeTsv(in, errors);
      break;
  }
  return source;
}

namespace {

std::vector<DatasetRow> StratifiedSample(std::span<const DatasetRow> rows,
                                         size_t quota, uint64_t seed,
                                         std::string_view source) {
  std::vector<DatasetRow> out;
  if (quota == 0) return out;
  std::map<OutputLabel, std::vector<size_t>> by_label;
  for (size_t i = 0; i < rows.size(); ++i) by_label[rows[i].label].push_back(i);
  if (by_label.empty()) {
    throw DataError("source " + std::string(source) + " is empty, needs " +
                    std::to_string(quota) + " rows");
  }
  size_t k = by_label.size();
  size_t i = 0;
  for (auto &[label, indices] : by_label) {
    size_t q = quota / k + (i < quota % k);
    ++i;
    if (indices.size() < q) {
      throw DataError("source " + std::string(source) + " has " +
                      std::to_string(indices.size()) + " '" +
                      std::string(OutputLabelName(label)) + "' rows, needs " +
                      std::to_string(q));
    }
    Rng rng(DeriveSeed(seed, "mix/" + std::string(source) + "/" +
                                 std::string(OutputLabelName(label))));
    rng.Shuffle(std::span<size_t>(indices));
    for (size_t j = 0; j < q; ++j) out.push_back(rows[indices[j]]);
  }
  return out;
}

}  // namespace

std::vector<DatasetRow> MixSources(std::span<const DatasetRow> a,
                                   std::span<const DatasetRow> b,
                                   size_t quota_each, uint64_t seed) {
  std::vector<DatasetRow> out = StratifiedSample(a, quota_each, seed, "a");
  std::vector<DatasetRow> second = StratifiedSample(b, quota_each, seed, "b");
  out.insert(out.end(), std::make_move_iterator(second.begin()),
             std::make_move_iterator(second.end()));
  Rng(DeriveSeed(seed, "mix/shuffle")).Shuffle(std::span<DatasetRow>(out));
  return out;
}

}  // namespace taxopairs
