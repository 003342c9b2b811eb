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

#ifndef TAXOPAIRS_PIPELINE_H_
#define TAXOPAIRS_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "taxopairs/category_graph.h"
#include "taxopairs/dataset.h"
#include "taxopairs/similarity.h"

namespace taxopairs {

enum class ScorerKind { kLexicalNGram, kPrecomputedVectors };

struct PipelineConfig {
  // Exactly one graph source: an edge TSV, a page/categorylinks dump pair,
  // or a graph snapshot.
  std::filesystem::path edges;
  std::filesystem::path page_dump;
  std::filesystem::path categorylinks_dump;
  std::filesystem::path snapshot;
  // Where to cache the built graph, if anywhere.
  std::filesystem::path write_snapshot;

  DatasetSpec spec;
  bool seed_set = false;

  ScorerKind scorer = ScorerKind::kLexicalNGram;
  int ngram = 3;
  std::filesystem::path vectors;

  std::filesystem::path language_config;

  // Depth-band pruning; disabled when prune_roots is empty.
  std::vector<std::string> prune_roots;
  uint32_t prune_min_depth = 0;
  uint32_t prune_max_depth = kUnlimitedDepth;

  std::filesystem::path output_dir;
  int workers = 1;
  size_t top_words = 20;
};

// Reads the keys of a JSON config object into `config`. Relative paths are
// resolved against `base_dir`. Unknown keys are a config error.
void ApplyPipelineJson(const nlohmann::json &json,
                       const std::filesystem::path &base_dir,
                       PipelineConfig *config);

PipelineConfig LoadPipelineConfig(const std::filesystem::path &path);

// Checks that exactly one graph source is given, that every referenced
// input exists and that a seed is set. Throws a config error otherwise.
void ValidatePipelineConfig(const PipelineConfig &config,
                            bool require_output = true);

// Applies the language config file, if any, to config->spec.filter.
void ResolveLanguageConfig(PipelineConfig *config);

std::unique_ptr<SimilarityScorer> MakeScorer(const PipelineConfig &config);

// Reads the graph source (and prunes it). Adds "input" and "graph" sections
// to *report.
CategoryGraph LoadGraph(const PipelineConfig &config, nlohmann::json *report);

// Extraction and assembly over a built graph. Adds "filter", "extract" and
// "assembly" sections to *report.
DatasetSplits BuildDataset(const CategoryGraph &graph, const DatasetSpec &spec,
                           const SimilarityScorer &scorer, int workers,
                           nlohmann::json *report);

// Hex FNV-1a of the canonical JSON of everything that shapes the output.
std::string ConfigHash(const PipelineConfig &config,
                       const SimilarityScorer &scorer);

struct PipelineResult {
  DatasetSplits splits;
  nlohmann::json report;
};

// Whole pipeline. Errors are rethrown with the failing stage's name
// prepended and their kind unchanged.
PipelineResult RunPipeline(PipelineConfig config);

}  // namespace taxopairs

#endif  // TAXOPAIRS_PIPELINE_H_
