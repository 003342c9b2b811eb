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

// Command-line entry point.
//
//   taxopairs ingest      --page P --categorylinks C --output edges.tsv
//   taxopairs build-graph (--edges E | --page P --categorylinks C) --output G
//   taxopairs extract     (--graph G | --edges E) --seed S --output DIR
//   taxopairs run         --config CONFIG.json [overrides]
//   taxopairs stats       --input train.tsv --output words.json
//   taxopairs mix         --a A.tsv --b B.tsv --quota N --seed S --output M.tsv
//
// Exit codes: 0 success, 1 config error, 2 data error, 3 I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "taxopairs/category_graph.h"
#include "taxopairs/dataset.h"
#include "taxopairs/edge_tsv.h"
#include "taxopairs/error.h"
#include "taxopairs/graph_snapshot.h"
#include "taxopairs/ingest.h"
#include "taxopairs/logging.h"
#include "taxopairs/pipeline.h"
#include "taxopairs/taxonomy_source.h"
#include "taxopairs/word_stats.h"

namespace taxopairs {
namespace {

struct Overrides {
  std::optional<std::string> config;
  std::optional<std::string> edges;
  std::optional<std::string> page;
  std::optional<std::string> categorylinks;
  std::optional<std::string> graph;
  std::optional<std::string> snapshot_out;
  std::optional<std::string> scheme;
  std::optional<size_t> train_size;
  std::optional<size_t> dev_size;
  std::optional<uint64_t> seed;
  std::optional<double> oversample;
  bool cap_to_available = false;
  std::optional<std::string> scorer;
  std::optional<int> ngram;
  std::optional<std::string> vectors;
  std::optional<std::string> language_config;
  std::vector<std::string> prune_roots;
  std::optional<uint32_t> min_depth;
  std::optional<uint32_t> max_depth;
  std::optional<std::string> output;
  std::optional<int> workers;
  std::optional<size_t> top_words;
};

void AddGraphSourceOptions(CLI::App *cmd, Overrides *o) {
  cmd->add_option("--edges", o->edges, "Edge TSV (child<TAB>parent)");
  cmd->add_option("--page", o->page, "page table SQL dump");
  cmd->add_option("--categorylinks", o->categorylinks,
                  "categorylinks table SQL dump");
}

void AddPruneOptions(CLI::App *cmd, Overrides *o) {
  cmd->add_option("--prune-root", o->prune_roots, "Root title for depth pruning");
  cmd->add_option("--min-depth", o->min_depth, "Minimum depth kept");
  cmd->add_option("--max-depth", o->max_depth, "Maximum depth kept");
}

void AddDatasetOptions(CLI::App *cmd, Overrides *o) {
  cmd->add_option("--graph", o->graph, "Graph snapshot");
  cmd->add_option("--write-snapshot", o->snapshot_out, "Cache the built graph here");
  cmd->add_option("--scheme", o->scheme,
                  "threeway, fourway, binary_child_vs_rest, "
                  "binary_child_parent_vs_rest");
  cmd->add_option("--train-size", o->train_size);
  cmd->add_option("--dev-size", o->dev_size);
  cmd->add_option("--seed", o->seed, "Required unless set in the config");
  cmd->add_option("--oversample", o->oversample, "Neutral candidate factor");
  cmd->add_flag("--cap-to-available", o->cap_to_available,
                "Shrink splits to what the graph supports");
  cmd->add_option("--scorer", o->scorer, "lexical_ngram or vectors");
  cmd->add_option("--ngram", o->ngram);
  cmd->add_option("--vectors", o->vectors, "title<TAB>vector file");
  cmd->add_option("--language-config", o->language_config);
  cmd->add_option("--output", o->output, "Output directory");
  cmd->add_option("--workers", o->workers);
  cmd->add_option("--top-words", o->top_words);
  AddGraphSourceOptions(cmd, o);
  AddPruneOptions(cmd, o);
}

PipelineConfig BuildConfig(const Overrides &o) {
  PipelineConfig config;
  if (o.config) config = LoadPipelineConfig(*o.config);
  nlohmann::json j = nlohmann::json::object();
  if (o.edges) j["edges"] = *o.edges;
  if (o.page) j["page_dump"] = *o.page;
  if (o.categorylinks) j["categorylinks_dump"] = *o.categorylinks;
  if (o.graph) j["snapshot"] = *o.graph;
  if (o.snapshot_out) j["write_snapshot"] = *o.snapshot_out;
  if (o.scheme) j["scheme"] = *o.scheme;
  if (o.train_size) j["train_size"] = *o.train_size;
  if (o.dev_size) j["dev_size"] = *o.dev_size;
  if (o.seed) j["seed"] = *o.seed;
  if (o.oversample) j["neutral_oversample"] = *o.oversample;
  if (o.cap_to_available) j["cap_to_available"] = true;
  if (o.scorer) j["scorer"] = *o.scorer;
  if (o.ngram) j["ngram"] = *o.ngram;
  if (o.vectors) j["vectors"] = *o.vectors;
  if (o.language_config) j["language_config"] = *o.language_config;
  if (!o.prune_roots.empty()) j["prune_roots"] = o.prune_roots;
  if (o.min_depth) j["prune_min_depth"] = *o.min_depth;
  if (o.max_depth) j["prune_max_depth"] = *o.max_depth;
  if (o.output) j["output_dir"] = *o.output;
  if (o.workers) j["workers"] = *o.workers;
  if (o.top_words) j["top_words"] = *o.top_words;

  // A graph source on the command line replaces the one in the config.
  if (o.edges || o.page || o.categorylinks || o.graph) {
    config.edges.clear();
    config.page_dump.clear();
    config.categorylinks_dump.clear();
    config.snapshot.clear();
  }
  // Flag paths are relative to the working directory.
  ApplyPipelineJson(j, std::filesystem::path(), &config);
  return config;
}

std::ofstream OpenOutput(const std::string &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  return out;
}

void Finish(std::ofstream &out, const std::string &path) {
  out.close();
  if (!out) throw IoError("failed writing " + path);
}

std::ifstream OpenIn(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return in;
}

int RunIngest(const Overrides &o, const std::optional<std::string> &report_path) {
  if (!o.page || !o.categorylinks || !o.output) {
    throw ConfigError("ingest needs --page, --categorylinks and --output");
  }
  std::ifstream page = OpenIn(*o.page);
  std::ifstream links = OpenIn(*o.categorylinks);
  std::ofstream out = OpenOutput(*o.output);
  IngestStats stats;
  IngestCategoryDumps(
      page, links, DumpLayout{},
      [&](RawEdge &&e) {
        RawEdge one[] = {std::move(e)};
        WriteEdgeTsv(out, one);
      },
      &stats);
  Finish(out, *o.output);
  Log().info("{} category pages, {} subcat links, {} edges ({} unresolved)",
             stats.category_pages, stats.subcat_links, stats.edges,
             stats.unresolved_links);
  Log().info("page dump: {} malformed, categorylinks dump: {} malformed",
             stats.page.error_count(), stats.categorylinks.error_count());
  if (report_path) {
    nlohmann::json r = {{"category_pages", stats.category_pages},
                        {"subcat_links", stats.subcat_links},
                        {"non_subcat_links", stats.non_subcat_links},
                        {"unresolved_links", stats.unresolved_links},
                        {"edges", stats.edges},
                        {"page_records", stats.page.records},
                        {"page_errors", stats.page.error_count()},
                        {"categorylinks_records", stats.categorylinks.records},
                        {"categorylinks_errors", stats.categorylinks.error_count()}};
    std::ofstream rf = OpenOutput(*report_path);
    rf << r.dump(2) << '\n';
    Finish(rf, *report_path);
  }
  return 0;
}

int RunBuildGraph(const Overrides &o) {
  if (!o.output) throw ConfigError("build-graph needs --output");
  PipelineConfig config = BuildConfig(o);
  config.seed_set = true;  // no sampling happens here
  config.output_dir.clear();
  config.write_snapshot.clear();
  ValidatePipelineConfig(config, /*require_output=*/false);
  if (!config.snapshot.empty()) {
    throw ConfigError("build-graph reads edges or dumps, not a snapshot");
  }
  nlohmann::json report;
  CategoryGraph graph = LoadGraph(config, &report);
  WriteSnapshot(graph, std::filesystem::path(*o.output));
  return 0;
}

int RunDataset(const Overrides &o) {
  PipelineConfig config = BuildConfig(o);
  RunPipeline(std::move(config));
  return 0;
}

int RunStats(const std::string &input, const std::string &output, size_t k,
             const std::optional<std::string> &stopwords_path) {
  auto rows = ReadDatasetTsv(std::filesystem::path(input));
  StopwordPolicy policy;
  if (stopwords_path) {
    std::ifstream in = OpenIn(*stopwords_path);
    std::string word;
    while (in >> word) policy.stopwords.insert(word);
  }
  FrequencyReport report = TopFrequentWords(rows, k, policy);
  std::ofstream out = OpenOutput(output);
  nlohmann::json j = {{"rows", rows.size()}, {"k", k}, {"top_words", report.ToJson()}};
  out << j.dump(2) << '\n';
  Finish(out, output);
  return 0;
}

int RunMix(const std::string &a, const std::string &b, size_t quota,
           uint64_t seed, const std::string &output) {
  auto rows_a = ReadDatasetTsv(std::filesystem::path(a));
  auto rows_b = ReadDatasetTsv(std::filesystem::path(b));
  auto mixed = MixSources(rows_a, rows_b, quota, seed);
  std::ofstream out = OpenOutput(output);
  WriteDatasetTsv(out, std::span<const DatasetRow>(mixed));
  Finish(out, output);
  Log().info("mixed {} rows", mixed.size());
  return 0;
}

int Main(int argc, char **argv) {
  CLI::App app{"Build phrase-pair entailment datasets from category graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  bool verbose = false;
  bool quiet = false;
  app.add_flag("-v,--verbose", verbose, "Debug logging");
  app.add_flag("-q,--quiet", quiet, "Warnings and errors only");

  Overrides ingest_o;
  std::optional<std::string> ingest_report;
  auto *ingest = app.add_subcommand("ingest", "SQL dumps to an edge TSV");
  ingest->add_option("--page", ingest_o.page)->required();
  ingest->add_option("--categorylinks", ingest_o.categorylinks)->required();
  ingest->add_option("--output", ingest_o.output)->required();
  ingest->add_option("--report", ingest_report, "Ingest counts as JSON");

  Overrides build_o;
  auto *build = app.add_subcommand("build-graph", "Edges or dumps to a graph snapshot");
  AddGraphSourceOptions(build, &build_o);
  AddPruneOptions(build, &build_o);
  build->add_option("--output", build_o.output)->required();

  Overrides extract_o;
  auto *extract = app.add_subcommand("extract", "Graph to train/dev datasets");
  AddDatasetOptions(extract, &extract_o);
  extract->add_option("--config", extract_o.config, "Pipeline config JSON");

  Overrides run_o;
  auto *run = app.add_subcommand("run", "Whole pipeline from a config file");
  AddDatasetOptions(run, &run_o);
  run->add_option("--config", run_o.config, "Pipeline config JSON")->required();

  std::string stats_input, stats_output;
  size_t stats_k = 20;
  std::optional<std::string> stats_stopwords;
  auto *stats = app.add_subcommand("stats", "Word frequencies of a dataset");
  stats->add_option("--input", stats_input)->required();
  stats->add_option("--output", stats_output)->required();
  stats->add_option("-k,--top", stats_k, "Number of words");
  stats->add_option("--stopwords", stats_stopwords, "Whitespace-separated list");

  std::string mix_a, mix_b, mix_output;
  size_t mix_quota = 0;
  uint64_t mix_seed = 0;
  auto *mix = app.add_subcommand("mix", "Balanced sample from two datasets");
  mix->add_option("--a", mix_a)->required();
  mix->add_option("--b", mix_b)->required();
  mix->add_option("--quota", mix_quota, "Rows from each input")->required();
  mix->add_option("--seed", mix_seed)->required();
  mix->add_option("--output", mix_output)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ErrorKind::kConfig);
  }

  Log().set_level(verbose ? spdlog::level::debug
                  : quiet ? spdlog::level::warn
                          : spdlog::level::info);
  try {
    if (*ingest) return RunIngest(ingest_o, ingest_report);
    if (*build) return RunBuildGraph(build_o);
    if (*extract) {
      if (!extract_o.graph && !extract_o.edges && !extract_o.page &&
          !extract_o.config) {
        throw ConfigError("extract needs --graph, --edges or --config");
      }
      return RunDataset(extract_o);
    }
    if (*run) return RunDataset(run_o);
    if (*stats) return RunStats(stats_input, stats_output, stats_k, stats_stopwords);
    if (*mix) return RunMix(mix_a, mix_b, mix_quota, mix_seed, mix_output);
  } catch (const Error &e) {
    Log().error("{}", e.what());
    return static_cast<int>(e.kind());
  } catch (const std::exception &e) {
    Log().error("{}", e.what());
    return static_cast<int>(ErrorKind::kIo);
  }
  return 0;
}

}  // namespace
}  // namespace taxopairs

int main(int argc, char **argv) { return taxopairs::Main(argc, argv); }
