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

#include "taxopairs/pipeline.h"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <new>

#include "taxopairs/edge_tsv.h"
#include "taxopairs/filter.h"
#include "taxopairs/graph_snapshot.h"
#include "taxopairs/ingest.h"
#include "taxopairs/logging.h"
#include "taxopairs/pair_sampling.h"
#include "taxopairs/random.h"
#include "taxopairs/word_stats.h"

namespace taxopairs {

namespace fs = std::filesystem;

namespace {

template <typename T>
T Get(const nlohmann::json &value, const std::string &key) {
  try {
    return value.get<T>();
  } catch (const nlohmann::json::exception &) {
    throw ConfigError("config key '" + key + "' has the wrong type");
  }
}

fs::path Resolve(const nlohmann::json &value, const std::string &key,
                 const fs::path &base_dir) {
  fs::path p = Get<std::string>(value, key);
  if (p.empty()) throw ConfigError("config key '" + key + "' is empty");
  return p.is_relative() ? base_dir / p : p;
}

uint32_t DepthOrUnlimited(const nlohmann::json &value, const std::string &key) {
  if (value.is_null()) return kUnlimitedDepth;
  auto v = Get<int64_t>(value, key);
  if (v < 0 || v >= static_cast<int64_t>(kUnlimitedDepth)) {
    throw ConfigError("config key '" + key + "' is out of range");
  }
  return static_cast<uint32_t>(v);
}

size_t NonNegative(const nlohmann::json &value, const std::string &key) {
  auto v = Get<int64_t>(value, key);
  if (v < 0) throw ConfigError("config key '" + key + "' must be >= 0");
  return static_cast<size_t>(v);
}

nlohmann::json DumpStatsJson(const DumpReadStats &s) {
  nlohmann::json errors = nlohmann::json::array();
  for (const RecordError &e : s.errors) errors.push_back(e.ToString());
  return {{"tuples", s.tuples},
          {"records", s.records},
          {"malformed", s.malformed},
          {"invalid_utf8", s.invalid_utf8},
          {"first_errors", errors}};
}

std::ifstream OpenInput(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

template <typename F>
auto Stage(const char *name, F &&body) -> decltype(body()) {
  auto start = std::chrono::steady_clock::now();
  try {
    auto result = body();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    Log().debug("stage {} done in {} ms", name, ms);
    return result;
  } catch (const Error &e) {
    throw Error(e.kind(), std::string("stage ") + name + ": " + e.what());
  } catch (const fs::filesystem_error &e) {
    throw IoError(std::string("stage ") + name + ": " + e.what());
  } catch (const std::bad_alloc &) {
    throw IoError(std::string("stage ") + name + ": out of memory");
  }
}

}  // namespace

void ApplyPipelineJson(const nlohmann::json &json, const fs::path &base_dir,
                       PipelineConfig *config) {
  if (!json.is_object()) throw ConfigError("pipeline config must be an object");
  for (const auto &[key, value] : json.items()) {
    if (key == "edges") {
      config->edges = Resolve(value, key, base_dir);
    } else if (key == "page_dump") {
      config->page_dump = Resolve(value, key, base_dir);
    } else if (key == "categorylinks_dump") {
      config->categorylinks_dump = Resolve(value, key, base_dir);
    } else if (key == "snapshot") {
      config->snapshot = Resolve(value, key, base_dir);
    } else if (key == "write_snapshot") {
      config->write_snapshot = Resolve(value, key, base_dir);
    } else if (key == "scheme") {
      auto scheme = ParseScheme(Get<std::string>(value, key));
      if (!scheme) throw ConfigError("unknown scheme '" + value.dump() + "'");
      config->spec.scheme = *scheme;
    } else if (key == "train_size") {
      config->spec.train_size = NonNegative(value, key);
    } else if (key == "dev_size") {
      config->spec.dev_size = NonNegative(value, key);
    } else if (key == "seed") {
      config->spec.seed = Get<uint64_t>(value, key);
      config->seed_set = true;
    } else if (key == "neutral_oversample") {
      config->spec.neutral_oversample = Get<double>(value, key);
    } else if (key == "cap_to_available") {
      config->spec.cap_to_available = Get<bool>(value, key);
    } else if (key == "ancestor_max_depth") {
      config->spec.ancestor_max_depth = DepthOrUnlimited(value, key);
    } else if (key == "scorer") {
      auto name = Get<std::string>(value, key);
      if (name == "lexical_ngram") {
        config->scorer = ScorerKind::kLexicalNGram;
      } else if (name == "vectors") {
        config->scorer = ScorerKind::kPrecomputedVectors;
      } else {
        throw ConfigError("unknown scorer '" + name + "'");
      }
    } else if (key == "ngram") {
      config->ngram = Get<int>(value, key);
    } else if (key == "vectors") {
      config->vectors = Resolve(value, key, base_dir);
    } else if (key == "language_config") {
      config->language_config = Resolve(value, key, base_dir);
    } else if (key == "prune_roots") {
      config->prune_roots = Get<std::vector<std::string>>(value, key);
    } else if (key == "prune_min_depth") {
      config->prune_min_depth = DepthOrUnlimited(value, key);
    } else if (key == "prune_max_depth") {
      config->prune_max_depth = DepthOrUnlimited(value, key);
    } else if (key == "output_dir") {
      config->output_dir = Resolve(value, key, base_dir);
    } else if (key == "workers") {
      config->workers = Get<int>(value, key);
    } else if (key == "top_words") {
      config->top_words = NonNegative(value, key);
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
}

PipelineConfig LoadPipelineConfig(const fs::path &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path.string());
  nlohmann::json json;
  try {
    json = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error &e) {
    throw ConfigError("config " + path.string() + ": " + e.what());
  }
  PipelineConfig config;
  ApplyPipelineJson(json, path.parent_path(), &config);
  return config;
}

void ValidatePipelineConfig(const PipelineConfig &config, bool require_output) {
  int sources = !config.edges.empty() + !config.snapshot.empty() +
                (!config.page_dump.empty() || !config.categorylinks_dump.empty());
  if (sources != 1) {
    throw ConfigError(
        "give exactly one graph source: edges, snapshot, or page_dump with "
        "categorylinks_dump");
  }
  if (config.page_dump.empty() != config.categorylinks_dump.empty()) {
    throw ConfigError("page_dump and categorylinks_dump go together");
  }
  auto must_exist = [](const fs::path &p, const char *what) {
    if (!p.empty() && !fs::exists(p)) {
      throw ConfigError(std::string(what) + " not found: " + p.string());
    }
  };
  must_exist(config.edges, "edge file");
  must_exist(config.snapshot, "graph snapshot");
  must_exist(config.page_dump, "page dump");
  must_exist(config.categorylinks_dump, "categorylinks dump");
  must_exist(config.language_config, "language config");
  if (config.scorer == ScorerKind::kPrecomputedVectors) {
    if (config.vectors.empty()) {
      throw ConfigError("the vectors scorer needs a vector file");
    }
    must_exist(config.vectors, "vector file");
  }
  if (config.ngram < 1) throw ConfigError("ngram must be positive");
  if (config.workers < 1) throw ConfigError("workers must be positive");
  if (!config.seed_set) {
    throw ConfigError("a seed is required; runs are never seeded by the clock");
  }
  if (require_output && config.output_dir.empty()) {
    throw ConfigError("output_dir is required");
  }
  if (config.prune_min_depth != kUnlimitedDepth &&
      config.prune_max_depth < config.prune_min_depth) {
    throw ConfigError("prune_min_depth exceeds prune_max_depth");
  }
  ValidateSpec(config.spec);
}

void ResolveLanguageConfig(PipelineConfig *config) {
  if (config->language_config.empty()) return;
  std::ifstream in = OpenInput(config->language_config);
  config->spec.filter = LoadLanguageConfig(in, config->spec.filter);
}

std::unique_ptr<SimilarityScorer> MakeScorer(const PipelineConfig &config) {
  if (config.scorer == ScorerKind::kLexicalNGram) {
    return std::make_unique<LexicalNGramScorer>(config.ngram);
  }
  std::ifstream in = OpenInput(config.vectors);
  VectorLoadReport report;
  VectorTable table = LoadVectors(in, &report);
  for (const std::string &w : report.warnings) Log().warn("{}", w);
  Log().info("loaded {} vectors of dimension {}", table.vectors.size(),
             table.dimension);
  return std::make_unique<VectorScorer>(std::move(table));
}

CategoryGraph LoadGraph(const PipelineConfig &config, nlohmann::json *report) {
  CategoryGraph graph;
  nlohmann::json input;
  if (!config.snapshot.empty()) {
    graph = Stage("load-snapshot", [&] { return ReadSnapshot(config.snapshot); });
    input = {{"kind", "snapshot"}};
  } else {
    std::vector<RawEdge> edges = Stage("ingest", [&] {
      if (!config.edges.empty()) {
        std::ifstream in = OpenInput(config.edges);
        std::vector<RecordError> errors;
        auto result = ReadEdgeTsv(in, &errors);
        for (size_t i = 0; i < errors.size() && i < 20; ++i) {
          Log().warn("edge file {}", errors[i].ToString());
        }
        nlohmann::json first = nlohmann::json::array();
        for (size_t i = 0; i < errors.size() && i < 100; ++i) {
          first.push_back(errors[i].ToString());
        }
        input = {{"kind", "edge_tsv"},
                 {"edges", result.size()},
                 {"malformed_lines", errors.size()},
                 {"first_errors", first}};
        return result;
      }
      std::ifstream page = OpenInput(config.page_dump);
      std::ifstream links = OpenInput(config.categorylinks_dump);
      IngestStats stats;
      auto result = IngestCategoryDumps(page, links, DumpLayout{}, &stats);
      input = {{"kind", "sql_dump"},
               {"page", DumpStatsJson(stats.page)},
               {"categorylinks", DumpStatsJson(stats.categorylinks)},
               {"category_pages", stats.category_pages},
               {"subcat_links", stats.subcat_links},
               {"non_subcat_links", stats.non_subcat_links},
               {"unresolved_links", stats.unresolved_links},
               {"edges", stats.edges}};
      return result;
    });
    Log().info("ingested {} raw edges", edges.size());
    GraphBuildStats build;
    graph = Stage("build-graph", [&] { return CategoryGraph::Build(edges, &build); });
    input["build"] = {{"input_edges", build.input_edges},
                      {"duplicate_edges", build.duplicate_edges},
                      {"self_loops", build.self_loops}};
    if (!config.write_snapshot.empty()) {
      Stage("write-snapshot", [&] {
        WriteSnapshot(graph, config.write_snapshot);
        return 0;
      });
    }
  }
  nlohmann::json graph_json = {{"nodes", graph.node_count()},
                               {"edges", graph.edge_count()}};
  if (!config.prune_roots.empty()) {
    graph = Stage("prune", [&] {
      std::vector<NodeId> roots;
      for (const std::string &title : config.prune_roots) {
        auto id = graph.Find(title);
        if (!id) throw ConfigError("prune root not in graph: " + title);
        roots.push_back(*id);
      }
      DepthMap depths = DepthFromRoots(graph, roots);
      return PruneByDepth(graph, depths, config.prune_min_depth,
                          config.prune_max_depth);
    });
    nlohmann::json max = config.prune_max_depth == kUnlimitedDepth
                             ? nlohmann::json(nullptr)
                             : nlohmann::json(config.prune_max_depth);
    graph_json["pruned"] = {{"roots", config.prune_roots},
                            {"min_depth", config.prune_min_depth},
                            {"max_depth", max},
                            {"nodes", graph.node_count()},
                            {"edges", graph.edge_count()}};
  }
  Log().info("graph has {} nodes and {} edges", graph.node_count(),
             graph.edge_count());
  (*report)["input"] = std::move(input);
  (*report)["graph"] = std::move(graph_json);
  return graph;
}

DatasetSplits BuildDataset(const CategoryGraph &graph, const DatasetSpec &spec,
                           const SimilarityScorer &scorer, int workers,
                           nlohmann::json *report) {
  ValidateSpec(spec);
  TitleFilter filter = Stage("filter", [&] {
    return TitleFilter(graph, spec.filter, workers);
  });
  Log().info("{} of {} titles pass the filter", filter.tally().passed(),
             filter.tally().total());

  RelationCounts dev_q = PlanQuotas(spec.scheme, spec.dev_size);
  RelationCounts train_q = PlanQuotas(spec.scheme, spec.train_size);
  auto quota = [&](RelationLabel r) {
    return dev_q[Index(r)] + train_q[Index(r)];
  };

  PairPools pools;
  nlohmann::json extract = nlohmann::json::object();
  std::vector<ScoredPair> neutral;
  Stage("extract", [&] {
    DirectPairStats direct_stats;
    for (LabeledPair &p : ExtractDirectPairs(graph, filter, spec.seed, &direct_stats)) {
      pools[Index(p.label)].push_back(std::move(p));
    }
    extract["direct"] = direct_stats.ToJson();
    Log().info("direct pairs: {} child, {} parent", direct_stats.child,
               direct_stats.parent);

    if (UsesSiblings(spec.scheme) && quota(RelationLabel::kSibling) > 0) {
      SiblingOptions options;
      options.needed = quota(RelationLabel::kSibling);
      options.seed = spec.seed;
      options.max_depth = spec.ancestor_max_depth;
      options.allow_shortfall = spec.cap_to_available;
      SiblingStats stats;
      pools[Index(RelationLabel::kSibling)] =
          SampleSiblingPairs(graph, filter, options, &stats);
      extract["sibling"] = stats.ToJson();
      Log().info("sibling pairs: {}", stats.selected);
    }

    if (quota(RelationLabel::kNeutral) > 0) {
      NeutralOptions options;
      options.needed = quota(RelationLabel::kNeutral);
      options.oversample = spec.neutral_oversample;
      options.seed = spec.seed;
      options.exclude_siblings = UsesSiblings(spec.scheme);
      options.max_depth = spec.ancestor_max_depth;
      options.workers = workers;
      options.allow_shortfall = spec.cap_to_available;
      NeutralStats stats;
      neutral = SampleNeutralPairs(graph, filter, scorer, options, &stats);
      extract["neutral"] = stats.ToJson();
      Log().info("neutral pairs: {} selected from {} draws", stats.selected,
                 stats.draws);
    }
    return 0;
  });

  DatasetSplits splits = Stage("assemble", [&] {
    RelationCounts available{};
    for (RelationLabel r : kAllRelations) available[Index(r)] = pools[Index(r)].size();
    available[Index(RelationLabel::kNeutral)] = neutral.size();
    // Under capping, keep the best-ranked neutrals for the reduced quota.
    SplitSizes sizes = FeasibleSizes(spec, available);
    size_t keep = PlanQuotas(spec.scheme, sizes.dev)[Index(RelationLabel::kNeutral)] +
                  PlanQuotas(spec.scheme, sizes.train)[Index(RelationLabel::kNeutral)];
    if (neutral.size() > keep) neutral.resize(keep);
    auto &neutral_pool = pools[Index(RelationLabel::kNeutral)];
    for (ScoredPair &s : neutral) neutral_pool.push_back(std::move(s.pair));

    AssemblyStats stats;
    DatasetSplits result = AssembleDataset(spec, std::move(pools), &stats);
    (*report)["assembly"] = stats.ToJson();
    if (stats.capped) {
      Log().warn("splits capped to train {} / dev {}", stats.actual.train,
                 stats.actual.dev);
    }
    return result;
  });
  (*report)["filter"] = filter.tally().ToJson();
  (*report)["extract"] = std::move(extract);
  return splits;
}

std::string ConfigHash(const PipelineConfig &config,
                       const SimilarityScorer &scorer) {
  nlohmann::json max = config.prune_max_depth == kUnlimitedDepth
                           ? nlohmann::json(nullptr)
                           : nlohmann::json(config.prune_max_depth);
  nlohmann::json canonical = {
      {"spec", config.spec.ToJson()},
      {"scorer", scorer.Describe()},
      {"prune", {{"roots", config.prune_roots},
                 {"min_depth", config.prune_min_depth},
                 {"max_depth", max}}}};
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(Fnv1a64(canonical.dump())));
  return buf;
}

PipelineResult RunPipeline(PipelineConfig config) {
  Stage("config", [&] {
    ValidatePipelineConfig(config);
    ResolveLanguageConfig(&config);
    ValidateSpec(config.spec);
    return 0;
  });
  // Load the scorer first so a bad vector file fails before any extraction.
  std::unique_ptr<SimilarityScorer> scorer =
      Stage("scorer", [&] { return MakeScorer(config); });

  PipelineResult result;
  nlohmann::json &report = result.report;
  report["seed"] = config.spec.seed;
  report["config_hash"] = ConfigHash(config, *scorer);
  report["spec"] = config.spec.ToJson();
  report["scorer"] = scorer->Describe();

  CategoryGraph graph = LoadGraph(config, &report);
  result.splits = BuildDataset(graph, config.spec, *scorer, config.workers, &report);

  if (config.top_words > 0) {
    auto rows = ToRows(result.splits.train, result.splits.scheme);
    report["top_words"] = TopFrequentWords(rows, config.top_words).ToJson();
  }
  Stage("emit", [&] {
    EmitDataset(result.splits, config.output_dir, report);
    return 0;
  });
  Log().info("wrote {} train and {} dev pairs to {}", result.splits.train.size(),
             result.splits.dev.size(), config.output_dir.string());
  return result;
}

}  // namespace taxopairs
