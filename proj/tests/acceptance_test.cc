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

// Acceptance suite. Prints one PASS / FAIL / SKIP line per criterion and
// exits nonzero if any criterion fails.

#include <sys/resource.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.h"
#include "taxopairs/category_graph.h"
#include "taxopairs/dataset.h"
#include "taxopairs/edge_tsv.h"
#include "taxopairs/filter.h"
#include "taxopairs/graph_snapshot.h"
#include "taxopairs/ingest.h"
#include "taxopairs/logging.h"
#include "taxopairs/pair_sampling.h"
#include "taxopairs/pipeline.h"
#include "taxopairs/similarity.h"
#include "taxopairs/word_stats.h"
#include "test_util.h"

namespace taxopairs {
namespace {

namespace fs = std::filesystem;
using testing::MicroDir;
using testing::ReadFile;
using testing::TempDir;

enum class Outcome { kPass, kFail, kSkip };

struct Verdict {
  Outcome outcome;
  std::string detail;
};

Verdict Pass(std::string d) { return {Outcome::kPass, std::move(d)}; }
Verdict Fail(std::string d) { return {Outcome::kFail, std::move(d)}; }
Verdict Skip(std::string d) { return {Outcome::kSkip, std::move(d)}; }

const std::vector<Scheme> kSchemes = {Scheme::kThreeway, Scheme::kFourway,
                                      Scheme::kBinaryChildVsRest,
                                      Scheme::kBinaryChildParentVsRest};

CategoryGraph FixtureGraph() {
  std::ifstream in(MicroDir() / "edges.tsv");
  auto edges = ReadEdgeTsv(in);
  return CategoryGraph::Build(edges);
}

DatasetSplits MakeSplits(const CategoryGraph &graph, Scheme scheme,
                         size_t train, size_t dev, uint64_t seed,
                         bool cap = false, int workers = 1,
                         nlohmann::json *report = nullptr,
                         FilterConfig filter = {}) {
  DatasetSpec spec;
  spec.scheme = scheme;
  spec.train_size = train;
  spec.dev_size = dev;
  spec.seed = seed;
  spec.cap_to_available = cap;
  spec.filter = std::move(filter);
  LexicalNGramScorer scorer(3);
  nlohmann::json local;
  return BuildDataset(graph, spec, scorer, workers, report ? report : &local);
}

std::vector<oracle::Row> SplitRows(const DatasetSplits &s) {
  std::vector<oracle::Row> rows;
  for (const auto *split : {&s.train, &s.dev}) {
    for (const DatasetRow &r : ToRows(*split, s.scheme)) {
      rows.push_back({r.text1, r.text2, std::string(OutputLabelName(r.label))});
    }
  }
  return rows;
}

std::string SplitText(const std::vector<LabeledPair> &pairs, Scheme scheme) {
  std::ostringstream out;
  WriteDatasetTsv(out, pairs, scheme);
  return out.str();
}

// -------------------------------------------------------------------------
// 1. Golden pipeline.

Verdict GoldenPipeline() {
  TempDir tmp;
  double slowest = 0;
  int runs = 0;
  for (const char *scheme : {"threeway", "fourway"}) {
    fs::path golden = testing::DataDir() / "golden" / scheme;
    fs::path config = MicroDir() / (std::string(scheme) + ".json");
    std::vector<std::string> flags = {"", "", "", "--workers 1", "--workers 4",
                                      "--workers 8"};
    for (size_t i = 0; i < flags.size(); ++i) {
      fs::path out = tmp / (std::string(scheme) + std::to_string(i));
      auto start = std::chrono::steady_clock::now();
      int code = testing::RunCli("run -q --config '" + config.string() +
                                 "' --output '" + out.string() + "' " + flags[i]);
      double secs = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
      slowest = std::max(slowest, secs);
      ++runs;
      if (code != 0) {
        return Fail(std::string(scheme) + " run exited with " + std::to_string(code));
      }
      for (const char *file : {"train.tsv", "dev.tsv", "report.json"}) {
        if (ReadFile(out / file) != ReadFile(golden / file)) {
          return Fail(std::string(scheme) + "/" + file + " differs from golden (" +
                      (flags[i].empty() ? "repeat run" : flags[i]) + ")");
        }
      }
    }
  }
  if (slowest >= 5.0) return Fail("slowest run took " + std::to_string(slowest) + " s");
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "%d runs (3 repeats + workers 1/4/8, threeway and fourway) "
                "byte-identical to golden; slowest %.3f s",
                runs, slowest);
  return Pass(buf);
}

// -------------------------------------------------------------------------
// 2. Label soundness.

bool RowSound(const oracle::Graph &g, const oracle::Row &r, Scheme scheme) {
  bool fourway_like = scheme != Scheme::kThreeway;
  auto holds = [&](const char *relation) {
    return oracle::LabelHolds(g, r.text1, r.text2, relation, fourway_like);
  };
  if (r.label == "child" || r.label == "parent" || r.label == "neutral" ||
      r.label == "sibling") {
    return holds(r.label.c_str());
  }
  if (scheme == Scheme::kBinaryChildVsRest) {
    if (r.label == "entail") return holds("child");
    return holds("parent") || holds("neutral") || holds("sibling");
  }
  if (r.label == "entail") return holds("child") || holds("parent");
  return holds("neutral") || holds("sibling");
}

Verdict LabelSoundness() {
  oracle::Graph g = oracle::Graph::FromTsv((MicroDir() / "edges.tsv").string());
  CategoryGraph graph = FixtureGraph();
  size_t checked = 0;
  for (Scheme scheme : kSchemes) {
    for (uint64_t seed : {42ull, 7ull, 2026ull}) {
      auto splits = MakeSplits(graph, scheme, 99, 99, seed);
      for (const auto &row : SplitRows(splits)) {
        ++checked;
        if (!RowSound(g, row, scheme)) {
          return Fail(std::string(SchemeName(scheme)) + ": '" + row.text1 +
                      "' / '" + row.text2 + "' is not " + row.label);
        }
      }
    }
  }
  for (const char *scheme : {"threeway", "fourway"}) {
    Scheme s = *ParseScheme(scheme);
    for (const char *file : {"train.tsv", "dev.tsv"}) {
      for (const auto &row : oracle::ReadRows(
               (testing::DataDir() / "golden" / scheme / file).string())) {
        ++checked;
        if (!RowSound(g, row, s)) {
          return Fail(std::string("golden ") + scheme + ": '" + row.text1 +
                      "' / '" + row.text2 + "' is not " + row.label);
        }
      }
    }
  }
  return Pass(std::to_string(checked) + " emitted pairs re-derived, all sound");
}

// -------------------------------------------------------------------------
// 3. Filter suite.

std::string RandomTitle(std::mt19937_64 &rng) {
  static const std::vector<std::string> kWords = {
      "music", "Armenian", "of", "In", "BY", "lists", "Stubs", "about", "to",
      "from", "at", "history", "café", "Curaçao", "culture", "offset", "into",
      "bystanders", "2010s", "1", "\xD9\xA3", "St.", "Wham!", "why?", "x",
      "Москва", "société", "art", "tofrom", "A-B", "O'Neil", "listsx"};
  std::uniform_int_distribution<int> count(1, 12);
  std::uniform_int_distribution<size_t> pick(0, kWords.size() - 1);
  int n = count(rng);
  std::string t;
  for (int i = 0; i < n; ++i) {
    if (i) t += ' ';
    t += kWords[pick(rng)];
  }
  return t;
}

Verdict FilterSuite() {
  // Rule agreement on random titles.
  std::mt19937_64 rng(1234);
  FilterConfig config;
  std::vector<std::string> titles;
  size_t rejected = 0;
  for (int i = 0; i < 1000; ++i) {
    std::string t = RandomTitle(rng);
    bool lib = PassesFilter(t, config);
    bool ref = !oracle::TitleViolates(t);
    if (lib != ref) return Fail("rule disagreement on '" + t + "'");
    rejected += !lib;
    titles.push_back(std::move(t));
  }
  if (rejected == 0 || rejected == 1000) return Fail("random titles not discriminating");

  // Emitted outputs: the fixture plus a graph over the random titles.
  std::vector<RawEdge> edges;
  std::uniform_int_distribution<size_t> pick(0, titles.size() - 1);
  for (size_t i = 0; i < titles.size(); ++i) {
    for (int k = 0; k < 2; ++k) edges.push_back({titles[i], titles[pick(rng)]});
  }
  CategoryGraph random_graph = CategoryGraph::Build(edges);
  CategoryGraph fixture = FixtureGraph();
  size_t checked_titles = 0;
  for (const CategoryGraph *g : {&fixture, &random_graph}) {
    for (Scheme scheme : kSchemes) {
      auto splits = MakeSplits(*g, scheme, 100000, 5000, 42, /*cap=*/true);
      for (const auto &row : SplitRows(splits)) {
        for (const std::string *t : {&row.text1, &row.text2}) {
          ++checked_titles;
          if (oracle::TitleViolates(*t)) return Fail("emitted title violates rules: '" + *t + "'");
        }
        if (oracle::SubstringRelated(row.text1, row.text2)) {
          return Fail("emitted substring pair: '" + row.text1 + "' / '" + row.text2 + "'");
        }
      }
    }
  }
  return Pass("1000 random titles agree with the reference rules (" +
              std::to_string(rejected) + " rejected); " +
              std::to_string(checked_titles) +
              " emitted titles clean, no substring pairs");
}

// -------------------------------------------------------------------------
// 4. Graph oracle equivalence.

Verdict GraphOracles() {
  std::mt19937_64 rng(99);
  uint64_t comparisons = 0;
  size_t cyclic = 0;
  for (int trial = 0; trial < 100; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 50)(rng);
    double density = std::uniform_real_distribution<double>(0.02, 0.15)(rng);
    std::vector<std::pair<std::string, std::string>> raw;
    std::vector<RawEdge> edges;
    auto name = [](int i) { return "n" + std::to_string(100 + i); };
    std::bernoulli_distribution coin(density);
    for (int i = 0; i < n; ++i) {
      raw.emplace_back(name(i), name(i));  // keeps isolated nodes
      for (int j = 0; j < n; ++j) {
        if (i != j && coin(rng)) {
          raw.emplace_back(name(i), name(j));
          edges.push_back({name(i), name(j)});
        }
      }
    }
    std::vector<std::string> titles;
    for (int i = 0; i < n; ++i) titles.push_back(name(i));
    std::vector<std::pair<uint32_t, uint32_t>> indexed;
    for (const RawEdge &e : edges) {
      indexed.emplace_back(std::stoi(e.child_title.substr(1)) - 100,
                           std::stoi(e.parent_title.substr(1)) - 100);
    }
    CategoryGraph g = CategoryGraph::FromIndexedEdges(titles, indexed);
    oracle::Graph ref(raw);
    bool has_cycle = false;
    AncestorQuery query(g);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        NodeId ia{static_cast<uint32_t>(a)}, ib{static_cast<uint32_t>(b)};
        if (a == b && ref.IsAncestor(name(a), name(a))) has_cycle = true;
        for (uint32_t depth : {1u, 2u, 3u, kUnlimitedDepth}) {
          ++comparisons;
          if (query.IsAncestor(ia, ib, depth) !=
              ref.IsAncestor(name(a), name(b), depth == kUnlimitedDepth ? oracle::kInf : depth)) {
            return Fail("is_ancestor(" + name(a) + ", " + name(b) + ", " +
                        std::to_string(depth) + ") disagrees in trial " +
                        std::to_string(trial));
          }
        }
        ++comparisons;
        if (a != b && Siblings(g, ia, ib) != ref.Siblings(name(a), name(b))) {
          return Fail("siblings disagrees in trial " + std::to_string(trial));
        }
      }
    }
    cyclic += has_cycle;
    std::set<std::string> root_titles;
    std::vector<NodeId> roots;
    int root_count = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int k = 0; k < root_count; ++k) {
      int r = std::uniform_int_distribution<int>(0, n - 1)(rng);
      if (root_titles.insert(name(r)).second) roots.push_back(NodeId{static_cast<uint32_t>(r)});
    }
    DepthMap depths = DepthFromRoots(g, roots);
    auto ref_depths = ref.Depths(root_titles);
    for (int i = 0; i < n; ++i) {
      ++comparisons;
      uint32_t want = ref_depths[name(i)];
      if ((want == oracle::kInf ? kUnreachable : want) != depths[i]) {
        return Fail("depth_from_roots disagrees for " + name(i) + " in trial " +
                    std::to_string(trial));
      }
    }
  }
  if (cyclic == 0) return Fail("no cyclic graph generated");
  return Pass("100 random graphs (" + std::to_string(cyclic) + " cyclic), " +
              std::to_string(comparisons) + " comparisons, 100% agreement");
}

// -------------------------------------------------------------------------
// 5. Balance.

Verdict Balance() {
  CategoryGraph graph = FixtureGraph();
  std::vector<std::string> notes;
  for (Scheme scheme : kSchemes) {
    for (size_t size : {size_t{6}, size_t{99}, size_t{100000}}) {
      bool cap = size == 100000;
      nlohmann::json report;
      auto splits = MakeSplits(graph, scheme, size, cap ? 5000 : size, 42, cap, 1, &report);
      std::set<std::pair<std::string, std::string>> train_pairs;
      for (const auto &p : splits.train) train_pairs.emplace(p.text1, p.text2);
      for (const auto &p : splits.dev) {
        if (train_pairs.count({p.text1, p.text2})) return Fail("train/dev overlap");
      }
      for (const auto *split : {&splits.train, &splits.dev}) {
        std::map<OutputLabel, size_t> cls;
        std::map<RelationLabel, size_t> rel;
        for (OutputLabel c : SchemeClasses(scheme)) cls[c] = 0;
        for (const auto &p : *split) {
          ++cls[*ClassOf(scheme, p.label)];
          ++rel[p.label];
        }
        auto [lo, hi] = std::minmax_element(
            cls.begin(), cls.end(), [](auto &x, auto &y) { return x.second < y.second; });
        if (hi->second - lo->second > 1) {
          return Fail(std::string(SchemeName(scheme)) + " size " + std::to_string(size) +
                      ": class counts differ by " + std::to_string(hi->second - lo->second));
        }
        if (cls.size() != SchemeClasses(scheme).size()) return Fail("missing class");
        for (OutputLabel c : SchemeClasses(scheme)) {
          auto parts = Constituents(scheme, c);
          size_t mn = SIZE_MAX, mx = 0;
          for (RelationLabel r : parts) {
            mn = std::min(mn, rel[r]);
            mx = std::max(mx, rel[r]);
          }
          if (mx - mn > 1) return Fail(std::string(SchemeName(scheme)) + ": class not internally balanced");
        }
      }
      if (cap) {
        notes.push_back(std::string(SchemeName(scheme)) + " cap " +
                        std::to_string(splits.train.size()) + "/" +
                        std::to_string(splits.dev.size()));
      } else if (splits.train.size() != size || splits.dev.size() != size) {
        return Fail("wrong split size");
      }
    }
  }
  std::string joined;
  for (const auto &n : notes) joined += (joined.empty() ? "" : ", ") + n;
  return Pass("4 schemes x {6, 99, capped}: class spread <= 1, train/dev disjoint; " + joined);
}

// -------------------------------------------------------------------------
// 6. Neutral top-k.

Verdict NeutralTopK() {
  CategoryGraph graph = FixtureGraph();
  oracle::Graph g = oracle::Graph::FromTsv((MicroDir() / "edges.tsv").string());
  std::vector<std::string> eligible;
  for (const std::string &t : g.titles()) {
    if (!oracle::TitleViolates(t)) eligible.push_back(t);
  }
  std::string summary;
  for (Scheme scheme : {Scheme::kThreeway, Scheme::kFourway}) {
    for (uint64_t seed : {42ull, 5ull}) {
      const size_t split = 99;
      size_t classes = scheme == Scheme::kThreeway ? 3 : 4;
      // Neutral is the third class.
      size_t per_split = split / classes + (2 < split % classes ? 1 : 0);
      size_t k = 2 * per_split;
      auto splits = MakeSplits(graph, scheme, split, split, seed);
      std::set<std::pair<std::string, std::string>> selected;
      for (const auto *s : {&splits.train, &splits.dev}) {
        for (const auto &p : *s) {
          if (p.label == RelationLabel::kNeutral) selected.emplace(p.text1, p.text2);
        }
      }
      if (selected.size() != k) return Fail("expected " + std::to_string(k) + " neutrals");

      uint64_t draws = static_cast<uint64_t>(std::ceil(k * 5.0));
      std::set<std::pair<std::string, std::string>> seen;
      struct Cand {
        double score;
        std::string a, b;
      };
      std::vector<Cand> cands;
      for (uint64_t i = 0; i < draws; ++i) {
        CandidateDraw d = NeutralCandidateAt(seed, i, eligible.size());
        const std::string &a = eligible[d.first];
        const std::string &b = eligible[d.second];
        if (!seen.emplace(std::min(a, b), std::max(a, b)).second) continue;
        if (oracle::SubstringRelated(a, b)) continue;
        if (!oracle::LabelHolds(g, a, b, "neutral", scheme == Scheme::kFourway)) continue;
        cands.push_back({oracle::TrigramCosine(a, b), a, b});
      }
      std::sort(cands.begin(), cands.end(), [](const Cand &x, const Cand &y) {
        if (x.score != y.score) return x.score > y.score;
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
      });
      if (cands.size() < k) return Fail("oracle found too few candidates");
      double floor = cands[k - 1].score;
      for (size_t i = 0; i < cands.size(); ++i) {
        bool in_lib = selected.count({cands[i].a, cands[i].b}) != 0;
        bool in_ref = i < k;
        // Scores equal to the floor up to rounding may swap places.
        if (in_lib != in_ref && std::abs(cands[i].score - floor) > 1e-12) {
          return Fail(std::string(SchemeName(scheme)) + " seed " + std::to_string(seed) +
                      ": '" + cands[i].a + "' / '" + cands[i].b + "' " +
                      (in_lib ? "selected but outside" : "missing from") + " the top-k");
        }
      }
      char buf[120];
      std::snprintf(buf, sizeof(buf), "%s%s/%llu: k=%zu of %zu valid", summary.empty() ? "" : "; ",
                    std::string(SchemeName(scheme)).c_str(),
                    static_cast<unsigned long long>(seed), k, cands.size());
      summary += buf;
    }
  }
  return Pass("selected neutrals equal exhaustive top-k (" + summary + ")");
}

// -------------------------------------------------------------------------
// 7. Scale smoke test.

long PeakRssKb() {
  struct rusage usage;
  getrusage(RUSAGE_SELF, &usage);
  return usage.ru_maxrss;
}

Verdict ScaleSmoke() {
  const char *page = std::getenv("TAXOPAIRS_PAGE_DUMP");
  const char *links = std::getenv("TAXOPAIRS_CATEGORYLINKS_DUMP");
  if (page == nullptr || links == nullptr) {
    // Synthetic stand-in so the streaming path is still exercised at size.
    TempDir tmp;
    const int kCats = 200000;
    {
      std::ofstream p(tmp / "page.sql");
      std::ofstream l(tmp / "categorylinks.sql");
      std::mt19937_64 rng(3);
      for (int i = 0; i < kCats; i += 500) {
        p << "INSERT INTO `page` VALUES ";
        l << "INSERT INTO `categorylinks` VALUES ";
        for (int j = i; j < i + 500; ++j) {
          p << (j > i ? "," : "") << "(" << j + 1 << ",14,'Synthetic_category_" << j
            << "',0,0,0.5,'20260101000000',NULL,1,1,'wikitext',NULL)";
          for (int k = 0; k < 3; ++k) {
            uint64_t parent = j == 0 ? 0 : rng() % j;
            l << (j > i || k ? "," : "") << "(" << j + 1 << ",'Synthetic_category_"
              << parent << "','K','2026-01-01 00:00:00','','uppercase','subcat')";
          }
        }
        p << ";\n";
        l << ";\n";
      }
    }
    auto start = std::chrono::steady_clock::now();
    std::ifstream p(tmp / "page.sql"), l(tmp / "categorylinks.sql");
    IngestStats stats;
    auto edges = IngestCategoryDumps(p, l, DumpLayout{}, &stats);
    GraphBuildStats build;
    CategoryGraph graph = CategoryGraph::Build(edges, &build);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "no real dump (set TAXOPAIRS_PAGE_DUMP and "
                  "TAXOPAIRS_CATEGORYLINKS_DUMP); synthetic %zu nodes / %zu edges "
                  "ingested+built in %.2f s, peak RSS %ld MB",
                  graph.node_count(), graph.edge_count(), secs, PeakRssKb() / 1024);
    return Skip(buf);
  }
  TempDir tmp;
  PipelineConfig config;
  config.page_dump = page;
  config.categorylinks_dump = links;
  config.spec.seed = 42;
  config.seed_set = true;
  config.spec.train_size = 400000;
  config.spec.dev_size = 5000;
  config.spec.cap_to_available = true;
  config.output_dir = tmp.path();
  config.workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  auto start = std::chrono::steady_clock::now();
  PipelineResult result = RunPipeline(config);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  size_t direct = result.report["extract"]["direct"]["child"].get<size_t>() +
                  result.report["extract"]["direct"]["parent"].get<size_t>();
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "real dump: %zu unique direct pairs (reference scale 428,899; exact "
                "match not expected), %.1f s, peak RSS %ld MB",
                direct, secs, PeakRssKb() / 1024);
  if (direct < 42890 || direct > 4288990) return Fail(buf);
  return Pass(buf);
}

// -------------------------------------------------------------------------
// 8. Adapter parity.

Verdict AdapterParity() {
  CategoryGraph from_tsv = FixtureGraph();
  std::ifstream page(MicroDir() / "page.sql"), links(MicroDir() / "categorylinks.sql");
  CategoryGraph from_sql = CategoryGraph::Build(IngestCategoryDumps(page, links));
  if (from_tsv.Edges() != from_sql.Edges()) return Fail("edge sets differ");
  for (Scheme scheme : kSchemes) {
    for (int workers : {1, 3}) {
      auto a = MakeSplits(from_tsv, scheme, 99, 99, 42, false, workers);
      auto b = MakeSplits(from_sql, scheme, 99, 99, 42, false, 1);
      if (SplitText(a.train, scheme) != SplitText(b.train, scheme) ||
          SplitText(a.dev, scheme) != SplitText(b.dev, scheme)) {
        return Fail(std::string(SchemeName(scheme)) + ": datasets differ");
      }
    }
  }
  // Through the CLI as well.
  TempDir tmp;
  std::string common = "extract -q --seed 42 --scheme fourway --train-size 99 --dev-size 99 ";
  int c1 = testing::RunCli(common + "--edges '" + (MicroDir() / "edges.tsv").string() +
                           "' --output '" + (tmp / "tsv").string() + "'");
  int c2 = testing::RunCli(common + "--page '" + (MicroDir() / "page.sql").string() +
                           "' --categorylinks '" + (MicroDir() / "categorylinks.sql").string() +
                           "' --output '" + (tmp / "sql").string() + "'");
  if (c1 != 0 || c2 != 0) return Fail("CLI extract failed");
  for (const char *f : {"train.tsv", "dev.tsv"}) {
    if (ReadFile(tmp / "tsv" / f) != ReadFile(tmp / "sql" / f)) return Fail(std::string("CLI ") + f + " differs");
  }
  return Pass(std::to_string(from_tsv.edge_count()) +
              " edges; EdgeTSV and SQL dumps give identical datasets for all 4 schemes");
}

// -------------------------------------------------------------------------
// 9. Multilingual filter.

Verdict Multilingual() {
  std::ifstream in(testing::DataDir() / "zh" / "edges.tsv");
  CategoryGraph graph = CategoryGraph::Build(ReadEdgeTsv(in));
  std::ifstream cfg(testing::ConfigDir() / "zh.json");
  FilterConfig zh = LoadLanguageConfig(cfg);
  std::set<std::string> blacklist(zh.keyword_blacklist.begin(), zh.keyword_blacklist.end());

  size_t latin_nodes = 0;
  for (uint32_t i = 0; i < graph.node_count(); ++i) {
    latin_nodes += oracle::HasAsciiLetter(std::string(graph.title(NodeId{i})));
  }
  if (latin_nodes == 0) return Fail("fixture has no Latin titles");
  size_t titles = 0;
  for (Scheme scheme : {Scheme::kThreeway, Scheme::kFourway}) {
    for (uint64_t seed : {42ull, 9ull}) {
      nlohmann::json report;
      auto splits = MakeSplits(graph, scheme, 100000, 5000, seed, true, 1, &report, zh);
      if (splits.train.empty()) return Fail("no output");
      for (const auto &row : SplitRows(splits)) {
        for (const std::string *t : {&row.text1, &row.text2}) {
          ++titles;
          if (oracle::HasAsciiLetter(*t)) return Fail("ASCII letters in '" + *t + "'");
          if (oracle::HasBlacklisted(*t, blacklist, true)) return Fail("blacklisted word in '" + *t + "'");
        }
      }
    }
  }
  return Pass(std::to_string(titles) + " emitted titles, zero ASCII-letter tokens (" +
              std::to_string(latin_nodes) + " Latin-bearing fixture titles filtered)");
}

// -------------------------------------------------------------------------
// 10. Stats.

Verdict Stats() {
  size_t compared = 0;
  for (const char *scheme : {"threeway", "fourway"}) {
    fs::path train = testing::DataDir() / "golden" / scheme / "train.tsv";
    auto expected = oracle::CountWords(oracle::ReadRows(train.string()));
    auto rows = ReadDatasetTsv(train);
    for (size_t k : {size_t{10}, size_t{20}, expected.size()}) {
      FrequencyReport report = TopFrequentWords(rows, k);
      size_t n = std::min(k, expected.size());
      if (report.entries.size() != n) return Fail("wrong entry count");
      for (size_t i = 0; i < n; ++i) {
        if (report.entries[i] != expected[i]) {
          return Fail(std::string(scheme) + " rank " + std::to_string(i) + ": got " +
                      report.entries[i].first + " expected " + expected[i].first);
        }
      }
      compared += n;
    }
  }
  // Hand example.
  std::vector<DatasetRow> one = {{"a b", "b c", OutputLabel::kChild}};
  auto r = TopFrequentWords(one, 3);
  std::vector<std::pair<std::string, uint64_t>> want = {{"b", 2}, {"a", 1}, {"c", 1}};
  if (r.entries != want) return Fail("hand example mismatch");
  return Pass(std::to_string(compared) + " ranked entries match the independent count");
}

}  // namespace
}  // namespace taxopairs

int main() {
  using namespace taxopairs;
  Log().set_level(spdlog::level::err);
  struct Criterion {
    int id;
    const char *name;
    std::function<Verdict()> run;
  };
  std::vector<Criterion> criteria = {
      {1, "golden pipeline", GoldenPipeline},
      {2, "label soundness", LabelSoundness},
      {3, "filter suite", FilterSuite},
      {4, "graph oracle equivalence", GraphOracles},
      {5, "balance", Balance},
      {6, "neutral top-k", NeutralTopK},
      {7, "scale smoke test", ScaleSmoke},
      {8, "adapter parity", AdapterParity},
      {9, "multilingual filter", Multilingual},
      {10, "stats", Stats},
  };
  int failures = 0;
  for (const auto &c : criteria) {
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception &e) {
      v = Fail(std::string("exception: ") + e.what());
    }
    const char *tag = v.outcome == Outcome::kPass   ? "PASS"
                      : v.outcome == Outcome::kFail ? "FAIL"
                                                    : "SKIP";
    failures += v.outcome == Outcome::kFail;
    std::printf("[%s] %2d %s: %s\n", tag, c.id, c.name, v.detail.c_str());
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
