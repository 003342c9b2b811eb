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

#include "taxopairs/pair_sampling.h"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "taxopairs/error.h"
#include "taxopairs/parallel.h"
#include "taxopairs/random.h"

namespace taxopairs {

namespace {

uint64_t PairKey(uint32_t a, uint32_t b) {
  if (a > b) std::swap(a, b);
  return (static_cast<uint64_t>(a) << 32) | b;
}

LabeledPair MakePair(const CategoryGraph &g, NodeId a, NodeId b,
                     RelationLabel label) {
  return LabeledPair{std::string(g.title(a)), std::string(g.title(b)), label};
}

}  // namespace

nlohmann::json DirectPairStats::ToJson() const {
  return {{"edges", edges},
          {"rejected_title", rejected_title},
          {"rejected_substring", rejected_substring},
          {"reverse_duplicates", reverse_duplicates},
          {"child", child},
          {"parent", parent}};
}

nlohmann::json NeutralStats::ToJson() const {
  return {{"eligible_nodes", eligible_nodes},
          {"draws", draws},
          {"duplicate_draws", duplicate_draws},
          {"rejected_substring", rejected_substring},
          {"rejected_ancestor", rejected_ancestor},
          {"rejected_sibling", rejected_sibling},
          {"unscored", unscored},
          {"scored", scored},
          {"selected", selected},
          {"min_selected_score", min_selected_score}};
}

nlohmann::json SiblingStats::ToJson() const {
  return {{"method", method},
          {"population_bound", population_bound},
          {"candidates", candidates},
          {"rejected_substring", rejected_substring},
          {"rejected_ancestor", rejected_ancestor},
          {"selected", selected}};
}

std::vector<LabeledPair> ExtractDirectPairs(const CategoryGraph &graph,
                                            const TitleFilter &filter,
                                            uint64_t seed,
                                            DirectPairStats *stats) {
  DirectPairStats local;
  if (stats == nullptr) stats = &local;
  *stats = DirectPairStats{};
  const uint64_t stream = DeriveSeed(seed, "direct/direction");

  std::vector<LabeledPair> pairs;
  for (uint32_t c = 0; c < graph.node_count(); ++c) {
    NodeId child{c};
    for (NodeId parent : graph.parents(child)) {
      ++stats->edges;
      if (!filter.passes(child) || !filter.passes(parent)) {
        ++stats->rejected_title;
        continue;
      }
      std::string_view ct = graph.title(child);
      std::string_view pt = graph.title(parent);
      if (filter.RejectPair(ct, pt)) {
        ++stats->rejected_substring;
        continue;
      }
      if (parent < child && graph.HasEdge(parent, child)) {
        ++stats->reverse_duplicates;
        continue;
      }
      uint64_t key = (static_cast<uint64_t>(c) << 32) | parent.value;
      if ((HashAt(stream, key) >> 63) == 0) {
        ++stats->child;
        pairs.push_back(MakePair(graph, child, parent, RelationLabel::kChild));
      } else {
        ++stats->parent;
        pairs.push_back(MakePair(graph, parent, child, RelationLabel::kParent));
      }
    }
  }
  return pairs;
}

std::vector<LabeledPair> ExtractDirectPairs(const CategoryGraph &graph,
                                            const FilterConfig &config,
                                            uint64_t seed,
                                            DirectPairStats *stats) {
  TitleFilter filter(graph, config);
  return ExtractDirectPairs(graph, filter, seed, stats);
}

CandidateDraw NeutralCandidateAt(uint64_t seed, uint64_t index,
                                 size_t eligible_count) {
  const uint64_t stream = DeriveSeed(seed, "neutral/candidates");
  uint64_t m = eligible_count;
  auto first = static_cast<uint32_t>(ScaleToRange(HashAt(stream, 2 * index), m));
  auto second =
      static_cast<uint32_t>(ScaleToRange(HashAt(stream, 2 * index + 1), m - 1));
  if (second >= first) ++second;
  return CandidateDraw{first, second};
}

uint64_t NeutralDrawCount(size_t needed, double oversample) {
  return static_cast<uint64_t>(std::ceil(static_cast<double>(needed) * oversample));
}

std::vector<ScoredPair> SampleNeutralPairs(const CategoryGraph &graph,
                                           const TitleFilter &filter,
                                           const SimilarityScorer &scorer,
                                           const NeutralOptions &options,
                                           NeutralStats *stats) {
  NeutralStats local;
  if (stats == nullptr) stats = &local;
  *stats = NeutralStats{};
  if (!(options.oversample >= 1.0) || !std::isfinite(options.oversample)) {
    throw ConfigError("neutral oversample must be a finite number >= 1");
  }
  const auto &eligible = filter.eligible();
  stats->eligible_nodes = eligible.size();
  if (options.needed == 0) return {};
  if (eligible.size() < 2) {
    throw DataError("neutral sampling: fewer than two categories pass the filter");
  }

  stats->draws = NeutralDrawCount(options.needed, options.oversample);
  std::vector<CandidateDraw> unique;
  {
    std::unordered_set<uint64_t> seen;
    seen.reserve(stats->draws);
    for (uint64_t i = 0; i < stats->draws; ++i) {
      CandidateDraw d = NeutralCandidateAt(options.seed, i, eligible.size());
      if (!seen.insert(PairKey(d.first, d.second)).second) {
        ++stats->duplicate_draws;
        continue;
      }
      unique.push_back(d);
    }
  }

  enum Outcome : uint8_t { kScored, kSubstring, kAncestor, kSibling, kUnscored };
  std::vector<Outcome> outcome(unique.size());
  std::vector<double> score(unique.size(), 0.0);
  ParallelFor(unique.size(), options.workers,
              [&](size_t, size_t begin, size_t end) {
                AncestorQuery query(graph);
                for (size_t i = begin; i < end; ++i) {
                  NodeId a = eligible[unique[i].first];
                  NodeId b = eligible[unique[i].second];
                  std::string_view ta = graph.title(a);
                  std::string_view tb = graph.title(b);
                  if (filter.RejectPair(ta, tb)) {
                    outcome[i] = kSubstring;
                  } else if (query.Related(a, b, options.max_depth)) {
                    outcome[i] = kAncestor;
                  } else if (options.exclude_siblings &&
                             Siblings(graph, a, b)) {
                    outcome[i] = kSibling;
                  } else if (auto s = scorer.Score(ta, tb)) {
                    outcome[i] = kScored;
                    score[i] = *s;
                  } else {
                    outcome[i] = kUnscored;
                  }
                }
              });

  std::vector<ScoredPair> ranked;
  for (size_t i = 0; i < unique.size(); ++i) {
    switch (outcome[i]) {
      case kSubstring: ++stats->rejected_substring; continue;
      case kAncestor: ++stats->rejected_ancestor; continue;
      case kSibling: ++stats->rejected_sibling; continue;
      case kUnscored: ++stats->unscored; continue;
      case kScored: break;
    }
    ++stats->scored;
    ranked.push_back(ScoredPair{
        MakePair(graph, eligible[unique[i].first], eligible[unique[i].second],
                 RelationLabel::kNeutral),
        score[i]});
  }

  auto better = [](const ScoredPair &x, const ScoredPair &y) {
    if (x.score != y.score) return x.score > y.score;
    if (x.pair.text1 != y.pair.text1) return x.pair.text1 < y.pair.text1;
    return x.pair.text2 < y.pair.text2;
  };
  if (ranked.size() > options.needed) {
    std::partial_sort(ranked.begin(), ranked.begin() + options.needed,
                      ranked.end(), better);
    ranked.resize(options.needed);
  } else {
    std::sort(ranked.begin(), ranked.end(), better);
  }
  if (ranked.size() < options.needed && !options.allow_shortfall) {
    throw DataError("neutral sampling: found " + std::to_string(ranked.size()) +
                    " of " + std::to_string(options.needed) +
                    " requested pairs after rejection");
  }
  stats->selected = ranked.size();
  stats->min_selected_score = ranked.empty() ? 0.0 : ranked.back().score;
  return ranked;
}

std::vector<LabeledPair> SampleSiblingPairs(const CategoryGraph &graph,
                                            const TitleFilter &filter,
                                            const SiblingOptions &options,
                                            SiblingStats *stats) {
  SiblingStats local;
  if (stats == nullptr) stats = &local;
  *stats = SiblingStats{};
  if (options.needed == 0) {
    stats->method = "none";
    return {};
  }

  // Filter-passing children of every parent with at least two of them.
  std::vector<uint32_t> parents;
  std::vector<uint64_t> offsets{0};
  std::vector<NodeId> kids;
  std::vector<uint64_t> cumulative;
  for (uint32_t p = 0; p < graph.node_count(); ++p) {
    size_t before = kids.size();
    for (NodeId c : graph.children(NodeId{p})) {
      if (filter.passes(c)) kids.push_back(c);
    }
    uint64_t k = kids.size() - before;
    if (k < 2) {
      kids.resize(before);
      continue;
    }
    parents.push_back(p);
    offsets.push_back(kids.size());
    stats->population_bound += k * (k - 1) / 2;
    cumulative.push_back(stats->population_bound);
  }

  AncestorQuery query(graph);
  Rng rng(DeriveSeed(options.seed, "sibling/sample"));
  std::vector<uint64_t> accepted;

  // Returns true if the pair is admissible, tallying rejections.
  auto admissible = [&](NodeId a, NodeId b) {
    ++stats->candidates;
    if (filter.RejectPair(graph.title(a), graph.title(b))) {
      ++stats->rejected_substring;
      return false;
    }
    if (query.Related(a, b, options.max_depth)) {
      ++stats->rejected_ancestor;
      return false;
    }
    return true;
  };

  if (stats->population_bound <= options.enumeration_limit) {
    stats->method = "enumerate";
    std::vector<uint64_t> keys;
    keys.reserve(stats->population_bound);
    for (size_t i = 0; i < parents.size(); ++i) {
      for (uint64_t x = offsets[i]; x < offsets[i + 1]; ++x) {
        for (uint64_t y = x + 1; y < offsets[i + 1]; ++y) {
          keys.push_back(PairKey(kids[x].value, kids[y].value));
        }
      }
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    // Walking a lazily shuffled order and keeping the first admissible
    // pairs is a uniform sample without replacement of admissible pairs.
    for (size_t i = 0; i < keys.size() && accepted.size() < options.needed;
         ++i) {
      size_t j = i + rng.Uniform(keys.size() - i);
      std::swap(keys[i], keys[j]);
      NodeId a{static_cast<uint32_t>(keys[i] >> 32)};
      NodeId b{static_cast<uint32_t>(keys[i])};
      if (admissible(a, b)) accepted.push_back(keys[i]);
    }
  } else {
    stats->method = "rejection";
    // Pick a parent proportional to its pair count, then a pair of its
    // children; accepting with probability 1/(shared parents) makes every
    // distinct pair equally likely.
    std::unordered_set<uint64_t> seen;
    const uint64_t max_attempts = 64 * static_cast<uint64_t>(options.needed) + 100000;
    for (uint64_t attempt = 0;
         attempt < max_attempts && accepted.size() < options.needed;
         ++attempt) {
      uint64_t r = rng.Uniform(stats->population_bound);
      size_t pi = std::upper_bound(cumulative.begin(), cumulative.end(), r) -
                  cumulative.begin();
      uint64_t k = offsets[pi + 1] - offsets[pi];
      uint64_t x = rng.Uniform(k);
      uint64_t y = rng.Uniform(k - 1);
      if (y >= x) ++y;
      NodeId a = kids[offsets[pi] + x];
      NodeId b = kids[offsets[pi] + y];
      size_t shared = SharedParentCount(graph, a, b);
      if (shared > 1 && rng.Uniform(shared) != 0) continue;
      uint64_t key = PairKey(a.value, b.value);
      if (!seen.insert(key).second) continue;
      if (admissible(a, b)) accepted.push_back(key);
    }
  }

  if (accepted.size() < options.needed && !options.allow_shortfall) {
    throw DataError("sibling sampling: found " + std::to_string(accepted.size()) +
                    " of " + std::to_string(options.needed) +
                    " requested pairs");
  }
  stats->selected = accepted.size();

  const uint64_t orient = DeriveSeed(options.seed, "sibling/orientation");
  std::vector<LabeledPair> pairs;
  pairs.reserve(accepted.size());
  for (uint64_t key : accepted) {
    NodeId a{static_cast<uint32_t>(key >> 32)};
    NodeId b{static_cast<uint32_t>(key)};
    if ((HashAt(orient, key) >> 63) != 0) std::swap(a, b);
    pairs.push_back(MakePair(graph, a, b, RelationLabel::kSibling));
  }
  return pairs;
}

}  // namespace taxopairs
