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

#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "taxopairs/pipeline.h"
#include "taxopairs/similarity.h"

namespace taxopairs {
namespace {

TEST(IngestTaxonomyTest, ToyTaxonomyFeedsTheExtractor) {
  std::istringstream in(
      "Felines\tMammals\n"
      "Canines\tMammals\n"
      "Mammals\tAnimals\n"
      "Reptiles\tAnimals\n");
  std::vector<RecordError> errors;
  TaxonomySource src = IngestTaxonomy(in, TaxonomyFormat::kEdgeTsv, "toy", "hand written", &errors);
  EXPECT_TRUE(errors.empty());
  ASSERT_EQ(src.edges.size(), 4u);
  EXPECT_EQ(src.name, "toy");

  CategoryGraph g = CategoryGraph::Build(src.edges);
  DatasetSpec spec;
  spec.scheme = Scheme::kThreeway;
  spec.train_size = 3;
  spec.dev_size = 1;
  spec.seed = 4;
  spec.cap_to_available = true;
  LexicalNGramScorer scorer;
  nlohmann::json report;
  DatasetSplits splits = BuildDataset(g, spec, scorer, 1, &report);
  EXPECT_EQ(report["extract"]["direct"]["edges"], 4);
  EXPECT_GT(splits.train.size() + splits.dev.size(), 0u);
  for (const auto *split : {&splits.train, &splits.dev}) {
    for (const auto &p : *split) {
      auto a = *g.Find(p.text1), b = *g.Find(p.text2);
      switch (p.label) {
        case RelationLabel::kChild: EXPECT_TRUE(g.HasEdge(a, b)); break;
        case RelationLabel::kParent: EXPECT_TRUE(g.HasEdge(b, a)); break;
        default:
          EXPECT_FALSE(g.HasEdge(a, b));
          EXPECT_FALSE(g.HasEdge(b, a));
      }
    }
  }
}

TEST(IngestTaxonomyTest, NeedsAName) {
  std::istringstream in("a\tb\n");
  EXPECT_THROW(IngestTaxonomy(in, TaxonomyFormat::kEdgeTsv, ""), Error);
}

std::vector<DatasetRow> Rows(const std::string &tag, size_t per_label) {
  std::vector<DatasetRow> rows;
  for (OutputLabel l : {OutputLabel::kChild, OutputLabel::kParent, OutputLabel::kNeutral}) {
    for (size_t i = 0; i < per_label; ++i) {
      rows.push_back({tag + std::to_string(i), std::string(OutputLabelName(l)), l});
    }
  }
  return rows;
}

TEST(MixSourcesTest, BalancedAndSeeded) {
  auto a = Rows("a", 10), b = Rows("b", 10);
  auto mix = MixSources(a, b, 7, 3);
  ASSERT_EQ(mix.size(), 14u);
  std::map<std::pair<char, OutputLabel>, int> counts;
  for (const auto &r : mix) ++counts[{r.text1[0], r.label}];
  for (char s : {'a', 'b'}) {
    int lo = 100, hi = 0;
    for (OutputLabel l : {OutputLabel::kChild, OutputLabel::kParent, OutputLabel::kNeutral}) {
      lo = std::min(lo, counts[{s, l}]);
      hi = std::max(hi, counts[{s, l}]);
    }
    EXPECT_LE(hi - lo, 1);
  }
  EXPECT_EQ(mix, MixSources(a, b, 7, 3));
  EXPECT_NE(mix, MixSources(a, b, 7, 4));
}

TEST(MixSourcesTest, ZeroQuotaAndSelfMix) {
  auto a = Rows("a", 5);
  EXPECT_TRUE(MixSources(a, a, 0, 1).empty());
  auto self = MixSources(a, a, 9, 1);
  ASSERT_EQ(self.size(), 18u);
  std::map<DatasetRow, int> seen;
  for (const auto &r : self) EXPECT_LE(++seen[r], 2);
}

TEST(MixSourcesTest, Shortfall) {
  auto a = Rows("a", 2), b = Rows("b", 10);
  try {
    MixSources(a, b, 9, 1);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kData);
  }
  EXPECT_THROW(MixSources({}, b, 1, 1), Error);
}

}  // namespace
}  // namespace taxopairs
