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

#include "taxopairs/dataset.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "test_util.h"

namespace taxopairs {
namespace {

constexpr size_t kC = 0, kP = 1, kN = 2, kS = 3;

PairPools MakePools(size_t each) {
  PairPools pools;
  for (RelationLabel r : kAllRelations) {
    for (size_t i = 0; i < each; ++i) {
      pools[Index(r)].push_back({std::string(RelationName(r)) + " a" + std::to_string(i),
                                 "b" + std::to_string(i), r});
    }
  }
  return pools;
}

TEST(PlanQuotasTest, Examples) {
  EXPECT_EQ(PlanQuotas(Scheme::kThreeway, 100'000), (RelationCounts{33334, 33333, 33333, 0}));
  EXPECT_EQ(PlanQuotas(Scheme::kFourway, 100'000), (RelationCounts{25000, 25000, 25000, 25000}));
  EXPECT_EQ(PlanQuotas(Scheme::kBinaryChildVsRest, 6), (RelationCounts{3, 1, 1, 1}));
  EXPECT_EQ(PlanQuotas(Scheme::kBinaryChildParentVsRest, 8), (RelationCounts{2, 2, 2, 2}));
  EXPECT_EQ(PlanQuotas(Scheme::kThreeway, 0), (RelationCounts{0, 0, 0, 0}));
}

TEST(PlanQuotasTest, SumsAndBalancesClasses) {
  for (Scheme s : {Scheme::kThreeway, Scheme::kFourway, Scheme::kBinaryChildVsRest,
                   Scheme::kBinaryChildParentVsRest}) {
    for (size_t n = 0; n < 200; ++n) {
      RelationCounts q = PlanQuotas(s, n);
      size_t total = 0;
      std::vector<size_t> per_class;
      for (OutputLabel c : SchemeClasses(s)) {
        size_t k = 0;
        for (RelationLabel r : Constituents(s, c)) k += q[Index(r)];
        per_class.push_back(k);
        total += k;
      }
      EXPECT_EQ(total, n);
      auto [lo, hi] = std::minmax_element(per_class.begin(), per_class.end());
      EXPECT_LE(*hi - *lo, 1u) << SchemeName(s) << " " << n;
      if (!UsesSiblings(s)) {
        EXPECT_EQ(q[kS], 0u);
      }
    }
  }
}

TEST(AssembleTest, BalancedDisjointDeterministic) {
  DatasetSpec spec;
  spec.scheme = Scheme::kFourway;
  spec.train_size = 40;
  spec.dev_size = 8;
  spec.seed = 9;
  AssemblyStats stats;
  DatasetSplits a = AssembleDataset(spec, MakePools(20), &stats);
  DatasetSplits b = AssembleDataset(spec, MakePools(20));
  EXPECT_EQ(a.train, b.train);
  EXPECT_EQ(a.dev, b.dev);
  ASSERT_EQ(a.train.size(), 40u);
  ASSERT_EQ(a.dev.size(), 8u);
  EXPECT_FALSE(stats.capped);
  std::set<LabeledPair> train(a.train.begin(), a.train.end());
  EXPECT_EQ(train.size(), 40u);
  RelationCounts counts{};
  for (const auto &p : a.dev) {
    EXPECT_FALSE(train.count(p));
    ++counts[Index(p.label)];
  }
  EXPECT_EQ(counts, (RelationCounts{2, 2, 2, 2}));
  spec.seed = 10;
  EXPECT_NE(AssembleDataset(spec, MakePools(20)).train, a.train);
}

TEST(AssembleTest, ShortfallNamesTheClass) {
  DatasetSpec spec;
  spec.scheme = Scheme::kThreeway;
  spec.train_size = 30;
  spec.dev_size = 3;
  PairPools pools = MakePools(20);
  pools[kP].resize(5);
  try {
    AssembleDataset(spec, pools);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kData);
    EXPECT_NE(std::string(e.what()).find("parent"), std::string::npos) << e.what();
  }
}

TEST(AssembleTest, DuplicatesAreRemovedBeforeQuotas) {
  PairPools pools = MakePools(3);
  pools[kC].push_back(pools[kC][0]);
  EXPECT_EQ(DedupPools(&pools), 1u);
  EXPECT_EQ(pools[kC].size(), 3u);
}

TEST(FeasibleSizesTest, CapKeepsRatio) {
  DatasetSpec spec;
  spec.scheme = Scheme::kThreeway;
  spec.train_size = 1000;
  spec.dev_size = 100;
  RelationCounts avail{500, 500, 110, 0};
  EXPECT_EQ(FeasibleSizes(spec, avail).train, 1000u);  // no cap requested
  spec.cap_to_available = true;
  SplitSizes s = FeasibleSizes(spec, avail);
  auto fits = [&](size_t t) {
    size_t d = (t * 100 + 999) / 1000;
    RelationCounts qt = PlanQuotas(spec.scheme, t), qd = PlanQuotas(spec.scheme, d);
    for (size_t r = 0; r < 4; ++r) {
      if (qt[r] + qd[r] > avail[r]) return false;
    }
    return true;
  };
  EXPECT_TRUE(fits(s.train));
  EXPECT_FALSE(fits(s.train + 1));
  EXPECT_GT(s.train, 250u);
  EXPECT_EQ(s.dev, (s.train * 100 + 999) / 1000);
  EXPECT_EQ(FeasibleSizes(spec, {0, 0, 0, 0}).train, 0u);
}

TEST(ValidateSpecTest, RejectsBadValues) {
  DatasetSpec ok;
  EXPECT_NO_THROW(ValidateSpec(ok));
  for (int i = 0; i < 4; ++i) {
    DatasetSpec s;
    if (i == 0) s.train_size = 0;
    if (i == 1) s.dev_size = 0;
    if (i == 2) s.neutral_oversample = 0.5;
    if (i == 3) s.ancestor_max_depth = 0;
    try {
      ValidateSpec(s);
      FAIL() << i;
    } catch (const Error &e) {
      EXPECT_EQ(e.kind(), ErrorKind::kConfig);
    }
  }
}

TEST(TsvTest, LineFormatAndRoundTrip) {
  std::vector<LabeledPair> pairs = {{"Chemical accident", "Pollution", RelationLabel::kChild},
                                    {"Injuries", "Bone fractures", RelationLabel::kParent},
                                    {"Cantonese music", "Learned societies", RelationLabel::kNeutral}};
  std::ostringstream out;
  WriteDatasetTsv(out, pairs, Scheme::kThreeway);
  EXPECT_EQ(out.str(),
            "Chemical accident\tPollution\tchild\n"
            "Injuries\tBone fractures\tparent\n"
            "Cantonese music\tLearned societies\tneutral\n");
  std::istringstream in(out.str());
  EXPECT_EQ(ReadDatasetTsv(in), ToRows(pairs, Scheme::kThreeway));

  std::ostringstream bin;
  WriteDatasetTsv(bin, pairs, Scheme::kBinaryChildParentVsRest);
  EXPECT_EQ(bin.str(),
            "Chemical accident\tPollution\tentail\n"
            "Injuries\tBone fractures\tentail\n"
            "Cantonese music\tLearned societies\trest\n");
}

TEST(TsvTest, RejectsBadInput) {
  std::ostringstream out;
  std::vector<LabeledPair> bad = {{"a\tb", "c", RelationLabel::kChild}};
  EXPECT_THROW(WriteDatasetTsv(out, bad, Scheme::kThreeway), Error);
  std::istringstream two("a\tb\tchild\nc\td\n");
  try {
    ReadDatasetTsv(two);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kData);
    EXPECT_NE(std::string(e.what()).find('2'), std::string::npos) << e.what();
  }
  std::istringstream label("a\tb\tcousin\n");
  EXPECT_THROW(ReadDatasetTsv(label), Error);
}

TEST(EmitTest, WritesFilesAndIsRepeatable) {
  testing::TempDir dir;
  DatasetSpec spec;
  spec.scheme = Scheme::kThreeway;
  spec.train_size = 12;
  spec.dev_size = 3;
  spec.seed = 1;
  DatasetSplits splits = AssembleDataset(spec, MakePools(10));
  EmitDataset(splits, dir.path() / "out", {{"seed", 1}});
  std::string train = testing::ReadFile(dir.path() / "out" / "train.tsv");
  std::string report = testing::ReadFile(dir.path() / "out" / "report.json");
  EmitDataset(splits, dir.path() / "out", {{"seed", 1}});
  EXPECT_EQ(train, testing::ReadFile(dir.path() / "out" / "train.tsv"));
  EXPECT_EQ(report, testing::ReadFile(dir.path() / "out" / "report.json"));
  auto json = nlohmann::json::parse(report);
  EXPECT_EQ(json["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(json["splits"]["train"]["total"], 12);
  EXPECT_EQ(json["splits"]["dev"]["labels"]["child"], 1);
  EXPECT_EQ(ReadDatasetTsv(dir.path() / "out" / "dev.tsv").size(), 3u);
}

TEST(EmitTest, EmptySplitsStillWriteFiles) {
  testing::TempDir dir;
  EmitDataset(DatasetSplits{}, dir.path(), nlohmann::json::object());
  EXPECT_EQ(testing::ReadFile(dir.path() / "train.tsv"), "");
  EXPECT_EQ(testing::ReadFile(dir.path() / "dev.tsv"), "");
  EXPECT_TRUE(std::filesystem::exists(dir.path() / "report.json"));
}

}  // namespace
}  // namespace taxopairs
