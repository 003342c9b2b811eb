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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <string>

#include "taxopairs/random.h"

namespace taxopairs {

std::string_view RelationName(RelationLabel label) {
  switch (label) {
    case RelationLabel::kChild: return "child";
    case RelationLabel::kParent: return "parent";
    case RelationLabel::kNeutral: return "neutral";
    case RelationLabel::kSibling: return "sibling";
  }
  return "neutral";
}

std::string_view SchemeName(Scheme scheme) {
  switch (scheme) {
    case Scheme::kThreeway: return "threeway";
    case Scheme::kFourway: return "fourway";
    case Scheme::kBinaryChildVsRest: return "binary_child_vs_rest";
    case Scheme::kBinaryChildParentVsRest: return "binary_child_parent_vs_rest";
  }
  return "threeway";
}

std::optional<Scheme> ParseScheme(std::string_view name) {
  for (Scheme s : {Scheme::kThreeway, Scheme::kFourway,
                   Scheme::kBinaryChildVsRest,
                   Scheme::kBinaryChildParentVsRest}) {
    if (SchemeName(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view OutputLabelName(OutputLabel label) {
  switch (label) {
    case OutputLabel::kChild: return "child";
    case OutputLabel::kParent: return "parent";
    case OutputLabel::kNeutral: return "neutral";
    case OutputLabel::kSibling: return "sibling";
    case OutputLabel::kEntail: return "entail";
    case OutputLabel::kRest: return "rest";
  }
  return "neutral";
}

std::optional<OutputLabel> ParseOutputLabel(std::string_view name) {
  for (OutputLabel l : {OutputLabel::kChild, OutputLabel::kParent,
                        OutputLabel::kNeutral, OutputLabel::kSibling,
                        OutputLabel::kEntail, OutputLabel::kRest}) {
    if (OutputLabelName(l) == name) return l;
  }
  return std::nullopt;
}

std::vector<OutputLabel> SchemeClasses(Scheme scheme) {
  switch (scheme) {
    case Scheme::kThreeway:
      return {OutputLabel::kChild, OutputLabel::kParent, OutputLabel::kNeutral};
    case Scheme::kFourway:
      return {OutputLabel::kChild, OutputLabel::kParent, OutputLabel::kNeutral,
              OutputLabel::kSibling};
    case Scheme::kBinaryChildVsRest:
    case Scheme::kBinaryChildParentVsRest:
      return {OutputLabel::kEntail, OutputLabel::kRest};
  }
  return {};
}

std::vector<RelationLabel> Constituents(Scheme scheme, OutputLabel cls) {
  using R = RelationLabel;
  switch (cls) {
    case OutputLabel::kChild: return {R::kChild};
    case OutputLabel::kParent: return {R::kParent};
    case OutputLabel::kNeutral: return {R::kNeutral};
    case OutputLabel::kSibling: return {R::kSibling};
    case OutputLabel::kEntail:
      if (scheme == Scheme::kBinaryChildParentVsRest) return {R::kChild, R::kParent};
      return {R::kChild};
    case OutputLabel::kRest:
      if (scheme == Scheme::kBinaryChildParentVsRest) return {R::kNeutral, R::kSibling};
      return {R::kParent, R::kNeutral, R::kSibling};
  }
  return {};
}

std::optional<OutputLabel> ClassOf(Scheme scheme, RelationLabel relation) {
  for (OutputLabel cls : SchemeClasses(scheme)) {
    for (RelationLabel r : Constituents(scheme, cls)) {
      if (r == relation) return cls;
    }
  }
  return std::nullopt;
}

bool UsesSiblings(Scheme scheme) {
  return ClassOf(scheme, RelationLabel::kSibling).has_value();
}

nlohmann::json DatasetSpec::ToJson() const {
  nlohmann::json depth = ancestor_max_depth == kUnlimitedDepth
                             ? nlohmann::json(nullptr)
                             : nlohmann::json(ancestor_max_depth);
  return {{"scheme", SchemeName(scheme)},
          {"train_size", train_size},
          {"dev_size", dev_size},
          {"seed", seed},
          {"neutral_oversample", neutral_oversample},
          {"filter", FilterConfigToJson(filter)},
          {"cap_to_available", cap_to_available},
          {"ancestor_max_depth", depth}};
}

void ValidateSpec(const DatasetSpec &spec) {
  if (spec.train_size == 0) throw ConfigError("train_size must be positive");
  if (spec.dev_size == 0) throw ConfigError("dev_size must be positive");
  if (!std::isfinite(spec.neutral_oversample) || spec.neutral_oversample < 1.0) {
    throw ConfigError("neutral_oversample must be a finite number >= 1");
  }
  if (spec.filter.max_len == 0) throw ConfigError("filter max_len must be positive");
  if (spec.ancestor_max_depth == 0) {
    throw ConfigError("ancestor_max_depth must be positive");
  }
}

RelationCounts PlanQuotas(Scheme scheme, size_t split_size) {
  RelationCounts quotas{};
  auto classes = SchemeClasses(scheme);
  for (size_t i = 0; i < classes.size(); ++i) {
    size_t q = split_size / classes.size() + (i < split_size % classes.size());
    auto parts = Constituents(scheme, classes[i]);
    for (size_t j = 0; j < parts.size(); ++j) {
      quotas[Index(parts[j])] += q / parts.size() + (j < q % parts.size());
    }
  }
  return quotas;
}

size_t DedupPools(PairPools *pools) {
  std::set<std::pair<std::string, std::string>> seen;
  size_t removed = 0;
  for (auto &pool : *pools) {
    std::vector<LabeledPair> kept;
    kept.reserve(pool.size());
    for (auto &p : pool) {
      if (seen.emplace(p.text1, p.text2).second) {
        kept.push_back(std::move(p));
      } else {
        ++removed;
      }
    }
    pool = std::move(kept);
  }
  return removed;
}

namespace {

bool Fits(Scheme scheme, SplitSizes sizes, const RelationCounts &available) {
  RelationCounts dev = PlanQuotas(scheme, sizes.dev);
  RelationCounts train = PlanQuotas(scheme, sizes.train);
  for (size_t r = 0; r < 4; ++r) {
    if (dev[r] + train[r] > available[r]) return false;
  }
  return true;
}

}  // namespace

SplitSizes FeasibleSizes(const DatasetSpec &spec,
                         const RelationCounts &available) {
  SplitSizes requested{spec.train_size, spec.dev_size};
  if (!spec.cap_to_available || Fits(spec.scheme, requested, available)) {
    return requested;
  }
  auto dev_for = [&](size_t t) {
    return (t * spec.dev_size + spec.train_size - 1) / spec.train_size;
  };
  size_t lo = 0;
  size_t hi = spec.train_size;
  while (lo < hi) {
    size_t mid = lo + (hi - lo + 1) / 2;
    if (Fits(spec.scheme, {mid, dev_for(mid)}, available)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return {lo, dev_for(lo)};
}

nlohmann::json AssemblyStats::ToJson() const {
  nlohmann::json pools = nlohmann::json::object();
  for (RelationLabel r : kAllRelations) {
    pools[std::string(RelationName(r))] = pool_sizes[Index(r)];
  }
  return {{"pool_sizes", pools},
          {"duplicates_removed", duplicates_removed},
          {"requested", {{"train", requested.train}, {"dev", requested.dev}}},
          {"actual", {{"train", actual.train}, {"dev", actual.dev}}},
          {"capped", capped}};
}

DatasetSplits AssembleDataset(const DatasetSpec &spec, PairPools pools,
                              AssemblyStats *stats) {
  AssemblyStats local;
  if (stats == nullptr) stats = &local;
  *stats = AssemblyStats{};

  stats->duplicates_removed = DedupPools(&pools);
  for (RelationLabel r : kAllRelations) {
    stats->pool_sizes[Index(r)] = pools[Index(r)].size();
  }
  stats->requested = {spec.train_size, spec.dev_size};
  stats->actual = FeasibleSizes(spec, stats->pool_sizes);
  stats->capped = stats->actual.train != spec.train_size ||
                  stats->actual.dev != spec.dev_size;

  RelationCounts dev_q = PlanQuotas(spec.scheme, stats->actual.dev);
  RelationCounts train_q = PlanQuotas(spec.scheme, stats->actual.train);

  DatasetSplits splits;
  splits.scheme = spec.scheme;
  for (RelationLabel r : kAllRelations) {
    auto &pool = pools[Index(r)];
    size_t need = dev_q[Index(r)] + train_q[Index(r)];
    if (pool.size() < need) {
      auto cls = ClassOf(spec.scheme, r);
      throw DataError("class '" + std::string(OutputLabelName(*cls)) + "' (" +
                      std::string(RelationName(r)) + " pairs) needs " +
                      std::to_string(need) + " pairs, only " +
                      std::to_string(pool.size()) + " available");
    }
    if (need == 0) continue;
    Rng rng(DeriveSeed(spec.seed, "assemble/pool/" + std::string(RelationName(r))));
    rng.Shuffle(std::span<LabeledPair>(pool));
    auto dev_end = pool.begin() + static_cast<std::ptrdiff_t>(dev_q[Index(r)]);
    auto train_end = dev_end + static_cast<std::ptrdiff_t>(train_q[Index(r)]);
    splits.dev.insert(splits.dev.end(), std::make_move_iterator(pool.begin()),
                      std::make_move_iterator(dev_end));
    splits.train.insert(splits.train.end(), std::make_move_iterator(dev_end),
                        std::make_move_iterator(train_end));
  }
  Rng(DeriveSeed(spec.seed, "assemble/dev"))
      .Shuffle(std::span<LabeledPair>(splits.dev));
  Rng(DeriveSeed(spec.seed, "assemble/train"))
      .Shuffle(std::span<LabeledPair>(splits.train));
  return splits;
}

std::vector<DatasetRow> ToRows(std::span<const LabeledPair> pairs,
                               Scheme scheme) {
  std::vector<DatasetRow> rows;
  rows.reserve(pairs.size());
  for (const LabeledPair &p : pairs) {
    auto cls = ClassOf(scheme, p.label);
    if (!cls) {
      throw DataError(std::string(RelationName(p.label)) +
                      " pair has no class under scheme " +
                      std::string(SchemeName(scheme)));
    }
    rows.push_back(DatasetRow{p.text1, p.text2, *cls});
  }
  return rows;
}

void WriteDatasetTsv(std::ostream &out, std::span<const DatasetRow> rows) {
  for (const DatasetRow &row : rows) {
    for (const std::string *t : {&row.text1, &row.text2}) {
      if (t->find_first_of("\t\n\r") != std::string::npos) {
        throw DataError("title contains a tab or line break: '" + *t + "'");
      }
    }
    out << row.text1 << '\t' << row.text2 << '\t' << OutputLabelName(row.label)
        << '\n';
  }
}

void WriteDatasetTsv(std::ostream &out, std::span<const LabeledPair> pairs,
                     Scheme scheme) {
  auto rows = ToRows(pairs, scheme);
  WriteDatasetTsv(out, std::span<const DatasetRow>(rows));
}

std::vector<DatasetRow> ReadDatasetTsv(std::istream &in) {
  if (!in.good()) throw IoError("dataset stream is not readable");
  std::vector<DatasetRow> rows;
  std::string line;
  uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    size_t t1 = line.find('\t');
    size_t t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos) {
      throw DataError("dataset line " + std::to_string(line_no) +
                      ": expected 3 tab-separated columns");
    }
    auto label = ParseOutputLabel(std::string_view(line).substr(t2 + 1));
    if (!label) {
      throw DataError("dataset line " + std::to_string(line_no) +
                      ": unknown label");
    }
    rows.push_back(DatasetRow{line.substr(0, t1), line.substr(t1 + 1, t2 - t1 - 1),
                              *label});
  }
  if (in.bad()) throw IoError("read error in dataset");
  return rows;
}

std::vector<DatasetRow> ReadDatasetTsv(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open dataset " + path.string());
  return ReadDatasetTsv(in);
}

nlohmann::json SplitSummary(std::span<const LabeledPair> pairs, Scheme scheme) {
  nlohmann::json labels = nlohmann::json::object();
  for (OutputLabel cls : SchemeClasses(scheme)) {
    labels[std::string(OutputLabelName(cls))] = 0;
  }
  nlohmann::json relations = nlohmann::json::object();
  for (const LabeledPair &p : pairs) {
    auto cls = ClassOf(scheme, p.label);
    if (cls) {
      auto &c = labels[std::string(OutputLabelName(*cls))];
      c = c.get<size_t>() + 1;
    }
    std::string r(RelationName(p.label));
    relations[r] = relations.value(r, size_t{0}) + 1;
  }
  return {{"total", pairs.size()}, {"labels", labels}, {"relations", relations}};
}

namespace {

void WriteFile(const std::filesystem::path &path,
               const std::function<void(std::ostream &)> &body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  body(out);
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace

void EmitDataset(const DatasetSplits &splits, const std::filesystem::path &dir,
                 nlohmann::json report) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

  auto train = ToRows(splits.train, splits.scheme);
  auto dev = ToRows(splits.dev, splits.scheme);
  WriteFile(dir / "train.tsv", [&](std::ostream &out) {
    WriteDatasetTsv(out, std::span<const DatasetRow>(train));
  });
  WriteFile(dir / "dev.tsv", [&](std::ostream &out) {
    WriteDatasetTsv(out, std::span<const DatasetRow>(dev));
  });

  report["schema_version"] = kReportSchemaVersion;
  report["scheme"] = SchemeName(splits.scheme);
  report["splits"] = {{"train", SplitSummary(splits.train, splits.scheme)},
                      {"dev", SplitSummary(splits.dev, splits.scheme)}};
  WriteFile(dir / "report.json",
            [&](std::ostream &out) { out << report.dump(2) << '\n'; });
}

}  // namespace taxopairs
