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

#ifndef TAXOPAIRS_LABELS_H_
#define TAXOPAIRS_LABELS_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace taxopairs {

// Relation between text1 and text2 in the source graph.
//   kChild:   text2 is a direct parent of text1
//   kParent:  text1 is a direct parent of text2
//   kNeutral: neither is an ancestor of the other
//   kSibling: the two share a direct parent
enum class RelationLabel { kChild = 0, kParent = 1, kNeutral = 2, kSibling = 3 };

inline constexpr std::array<RelationLabel, 4> kAllRelations = {
    RelationLabel::kChild, RelationLabel::kParent, RelationLabel::kNeutral,
    RelationLabel::kSibling};

inline size_t Index(RelationLabel label) { return static_cast<size_t>(label); }

std::string_view RelationName(RelationLabel label);

struct LabeledPair {
  std::string text1;
  std::string text2;
  RelationLabel label = RelationLabel::kNeutral;

  auto operator<=>(const LabeledPair &) const = default;
};

enum class Scheme {
  kThreeway,
  kFourway,
  kBinaryChildVsRest,
  kBinaryChildParentVsRest,
};

std::string_view SchemeName(Scheme scheme);
std::optional<Scheme> ParseScheme(std::string_view name);

// Label written to the dataset files.
enum class OutputLabel { kChild, kParent, kNeutral, kSibling, kEntail, kRest };

std::string_view OutputLabelName(OutputLabel label);
std::optional<OutputLabel> ParseOutputLabel(std::string_view name);

// Output classes of a scheme, in quota order.
std::vector<OutputLabel> SchemeClasses(Scheme scheme);

// Source relations folded into an output class, in enum order.
std::vector<RelationLabel> Constituents(Scheme scheme, OutputLabel cls);

// Output class of a relation under a scheme; nullopt if the scheme does not
// use that relation (siblings under threeway).
std::optional<OutputLabel> ClassOf(Scheme scheme, RelationLabel relation);

bool UsesSiblings(Scheme scheme);

// A row as stored on disk.
struct DatasetRow {
  std::string text1;
  std::string text2;
  OutputLabel label = OutputLabel::kNeutral;

  auto operator<=>(const DatasetRow &) const = default;
};

}  // namespace taxopairs

#endif  // TAXOPAIRS_LABELS_H_
