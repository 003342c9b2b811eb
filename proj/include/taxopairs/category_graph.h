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

#ifndef TAXOPAIRS_CATEGORY_GRAPH_H_
#define TAXOPAIRS_CATEGORY_GRAPH_H_

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "taxopairs/edge_tsv.h"

namespace taxopairs {

struct NodeId {
  uint32_t value = 0;

  auto operator<=>(const NodeId &) const = default;
};

inline constexpr uint32_t kUnlimitedDepth =
    std::numeric_limits<uint32_t>::max();

struct GraphBuildStats {
  uint64_t input_edges = 0;
  uint64_t duplicate_edges = 0;
  uint64_t self_loops = 0;
};

// Immutable category graph in compressed sparse row form.
//
// Node ids are dense and assigned in byte-wise sorted title order, so the
// same edge multiset always yields the same ids. Parent and child adjacency
// lists are sorted, duplicate-free and exact transposes of each other. The
// graph may contain cycles but never self-loops.
class CategoryGraph {
 public:
  CategoryGraph();

  // Duplicate edges collapse; self-loops are dropped and counted.
  static CategoryGraph Build(std::span<const RawEdge> edges,
                             GraphBuildStats *stats = nullptr);

  // `titles` must be strictly increasing; `edges` are (child, parent) index
  // pairs into it. Isolated titles are kept as nodes.
  static CategoryGraph FromIndexedEdges(
      std::vector<std::string> titles,
      std::vector<std::pair<uint32_t, uint32_t>> edges,
      GraphBuildStats *stats = nullptr);

  // Assembles a graph from its serialized parts after validating every
  // structural invariant. Throws a data error on violation.
  static CategoryGraph FromCsr(std::string title_blob,
                               std::vector<uint64_t> title_offsets,
                               std::vector<uint64_t> parent_offsets,
                               std::vector<NodeId> parent_ids);

  size_t node_count() const { return title_offsets_.size() - 1; }
  size_t edge_count() const { return parent_ids_.size(); }

  std::string_view title(NodeId id) const;
  std::optional<NodeId> Find(std::string_view title) const;

  std::span<const NodeId> parents(NodeId id) const;
  std::span<const NodeId> children(NodeId id) const;

  bool HasEdge(NodeId child, NodeId parent) const;

  // All (child, parent) edges in id order.
  std::vector<RawEdge> Edges() const;

  // Raw CSR arrays, for serialization.
  const std::string &title_blob() const { return title_blob_; }
  const std::vector<uint64_t> &title_offsets() const { return title_offsets_; }
  const std::vector<uint64_t> &parent_offsets() const {
    return parent_offsets_;
  }
  const std::vector<NodeId> &parent_ids() const { return parent_ids_; }

 private:
  void BuildChildIndex();

  std::string title_blob_;
  std::vector<uint64_t> title_offsets_;
  std::vector<uint64_t> parent_offsets_;
  std::vector<NodeId> parent_ids_;
  std::vector<uint64_t> child_offsets_;
  std::vector<NodeId> child_ids_;
};

// Reusable ancestor query with per-query scratch space. Not thread-safe;
// give each worker its own instance.
//
// The search runs breadth-first from both ends: upward from the node and
// downward from the candidate ancestor, always growing the smaller frontier.
// On category graphs most random nodes have few descendants, so the downward
// side usually exhausts within a layer or two.
class AncestorQuery {
 public:
  explicit AncestorQuery(const CategoryGraph &graph);

  // True iff `ancestor` is reachable from `node` by following between 1 and
  // max_depth parent edges. A node is its own ancestor only through a cycle.
  bool IsAncestor(NodeId ancestor, NodeId node,
                  uint32_t max_depth = kUnlimitedDepth);

  // Either direction.
  bool Related(NodeId a, NodeId b, uint32_t max_depth = kUnlimitedDepth) {
    return IsAncestor(a, b, max_depth) || IsAncestor(b, a, max_depth);
  }

 private:
  void NextEpoch();
  bool Expand(bool upward);

  const CategoryGraph *graph_;
  std::vector<uint32_t> up_mark_;
  std::vector<uint32_t> down_mark_;
  uint32_t epoch_ = 0;
  std::vector<NodeId> up_frontier_;
  std::vector<NodeId> down_frontier_;
  std::vector<NodeId> next_;
};

// One-off form of AncestorQuery::IsAncestor.
bool IsAncestor(const CategoryGraph &graph, NodeId ancestor, NodeId node,
                uint32_t max_depth = kUnlimitedDepth);

// True iff the parent sets of a and b intersect.
bool Siblings(const CategoryGraph &graph, NodeId a, NodeId b);

// Size of the parent-set intersection.
size_t SharedParentCount(const CategoryGraph &graph, NodeId a, NodeId b);

// Hop distance from the nearest root, following child edges. Indexed by
// node id; unreachable nodes hold kUnreachable.
using DepthMap = std::vector<uint32_t>;
inline constexpr uint32_t kUnreachable = std::numeric_limits<uint32_t>::max();

// Throws a config error if `roots` is empty or holds an invalid id.
DepthMap DepthFromRoots(const CategoryGraph &graph,
                        std::span<const NodeId> roots);

// Subgraph induced on nodes with min_depth <= depth <= max_depth.
// Unreachable nodes are never kept. Pass kUnlimitedDepth for no upper bound.
CategoryGraph PruneByDepth(const CategoryGraph &graph, const DepthMap &depths,
                           uint32_t min_depth, uint32_t max_depth);

}  // namespace taxopairs

#endif  // TAXOPAIRS_CATEGORY_GRAPH_H_
