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

#include "taxopairs/category_graph.h"

#include <algorithm>
#include <deque>

#include "taxopairs/error.h"

namespace taxopairs {

CategoryGraph::CategoryGraph()
    : title_offsets_{0}, parent_offsets_{0}, child_offsets_{0} {}

CategoryGraph CategoryGraph::Build(std::span<const RawEdge> edges,
                                   GraphBuildStats *stats) {
  std::vector<std::string_view> names;
  names.reserve(edges.size() * 2);
  for (const RawEdge &e : edges) {
    names.push_back(e.child_title);
    names.push_back(e.parent_title);
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());

  auto index_of = [&](std::string_view title) {
    return static_cast<uint32_t>(
        std::lower_bound(names.begin(), names.end(), title) - names.begin());
  };
  std::vector<std::pair<uint32_t, uint32_t>> indexed;
  indexed.reserve(edges.size());
  for (const RawEdge &e : edges) {
    indexed.emplace_back(index_of(e.child_title), index_of(e.parent_title));
  }
  std::vector<std::string> titles(names.begin(), names.end());
  return FromIndexedEdges(std::move(titles), std::move(indexed), stats);
}

CategoryGraph CategoryGraph::FromIndexedEdges(
    std::vector<std::string> titles,
    std::vector<std::pair<uint32_t, uint32_t>> edges, GraphBuildStats *stats) {
  GraphBuildStats local;
  if (stats == nullptr) stats = &local;
  *stats = GraphBuildStats{};
  stats->input_edges = edges.size();

  auto loops = std::remove_if(edges.begin(), edges.end(), [](const auto &e) {
    return e.first == e.second;
  });
  stats->self_loops = static_cast<uint64_t>(edges.end() - loops);
  edges.erase(loops, edges.end());
  std::sort(edges.begin(), edges.end());
  auto dup = std::unique(edges.begin(), edges.end());
  stats->duplicate_edges = static_cast<uint64_t>(edges.end() - dup);
  edges.erase(dup, edges.end());

  CategoryGraph g;
  size_t n = titles.size();
  g.title_offsets_.assign(1, 0);
  g.title_offsets_.reserve(n + 1);
  for (const std::string &t : titles) {
    g.title_blob_ += t;
    g.title_offsets_.push_back(g.title_blob_.size());
  }
  g.parent_offsets_.assign(n + 1, 0);
  for (const auto &e : edges) ++g.parent_offsets_[e.first + 1];
  for (size_t i = 0; i < n; ++i) g.parent_offsets_[i + 1] += g.parent_offsets_[i];
  g.parent_ids_.reserve(edges.size());
  // Edges are sorted by (child, parent), which is exactly CSR order.
  for (const auto &e : edges) g.parent_ids_.push_back(NodeId{e.second});
  g.BuildChildIndex();
  return g;
}

CategoryGraph CategoryGraph::FromCsr(std::string title_blob,
                                     std::vector<uint64_t> title_offsets,
                                     std::vector<uint64_t> parent_offsets,
                                     std::vector<NodeId> parent_ids) {
  if (title_offsets.empty() || title_offsets.front() != 0 ||
      title_offsets.back() != title_blob.size()) {
    throw DataError("graph: title offsets do not span the title table");
  }
  size_t n = title_offsets.size() - 1;
  if (n > std::numeric_limits<uint32_t>::max()) {
    throw DataError("graph: too many nodes");
  }
  std::string_view blob = title_blob;
  std::string_view previous;
  for (size_t i = 0; i < n; ++i) {
    if (title_offsets[i + 1] < title_offsets[i]) {
      throw DataError("graph: title offsets are not monotone");
    }
    std::string_view t = blob.substr(title_offsets[i],
                                     title_offsets[i + 1] - title_offsets[i]);
    if (i > 0 && !(previous < t)) {
      throw DataError("graph: titles are not strictly sorted at node " +
                      std::to_string(i));
    }
    previous = t;
  }
  if (parent_offsets.size() != n + 1 || parent_offsets.front() != 0 ||
      parent_offsets.back() != parent_ids.size()) {
    throw DataError("graph: parent offsets do not span the edge table");
  }
  for (size_t i = 0; i < n; ++i) {
    if (parent_offsets[i + 1] < parent_offsets[i]) {
      throw DataError("graph: parent offsets are not monotone");
    }
    for (uint64_t k = parent_offsets[i]; k < parent_offsets[i + 1]; ++k) {
      uint32_t p = parent_ids[k].value;
      if (p >= n) throw DataError("graph: parent id out of range");
      if (p == i) throw DataError("graph: self-loop at node " + std::to_string(i));
      if (k > parent_offsets[i] && parent_ids[k - 1].value >= p) {
        throw DataError("graph: parent list not sorted at node " +
                        std::to_string(i));
      }
    }
  }
  CategoryGraph g;
  g.title_blob_ = std::move(title_blob);
  g.title_offsets_ = std::move(title_offsets);
  g.parent_offsets_ = std::move(parent_offsets);
  g.parent_ids_ = std::move(parent_ids);
  g.BuildChildIndex();
  return g;
}

void CategoryGraph::BuildChildIndex() {
  size_t n = node_count();
  child_offsets_.assign(n + 1, 0);
  for (NodeId p : parent_ids_) ++child_offsets_[p.value + 1];
  for (size_t i = 0; i < n; ++i) child_offsets_[i + 1] += child_offsets_[i];
  child_ids_.assign(parent_ids_.size(), NodeId{});
  std::vector<uint64_t> cursor(child_offsets_.begin(), child_offsets_.end() - 1);
  // Visiting children in increasing id order keeps each child list sorted.
  for (uint32_t c = 0; c < n; ++c) {
    for (uint64_t k = parent_offsets_[c]; k < parent_offsets_[c + 1]; ++k) {
      child_ids_[cursor[parent_ids_[k].value]++] = NodeId{c};
    }
  }
}

std::string_view CategoryGraph::title(NodeId id) const {
  return std::string_view(title_blob_)
      .substr(title_offsets_[id.value],
              title_offsets_[id.value + 1] - title_offsets_[id.value]);
}

std::optional<NodeId> CategoryGraph::Find(std::string_view t) const {
  uint32_t lo = 0;
  uint32_t hi = static_cast<uint32_t>(node_count());
  while (lo < hi) {
    uint32_t mid = lo + (hi - lo) / 2;
    if (title(NodeId{mid}) < t) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < node_count() && title(NodeId{lo}) == t) return NodeId{lo};
  return std::nullopt;
}

std::span<const NodeId> CategoryGraph::parents(NodeId id) const {
  return std::span<const NodeId>(parent_ids_)
      .subspan(parent_offsets_[id.value],
               parent_offsets_[id.value + 1] - parent_offsets_[id.value]);
}

std::span<const NodeId> CategoryGraph::children(NodeId id) const {
  return std::span<const NodeId>(child_ids_)
      .subspan(child_offsets_[id.value],
               child_offsets_[id.value + 1] - child_offsets_[id.value]);
}

bool CategoryGraph::HasEdge(NodeId child, NodeId parent) const {
  auto p = parents(child);
  return std::binary_search(p.begin(), p.end(), parent);
}

std::vector<RawEdge> CategoryGraph::Edges() const {
  std::vector<RawEdge> edges;
  edges.reserve(edge_count());
  for (uint32_t c = 0; c < node_count(); ++c) {
    for (NodeId p : parents(NodeId{c})) {
      edges.push_back(RawEdge{std::string(title(NodeId{c})),
                              std::string(title(p))});
    }
  }
  return edges;
}

AncestorQuery::AncestorQuery(const CategoryGraph &graph)
    : graph_(&graph),
      up_mark_(graph.node_count(), 0),
      down_mark_(graph.node_count(), 0) {}

void AncestorQuery::NextEpoch() {
  if (++epoch_ == 0) {
    std::fill(up_mark_.begin(), up_mark_.end(), 0);
    std::fill(down_mark_.begin(), down_mark_.end(), 0);
    epoch_ = 1;
  }
}

// Advances one frontier by a full layer. Returns true when it touches a node
// already reached by the opposite side.
bool AncestorQuery::Expand(bool upward) {
  auto &frontier = upward ? up_frontier_ : down_frontier_;
  auto &mine = upward ? up_mark_ : down_mark_;
  auto &theirs = upward ? down_mark_ : up_mark_;
  next_.clear();
  for (NodeId x : frontier) {
    auto neighbours = upward ? graph_->parents(x) : graph_->children(x);
    for (NodeId y : neighbours) {
      if (mine[y.value] == epoch_) continue;
      if (theirs[y.value] == epoch_) return true;
      mine[y.value] = epoch_;
      next_.push_back(y);
    }
  }
  frontier.swap(next_);
  return false;
}

bool AncestorQuery::IsAncestor(NodeId ancestor, NodeId node,
                               uint32_t max_depth) {
  if (max_depth == 0) return false;
  NextEpoch();
  down_frontier_.assign(1, ancestor);
  down_mark_[ancestor.value] = epoch_;
  up_frontier_.clear();
  for (NodeId p : graph_->parents(node)) {
    if (p == ancestor) return true;
    up_mark_[p.value] = epoch_;
    up_frontier_.push_back(p);
  }
  // Path length covered so far: up layers + down layers.
  uint32_t covered = 1;
  while (!up_frontier_.empty() && !down_frontier_.empty() &&
         covered < max_depth) {
    bool upward = up_frontier_.size() <= down_frontier_.size();
    if (Expand(upward)) return true;
    ++covered;
  }
  return false;
}

bool IsAncestor(const CategoryGraph &graph, NodeId ancestor, NodeId node,
                uint32_t max_depth) {
  AncestorQuery query(graph);
  return query.IsAncestor(ancestor, node, max_depth);
}

size_t SharedParentCount(const CategoryGraph &graph, NodeId a, NodeId b) {
  auto pa = graph.parents(a);
  auto pb = graph.parents(b);
  size_t count = 0;
  auto i = pa.begin();
  auto j = pb.begin();
  while (i != pa.end() && j != pb.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

bool Siblings(const CategoryGraph &graph, NodeId a, NodeId b) {
  return SharedParentCount(graph, a, b) > 0;
}

DepthMap DepthFromRoots(const CategoryGraph &graph,
                        std::span<const NodeId> roots) {
  if (roots.empty()) throw ConfigError("depth_from_roots: empty root set");
  DepthMap depth(graph.node_count(), kUnreachable);
  std::deque<NodeId> queue;
  for (NodeId r : roots) {
    if (r.value >= graph.node_count()) {
      throw ConfigError("depth_from_roots: root id out of range");
    }
    if (depth[r.value] == 0) continue;
    depth[r.value] = 0;
    queue.push_back(r);
  }
  while (!queue.empty()) {
    NodeId x = queue.front();
    queue.pop_front();
    for (NodeId c : graph.children(x)) {
      if (depth[c.value] != kUnreachable) continue;
      depth[c.value] = depth[x.value] + 1;
      queue.push_back(c);
    }
  }
  return depth;
}

CategoryGraph PruneByDepth(const CategoryGraph &graph, const DepthMap &depths,
                           uint32_t min_depth, uint32_t max_depth) {
  if (min_depth > max_depth) {
    throw ConfigError("prune_by_depth: min depth exceeds max depth");
  }
  if (depths.size() != graph.node_count()) {
    throw ConfigError("prune_by_depth: depth map does not match graph");
  }
  const uint32_t kDropped = std::numeric_limits<uint32_t>::max();
  std::vector<uint32_t> remap(graph.node_count(), kDropped);
  std::vector<std::string> titles;
  for (uint32_t i = 0; i < graph.node_count(); ++i) {
    uint32_t d = depths[i];
    if (d == kUnreachable || d < min_depth || d > max_depth) continue;
    remap[i] = static_cast<uint32_t>(titles.size());
    titles.emplace_back(graph.title(NodeId{i}));
  }
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t c = 0; c < graph.node_count(); ++c) {
    if (remap[c] == kDropped) continue;
    for (NodeId p : graph.parents(NodeId{c})) {
      if (remap[p.value] != kDropped) edges.emplace_back(remap[c], remap[p.value]);
    }
  }
  return CategoryGraph::FromIndexedEdges(std::move(titles), std::move(edges));
}

}  // namespace taxopairs
