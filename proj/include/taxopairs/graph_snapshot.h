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

#ifndef TAXOPAIRS_GRAPH_SNAPSHOT_H_
#define TAXOPAIRS_GRAPH_SNAPSHOT_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>

#include "taxopairs/category_graph.h"

namespace taxopairs {

// Binary graph cache. Layout (all integers little-endian), see
// docs/graph_snapshot.md:
//
//   char[8]  magic "TXPGRAPH"
//   u32      version (1)
//   u32      flags (0)
//   u64      node_count N
//   u64      edge_count E
//   u64      title_bytes B
//   u64[N+1] title_offsets
//   u8[B]    title_blob (titles in sorted order, no separators)
//   u64[N+1] parent_offsets
//   u32[E]   parent_ids
//   u64      FNV-1a 64 checksum of every preceding byte
//
// Child adjacency is rebuilt on load.
inline constexpr uint32_t kSnapshotVersion = 1;

void WriteSnapshot(const CategoryGraph &graph, std::ostream &out);
void WriteSnapshot(const CategoryGraph &graph,
                   const std::filesystem::path &path);

// Throws a data error on bad magic, unsupported version, checksum mismatch
// or structural corruption; an I/O error on truncation.
CategoryGraph ReadSnapshot(std::istream &in);
CategoryGraph ReadSnapshot(const std::filesystem::path &path);

}  // namespace taxopairs

#endif  // TAXOPAIRS_GRAPH_SNAPSHOT_H_
