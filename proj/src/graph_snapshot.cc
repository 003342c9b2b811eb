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

#include "taxopairs/graph_snapshot.h"

#include <array>
#include <fstream>
#include <string>
#include <vector>

#include "taxopairs/error.h"
#include "taxopairs/random.h"

namespace taxopairs {

namespace {

constexpr std::string_view kMagic = "TXPGRAPH";

class Writer {
 public:
  explicit Writer(std::ostream &out) : out_(out) {}

  void Bytes(std::string_view bytes) {
    out_.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    hash_ = Fnv1a64(bytes, hash_);
  }

  template <typename T>
  void Int(T value) {
    std::array<char, sizeof(T)> buf;
    for (size_t i = 0; i < sizeof(T); ++i) {
      buf[i] = static_cast<char>((static_cast<uint64_t>(value) >> (8 * i)) & 0xFF);
    }
    Bytes(std::string_view(buf.data(), buf.size()));
  }

  uint64_t hash() const { return hash_; }

 private:
  std::ostream &out_;
  uint64_t hash_ = 0xcbf29ce484222325ULL;
};

class Reader {
 public:
  explicit Reader(std::istream &in) : in_(in) {}

  void Bytes(char *dst, size_t n) {
    in_.read(dst, static_cast<std::streamsize>(n));
    if (static_cast<size_t>(in_.gcount()) != n) {
      throw IoError("graph snapshot is truncated");
    }
    hash_ = Fnv1a64(std::string_view(dst, n), hash_);
  }

  template <typename T>
  T Int() {
    std::array<char, sizeof(T)> buf;
    Bytes(buf.data(), buf.size());
    uint64_t v = 0;
    for (size_t i = 0; i < sizeof(T); ++i) {
      v |= static_cast<uint64_t>(static_cast<uint8_t>(buf[i])) << (8 * i);
    }
    return static_cast<T>(v);
  }

  uint64_t hash() const { return hash_; }

 private:
  std::istream &in_;
  uint64_t hash_ = 0xcbf29ce484222325ULL;
};

}  // namespace

void WriteSnapshot(const CategoryGraph &graph, std::ostream &out) {
  Writer w(out);
  w.Bytes(kMagic);
  w.Int<uint32_t>(kSnapshotVersion);
  w.Int<uint32_t>(0);
  w.Int<uint64_t>(graph.node_count());
  w.Int<uint64_t>(graph.edge_count());
  w.Int<uint64_t>(graph.title_blob().size());
  for (uint64_t off : graph.title_offsets()) w.Int<uint64_t>(off);
  w.Bytes(graph.title_blob());
  for (uint64_t off : graph.parent_offsets()) w.Int<uint64_t>(off);
  for (NodeId p : graph.parent_ids()) w.Int<uint32_t>(p.value);
  uint64_t checksum = w.hash();
  w.Int<uint64_t>(checksum);
  if (!out) throw IoError("failed writing graph snapshot");
}

void WriteSnapshot(const CategoryGraph &graph,
                   const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  WriteSnapshot(graph, out);
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
}

CategoryGraph ReadSnapshot(std::istream &in) {
  if (!in.good()) throw IoError("graph snapshot stream is not readable");
  Reader r(in);
  std::string magic(kMagic.size(), '\0');
  r.Bytes(magic.data(), magic.size());
  if (magic != kMagic) throw DataError("not a graph snapshot (bad magic)");
  auto version = r.Int<uint32_t>();
  if (version != kSnapshotVersion) {
    throw DataError("unsupported graph snapshot version " +
                    std::to_string(version));
  }
  r.Int<uint32_t>();  // flags
  auto nodes = r.Int<uint64_t>();
  auto edges = r.Int<uint64_t>();
  auto title_bytes = r.Int<uint64_t>();
  // Guard allocations against corrupt headers.
  constexpr uint64_t kLimit = uint64_t{1} << 40;
  if (nodes >= (uint64_t{1} << 32) || edges > kLimit || title_bytes > kLimit) {
    throw DataError("graph snapshot header is implausible");
  }

  std::vector<uint64_t> title_offsets(nodes + 1);
  for (auto &off : title_offsets) off = r.Int<uint64_t>();
  std::string blob(title_bytes, '\0');
  r.Bytes(blob.data(), blob.size());
  std::vector<uint64_t> parent_offsets(nodes + 1);
  for (auto &off : parent_offsets) off = r.Int<uint64_t>();
  std::vector<NodeId> parent_ids(edges);
  for (auto &p : parent_ids) p = NodeId{r.Int<uint32_t>()};

  uint64_t expected = r.hash();
  uint64_t stored = r.Int<uint64_t>();
  if (stored != expected) throw DataError("graph snapshot checksum mismatch");

  return CategoryGraph::FromCsr(std::move(blob), std::move(title_offsets),
                                std::move(parent_offsets),
                                std::move(parent_ids));
}

CategoryGraph ReadSnapshot(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open graph snapshot " + path.string());
  return ReadSnapshot(in);
}

}  // namespace taxopairs
