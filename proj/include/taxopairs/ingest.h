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

#ifndef TAXOPAIRS_INGEST_H_
#define TAXOPAIRS_INGEST_H_

#include <cstdint>
#include <functional>
#include <istream>
#include <vector>

#include "taxopairs/edge_tsv.h"
#include "taxopairs/sql_dump.h"

namespace taxopairs {

struct DumpLayout {
  PageColumns page;
  CategoryLinkColumns categorylinks;
};

struct IngestStats {
  DumpReadStats page;
  DumpReadStats categorylinks;
  uint64_t category_pages = 0;
  uint64_t subcat_links = 0;
  uint64_t non_subcat_links = 0;
  // Subcat links whose cl_from is not a known category page.
  uint64_t unresolved_links = 0;
  uint64_t edges = 0;
};

// Joins the two tables into category -> parent-category edges. The page
// table is read first and only namespace-14 titles are kept in memory; the
// categorylinks table is then streamed and each `subcat` row emitted as
// (title of cl_from, cl_to). Edge order follows the categorylinks dump.
void IngestCategoryDumps(std::istream &page_dump,
                         std::istream &categorylinks_dump,
                         const DumpLayout &layout,
                         const std::function<void(RawEdge &&)> &sink,
                         IngestStats *stats);

std::vector<RawEdge> IngestCategoryDumps(std::istream &page_dump,
                                         std::istream &categorylinks_dump,
                                         const DumpLayout &layout = {},
                                         IngestStats *stats = nullptr);

}  // namespace taxopairs

#endif  // TAXOPAIRS_INGEST_H_
