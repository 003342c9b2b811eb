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

#include "taxopairs/ingest.h"

#include <string>
#include <unordered_map>

namespace taxopairs {

void IngestCategoryDumps(std::istream &page_dump,
                         std::istream &categorylinks_dump,
                         const DumpLayout &layout,
                         const std::function<void(RawEdge &&)> &sink,
                         IngestStats *stats) {
  IngestStats local;
  if (stats == nullptr) stats = &local;

  std::unordered_map<uint64_t, std::string> categories;
  {
    PageDumpReader pages(page_dump, layout.page);
    PageRecord page;
    while (pages.Next(&page)) {
      if (page.namespace_id != kCategoryNamespace) continue;
      categories[page.page_id] = std::move(page.title);
    }
    stats->page = pages.stats();
  }
  stats->category_pages = categories.size();

  CategoryLinkDumpReader links(categorylinks_dump, layout.categorylinks);
  CategoryLink link;
  while (links.Next(&link)) {
    if (link.link_type != LinkType::kSubcat) {
      ++stats->non_subcat_links;
      continue;
    }
    ++stats->subcat_links;
    auto it = categories.find(link.from_page_id);
    if (it == categories.end()) {
      ++stats->unresolved_links;
      continue;
    }
    ++stats->edges;
    sink(RawEdge{it->second, std::move(link.to_category_title)});
  }
  stats->categorylinks = links.stats();
}

std::vector<RawEdge> IngestCategoryDumps(std::istream &page_dump,
                                         std::istream &categorylinks_dump,
                                         const DumpLayout &layout,
                                         IngestStats *stats) {
  std::vector<RawEdge> edges;
  IngestCategoryDumps(page_dump, categorylinks_dump, layout,
                      [&](RawEdge &&e) { edges.push_back(std::move(e)); },
                      stats);
  return edges;
}

}  // namespace taxopairs
