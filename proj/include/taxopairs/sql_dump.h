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

#ifndef TAXOPAIRS_SQL_DUMP_H_
#define TAXOPAIRS_SQL_DUMP_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taxopairs/error.h"

namespace taxopairs {

// Streaming reader for mysqldump-style SQL files as published by MediaWiki
// (page.sql, categorylinks.sql, ...). Only `INSERT INTO <table> ... VALUES
// (...),(...);` statements for the requested table are decoded; every other
// line is skipped. Each statement occupies one physical line, so memory use
// is bounded by a single tuple regardless of dump size.
//
// Decompression is the caller's job: pass a decompressed stream.

struct SqlValue {
  enum class Kind { kNull, kInteger, kDecimal, kString };

  Kind kind = Kind::kNull;
  // Unescaped bytes for strings, the literal text for numbers.
  std::string text;

  bool operator==(const SqlValue &other) const = default;
};

using SqlRow = std::vector<SqlValue>;

class SqlInsertReader {
 public:
  enum class Result { kRow, kError, kEnd };

  // Throws an I/O error if the stream is not readable.
  SqlInsertReader(std::istream &in, std::string table);

  SqlInsertReader(const SqlInsertReader &) = delete;
  SqlInsertReader &operator=(const SqlInsertReader &) = delete;

  // Reads the next tuple. On kError, *error describes the malformed tuple
  // and the reader has resynchronized at the next tuple or statement.
  Result Next(SqlRow *row, RecordError *error);

  // Bytes consumed so far.
  uint64_t offset() const { return offset_; }

  // Byte offset at which the most recently returned tuple started.
  uint64_t tuple_offset() const { return tuple_offset_; }

 private:
  enum class State { kBetweenStatements, kTupleStart, kAfterTuple };

  int Peek();
  int Get();
  void SkipLine();
  void SkipSpaces();
  bool SkipBlanks();
  bool ReadStatementHeader();
  bool ParseTuple(SqlRow *row, std::string *message);
  bool ParseValue(SqlValue *value, std::string *message);
  bool ParseString(std::string *out, std::string *message);
  void Resync();

  std::streambuf *buf_;
  std::string table_;
  State state_ = State::kBetweenStatements;
  uint64_t offset_ = 0;
  uint64_t tuple_offset_ = 0;
};

// Renders a value back to SQL literal syntax, escaping as mysqldump does.
std::string SqlLiteral(const SqlValue &value);
std::string SqlTuple(const SqlRow &row);

// MediaWiki title normalization: UTF-8 validation, underscores to spaces,
// surrounding whitespace stripped. Returns nullopt for invalid UTF-8.
std::optional<std::string> NormalizeTitle(std::string_view raw);

inline constexpr int kCategoryNamespace = 14;

struct PageRecord {
  uint64_t page_id = 0;
  int64_t namespace_id = 0;
  std::string title;

  bool operator==(const PageRecord &other) const = default;
};

enum class LinkType { kSubcat, kPage, kFile };

std::string_view LinkTypeName(LinkType type);

struct CategoryLink {
  uint64_t from_page_id = 0;
  std::string to_category_title;
  LinkType link_type = LinkType::kPage;

  bool operator==(const CategoryLink &other) const = default;
};

// Column positions inside each tuple. Defaults follow the long-standing
// MediaWiki schema; override them when the dump schema drifts. When
// expected_fields is set, tuples with any other field count are errors.
struct PageColumns {
  size_t page_id = 0;
  size_t namespace_id = 1;
  size_t title = 2;
  std::optional<size_t> expected_fields;
};

struct CategoryLinkColumns {
  size_t from_page_id = 0;
  size_t to_title = 1;
  size_t link_type = 6;
  std::optional<size_t> expected_fields;
};

// Counters shared by the typed readers. Records failing UTF-8 decoding are
// tallied separately from structurally malformed tuples.
struct DumpReadStats {
  uint64_t tuples = 0;
  uint64_t records = 0;
  uint64_t malformed = 0;
  uint64_t invalid_utf8 = 0;
  // First errors encountered, capped at kMaxKeptErrors.
  std::vector<RecordError> errors;

  static constexpr size_t kMaxKeptErrors = 100;

  uint64_t error_count() const { return malformed + invalid_utf8; }
};

class PageDumpReader {
 public:
  explicit PageDumpReader(std::istream &in, PageColumns columns = {},
                          std::string table = "page");

  // Returns false at end of stream. Bad tuples are skipped and counted.
  bool Next(PageRecord *record);

  const DumpReadStats &stats() const { return stats_; }

 private:
  SqlInsertReader reader_;
  PageColumns columns_;
  DumpReadStats stats_;
  SqlRow row_;
};

class CategoryLinkDumpReader {
 public:
  explicit CategoryLinkDumpReader(std::istream &in,
                                  CategoryLinkColumns columns = {},
                                  std::string table = "categorylinks");

  bool Next(CategoryLink *record);

  const DumpReadStats &stats() const { return stats_; }

 private:
  SqlInsertReader reader_;
  CategoryLinkColumns columns_;
  DumpReadStats stats_;
  SqlRow row_;
};

}  // namespace taxopairs

#endif  // TAXOPAIRS_SQL_DUMP_H_
