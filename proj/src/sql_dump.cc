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

#include "taxopairs/sql_dump.h"

#include <algorithm>
#include <charconv>

#include "taxopairs/text.h"

namespace taxopairs {

namespace {

constexpr int kEof = std::char_traits<char>::eof();

bool IsDigit(int c) { return c >= '0' && c <= '9'; }
bool IsIdentChar(int c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || IsDigit(c) ||
         c == '_';
}
int HexValue(int c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::string Upper(std::string s) {
  for (char &c : s) {
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 0x20);
  }
  return s;
}

}  // namespace

SqlInsertReader::SqlInsertReader(std::istream &in, std::string table)
    : buf_(in.rdbuf()), table_(std::move(table)) {
  if (buf_ == nullptr || !in.good()) {
    throw IoError("SQL dump stream for table '" + table_ + "' is not readable");
  }
}

int SqlInsertReader::Peek() { return buf_->sgetc(); }

int SqlInsertReader::Get() {
  int c = buf_->sbumpc();
  if (c != kEof) ++offset_;
  return c;
}

void SqlInsertReader::SkipLine() {
  for (;;) {
    int c = Get();
    if (c == kEof || c == '\n') return;
  }
}

void SqlInsertReader::SkipSpaces() {
  for (int c = Peek(); c == ' ' || c == '\t' || c == '\r'; c = Peek()) Get();
}

bool SqlInsertReader::SkipBlanks() {
  bool newline = false;
  for (int c = Peek(); c == ' ' || c == '\t' || c == '\r' || c == '\n';
       c = Peek()) {
    if (c == '\n') newline = true;
    Get();
  }
  return newline;
}

bool SqlInsertReader::ReadStatementHeader() {
  static constexpr std::string_view kPrefix = "INSERT INTO ";
  for (;;) {
    if (Peek() == kEof) return false;
    size_t matched = 0;
    while (matched < kPrefix.size() && Peek() == kPrefix[matched]) {
      Get();
      ++matched;
    }
    if (matched < kPrefix.size()) {
      SkipLine();
      continue;
    }

    std::string name;
    bool quoted = Peek() == '`';
    if (quoted) Get();
    for (int c = Peek(); c != kEof && c != '\n'; c = Peek()) {
      if (quoted ? c == '`' : (c == ' ' || c == '(')) break;
      name.push_back(static_cast<char>(Get()));
    }
    if (quoted && Peek() == '`') Get();
    if (name != table_) {
      SkipLine();
      continue;
    }

    SkipSpaces();
    if (Peek() == '(') {
      // Explicit column list from --complete-insert dumps.
      for (int c = Get(); c != ')' && c != kEof && c != '\n'; c = Get()) {
      }
      SkipSpaces();
    }
    std::string keyword;
    while (IsIdentChar(Peek())) keyword.push_back(static_cast<char>(Get()));
    if (Upper(keyword) != "VALUES") {
      SkipLine();
      continue;
    }
    SkipBlanks();
    return true;
  }
}

SqlInsertReader::Result SqlInsertReader::Next(SqlRow *row,
                                              RecordError *error) {
  for (;;) {
    switch (state_) {
      case State::kBetweenStatements:
        if (!ReadStatementHeader()) return Result::kEnd;
        state_ = State::kTupleStart;
        break;

      case State::kAfterTuple: {
        bool newline = SkipBlanks();
        int c = Peek();
        if (c == ',') {
          Get();
          state_ = State::kTupleStart;
        } else if (c == ';') {
          Get();
          SkipLine();
          state_ = State::kBetweenStatements;
        } else if (c == kEof) {
          return Result::kEnd;
        } else {
          *error = RecordError{offset_, 0, "expected ',' or ';' after tuple"};
          if (newline) {
            // Unterminated statement; the next line starts afresh.
            state_ = State::kBetweenStatements;
          } else {
            Resync();
          }
          return Result::kError;
        }
        break;
      }

      case State::kTupleStart: {
        SkipBlanks();
        tuple_offset_ = offset_;
        if (Peek() == kEof) {
          state_ = State::kBetweenStatements;
          *error = RecordError{offset_, 0, "statement truncated before tuple"};
          return Result::kError;
        }
        std::string message;
        if (ParseTuple(row, &message)) {
          state_ = State::kAfterTuple;
          return Result::kRow;
        }
        *error = RecordError{tuple_offset_, 0, message};
        Resync();
        return Result::kError;
      }
    }
  }
}

void SqlInsertReader::Resync() {
  int prev = kEof;
  for (;;) {
    int c = Get();
    if (c == kEof || c == '\n') {
      state_ = State::kBetweenStatements;
      return;
    }
    if (prev == ')' && c == ',') {
      SkipBlanks();
      if (Peek() == '(') {
        state_ = State::kTupleStart;
        return;
      }
    } else if (prev == ')' && c == ';') {
      SkipLine();
      state_ = State::kBetweenStatements;
      return;
    }
    prev = c;
  }
}

bool SqlInsertReader::ParseTuple(SqlRow *row, std::string *message) {
  row->clear();
  if (Get() != '(') {
    *message = "expected '(' at tuple start";
    return false;
  }
  SkipBlanks();
  if (Peek() == ')') {
    Get();
    return true;
  }
  for (;;) {
    SkipBlanks();
    SqlValue value;
    if (!ParseValue(&value, message)) return false;
    row->push_back(std::move(value));
    SkipBlanks();
    int c = Get();
    if (c == ',') continue;
    if (c == ')') return true;
    *message = c == kEof ? "unexpected end of input inside tuple"
                         : "expected ',' or ')' after field " +
                               std::to_string(row->size());
    return false;
  }
}

bool SqlInsertReader::ParseString(std::string *out, std::string *message) {
  for (;;) {
    if (Peek() == '\n') {
      // mysqldump escapes line breaks, so a raw one means the literal was
      // cut short. Leave it for Resync.
      *message = "unterminated string literal";
      return false;
    }
    int c = Get();
    if (c == kEof) {
      *message = "unterminated string literal";
      return false;
    }
    if (c == '\\') {
      int e = Get();
      switch (e) {
        case kEof:
          *message = "unterminated string literal";
          return false;
        case '0': out->push_back('\0'); break;
        case 'b': out->push_back('\b'); break;
        case 'n': out->push_back('\n'); break;
        case 'r': out->push_back('\r'); break;
        case 't': out->push_back('\t'); break;
        case 'Z': out->push_back('\x1a'); break;
        case '%':
        case '_':
          // MySQL keeps the backslash for LIKE wildcards.
          out->push_back('\\');
          out->push_back(static_cast<char>(e));
          break;
        default:
          out->push_back(static_cast<char>(e));
      }
    } else if (c == '\'') {
      if (Peek() != '\'') return true;
      Get();
      out->push_back('\'');
    } else {
      out->push_back(static_cast<char>(c));
    }
  }
}

bool SqlInsertReader::ParseValue(SqlValue *value, std::string *message) {
  int c = Peek();
  if (c == '\'') {
    Get();
    value->kind = SqlValue::Kind::kString;
    return ParseString(&value->text, message);
  }

  if (c == '0') {
    // Possible 0x... hex blob.
    Get();
    if (Peek() == 'x' || Peek() == 'X') {
      Get();
      std::string digits;
      while (HexValue(Peek()) >= 0) digits.push_back(static_cast<char>(Get()));
      if (digits.size() % 2 != 0) {
        *message = "odd-length hex literal";
        return false;
      }
      value->kind = SqlValue::Kind::kString;
      for (size_t i = 0; i < digits.size(); i += 2) {
        value->text.push_back(static_cast<char>(HexValue(digits[i]) * 16 +
                                                HexValue(digits[i + 1])));
      }
      return true;
    }
    value->text.push_back('0');
    c = Peek();
    if (!(IsDigit(c) || c == '.' || c == 'e' || c == 'E')) {
      value->kind = SqlValue::Kind::kInteger;
      return true;
    }
  }

  if (IsDigit(c) || c == '-' || c == '+' || c == '.' || !value->text.empty()) {
    bool decimal = false;
    bool digits = !value->text.empty();
    for (c = Peek(); IsDigit(c) || c == '-' || c == '+' || c == '.' ||
                     c == 'e' || c == 'E';
         c = Peek()) {
      if (c == '.' || c == 'e' || c == 'E') decimal = true;
      if (IsDigit(c)) digits = true;
      value->text.push_back(static_cast<char>(Get()));
    }
    if (!digits) {
      *message = "malformed number '" + value->text + "'";
      return false;
    }
    value->kind =
        decimal ? SqlValue::Kind::kDecimal : SqlValue::Kind::kInteger;
    return true;
  }

  if (IsIdentChar(c)) {
    std::string word;
    while (IsIdentChar(Peek())) word.push_back(static_cast<char>(Get()));
    std::string upper = Upper(word);
    if (upper == "NULL") {
      value->kind = SqlValue::Kind::kNull;
      return true;
    }
    if (word[0] == '_') {
      // Character set introducer such as _binary 'abc'.
      SkipSpaces();
      if (Get() == '\'') {
        value->kind = SqlValue::Kind::kString;
        return ParseString(&value->text, message);
      }
    }
    *message = "unexpected token '" + word + "'";
    return false;
  }

  *message = c == kEof ? "unexpected end of input inside tuple"
                       : std::string("unexpected character '") +
                             static_cast<char>(c) + "'";
  return false;
}

std::string SqlLiteral(const SqlValue &value) {
  switch (value.kind) {
    case SqlValue::Kind::kNull:
      return "NULL";
    case SqlValue::Kind::kInteger:
    case SqlValue::Kind::kDecimal:
      return value.text;
    case SqlValue::Kind::kString:
      break;
  }
  std::string out = "'";
  for (char c : value.text) {
    switch (c) {
      case '\0': out += "\\0"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\x1a': out += "\\Z"; break;
      case '\'': out += "\\'"; break;
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      default: out.push_back(c);
    }
  }
  out.push_back('\'');
  return out;
}

std::string SqlTuple(const SqlRow &row) {
  std::string out = "(";
  for (size_t i = 0; i < row.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += SqlLiteral(row[i]);
  }
  out.push_back(')');
  return out;
}

std::optional<std::string> NormalizeTitle(std::string_view raw) {
  if (!text::IsValidUtf8(raw)) return std::nullopt;
  std::string title(raw);
  std::replace(title.begin(), title.end(), '_', ' ');
  return std::string(text::Trim(title));
}

std::string_view LinkTypeName(LinkType type) {
  switch (type) {
    case LinkType::kSubcat: return "subcat";
    case LinkType::kPage: return "page";
    case LinkType::kFile: return "file";
  }
  return "page";
}

namespace {

void Keep(DumpReadStats *stats, RecordError error) {
  if (stats->errors.size() < DumpReadStats::kMaxKeptErrors) {
    stats->errors.push_back(std::move(error));
  }
}

void Malformed(DumpReadStats *stats, uint64_t offset, std::string message) {
  ++stats->malformed;
  Keep(stats, RecordError{offset, 0, std::move(message)});
}

// Checks the field count; returns an error message or empty.
std::string CheckArity(const SqlRow &row, size_t max_column,
                       std::optional<size_t> expected) {
  if (expected && row.size() != *expected) {
    return "expected " + std::to_string(*expected) + " fields, got " +
           std::to_string(row.size());
  }
  if (row.size() <= max_column) {
    return "tuple has " + std::to_string(row.size()) +
           " fields, need at least " + std::to_string(max_column + 1);
  }
  return {};
}

template <typename T>
bool ParseInteger(const SqlValue &value, T *out) {
  if (value.kind != SqlValue::Kind::kInteger) return false;
  std::string_view s = value.text;
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && end == s.data() + s.size();
}

}  // namespace

PageDumpReader::PageDumpReader(std::istream &in, PageColumns columns,
                               std::string table)
    : reader_(in, std::move(table)), columns_(columns) {}

bool PageDumpReader::Next(PageRecord *record) {
  for (;;) {
    RecordError error;
    auto result = reader_.Next(&row_, &error);
    if (result == SqlInsertReader::Result::kEnd) return false;
    if (result == SqlInsertReader::Result::kError) {
      ++stats_.malformed;
      Keep(&stats_, std::move(error));
      continue;
    }
    ++stats_.tuples;
    uint64_t at = reader_.tuple_offset();
    size_t max_column = std::max(
        {columns_.page_id, columns_.namespace_id, columns_.title});
    if (auto problem = CheckArity(row_, max_column, columns_.expected_fields);
        !problem.empty()) {
      Malformed(&stats_, at, problem);
      continue;
    }
    PageRecord page;
    if (!ParseInteger(row_[columns_.page_id], &page.page_id) ||
        page.page_id == 0) {
      Malformed(&stats_, at, "page_id is not a positive integer");
      continue;
    }
    if (!ParseInteger(row_[columns_.namespace_id], &page.namespace_id)) {
      Malformed(&stats_, at, "page_namespace is not an integer");
      continue;
    }
    const SqlValue &raw = row_[columns_.title];
    if (raw.kind != SqlValue::Kind::kString) {
      Malformed(&stats_, at, "page_title is not a string");
      continue;
    }
    auto title = NormalizeTitle(raw.text);
    if (!title) {
      ++stats_.invalid_utf8;
      Keep(&stats_, RecordError{at, 0, "page_title is not valid UTF-8"});
      continue;
    }
    if (title->empty()) {
      Malformed(&stats_, at, "page_title is empty");
      continue;
    }
    page.title = std::move(*title);
    ++stats_.records;
    *record = std::move(page);
    return true;
  }
}

CategoryLinkDumpReader::CategoryLinkDumpReader(std::istream &in,
                                               CategoryLinkColumns columns,
                                               std::string table)
    : reader_(in, std::move(table)), columns_(columns) {}

bool CategoryLinkDumpReader::Next(CategoryLink *record) {
  for (;;) {
    RecordError error;
    auto result = reader_.Next(&row_, &error);
    if (result == SqlInsertReader::Result::kEnd) return false;
    if (result == SqlInsertReader::Result::kError) {
      ++stats_.malformed;
      Keep(&stats_, std::move(error));
      continue;
    }
    ++stats_.tuples;
    uint64_t at = reader_.tuple_offset();
    size_t max_column = std::max(
        {columns_.from_page_id, columns_.to_title, columns_.link_type});
    if (auto problem = CheckArity(row_, max_column, columns_.expected_fields);
        !problem.empty()) {
      Malformed(&stats_, at, problem);
      continue;
    }
    CategoryLink link;
    if (!ParseInteger(row_[columns_.from_page_id], &link.from_page_id) ||
        link.from_page_id == 0) {
      Malformed(&stats_, at, "cl_from is not a positive integer");
      continue;
    }
    const SqlValue &type = row_[columns_.link_type];
    if (type.kind != SqlValue::Kind::kString) {
      Malformed(&stats_, at, "cl_type is not a string");
      continue;
    }
    if (type.text == "subcat") {
      link.link_type = LinkType::kSubcat;
    } else if (type.text == "page") {
      link.link_type = LinkType::kPage;
    } else if (type.text == "file") {
      link.link_type = LinkType::kFile;
    } else {
      Malformed(&stats_, at, "unknown cl_type '" + type.text + "'");
      continue;
    }
    const SqlValue &raw = row_[columns_.to_title];
    if (raw.kind != SqlValue::Kind::kString) {
      Malformed(&stats_, at, "cl_to is not a string");
      continue;
    }
    auto title = NormalizeTitle(raw.text);
    if (!title) {
      ++stats_.invalid_utf8;
      Keep(&stats_, RecordError{at, 0, "cl_to is not valid UTF-8"});
      continue;
    }
    if (title->empty()) {
      Malformed(&stats_, at, "cl_to is empty");
      continue;
    }
    link.to_category_title = std::move(*title);
    ++stats_.records;
    *record = std::move(link);
    return true;
  }
}

}  // namespace taxopairs
