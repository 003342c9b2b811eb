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

#include "taxopairs/text.h"

#include <cstdint>

namespace taxopairs::text {

namespace {

// Returns the decoded code point and advances *pos, or returns -1 on an
// invalid sequence (leaving *pos past the offending lead byte).
int64_t DecodeOne(std::string_view s, size_t *pos) {
  const auto byte = [&](size_t i) { return static_cast<uint8_t>(s[i]); };
  uint8_t lead = byte(*pos);
  size_t start = *pos;
  ++*pos;
  if (lead < 0x80) return lead;

  int extra;
  char32_t cp;
  char32_t min;
  if ((lead & 0xE0) == 0xC0) {
    extra = 1; cp = lead & 0x1F; min = 0x80;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2; cp = lead & 0x0F; min = 0x800;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3; cp = lead & 0x07; min = 0x10000;
  } else {
    return -1;
  }
  if (start + extra >= s.size()) return -1;
  for (int i = 1; i <= extra; ++i) {
    uint8_t b = byte(start + i);
    if ((b & 0xC0) != 0x80) return -1;
    cp = (cp << 6) | (b & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return -1;
  *pos = start + extra + 1;
  return cp;
}

}  // namespace

std::optional<std::u32string> DecodeUtf8(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  size_t pos = 0;
  while (pos < bytes.size()) {
    int64_t cp = DecodeOne(bytes, &pos);
    if (cp < 0) return std::nullopt;
    out.push_back(static_cast<char32_t>(cp));
  }
  return out;
}

bool IsValidUtf8(std::string_view bytes) {
  size_t pos = 0;
  while (pos < bytes.size()) {
    if (DecodeOne(bytes, &pos) < 0) return false;
  }
  return true;
}

void AppendUtf8(char32_t cp, std::string *out) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string EncodeUtf8(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) AppendUtf8(cp, &out);
  return out;
}

char32_t ToLower(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 'A' && cp <= 'Z') ? cp + 0x20 : cp;
  }
  // Latin-1 Supplement, skipping the multiplication sign.
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  // Latin Extended-A: alternating upper/lower pairs with two phase shifts.
  if (cp >= 0x100 && cp <= 0x17F) {
    if (cp == 0x130) return 'i';
    if (cp == 0x178) return 0xFF;
    if ((cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E)) {
      return (cp % 2 == 1) ? cp + 1 : cp;
    }
    if (cp == 0x131 || cp == 0x138 || cp == 0x149 || cp == 0x17F) return cp;
    return (cp % 2 == 0) ? cp + 1 : cp;
  }
  // Greek capitals.
  if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 0x20;
  // Cyrillic.
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  return cp;
}

std::u32string ToLower(std::u32string_view cps) {
  std::u32string out(cps);
  for (char32_t &cp : out) cp = ToLower(cp);
  return out;
}

std::string ToLowerUtf8(std::string_view bytes) {
  auto cps = DecodeUtf8(bytes);
  if (!cps) {
    std::string out(bytes);
    for (char &c : out) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + 0x20);
    }
    return out;
  }
  return EncodeUtf8(ToLower(*cps));
}

size_t CodePointCount(std::string_view bytes) {
  size_t count = 0;
  size_t pos = 0;
  while (pos < bytes.size()) {
    DecodeOne(bytes, &pos);
    ++count;
  }
  return count;
}

bool IsDecimalDigit(char32_t cp) {
  return (cp >= '0' && cp <= '9') ||
         (cp >= 0x660 && cp <= 0x669) ||
         (cp >= 0x6F0 && cp <= 0x6F9) ||
         (cp >= 0x966 && cp <= 0x96F) ||
         (cp >= 0xFF10 && cp <= 0xFF19);
}

bool IsWhitespace(char32_t cp) {
  switch (cp) {
    case ' ': case '\t': case '\n': case '\r': case '\v': case '\f':
    case 0xA0: case 0x1680: case 0x2028: case 0x2029: case 0x202F:
    case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

std::vector<std::string> SplitWhitespace(std::string_view bytes) {
  std::vector<std::string> tokens;
  std::string current;
  size_t pos = 0;
  while (pos < bytes.size()) {
    size_t start = pos;
    int64_t cp = DecodeOne(bytes, &pos);
    if (cp >= 0 && IsWhitespace(static_cast<char32_t>(cp))) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current.append(bytes.substr(start, pos - start));
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::string_view Trim(std::string_view bytes) {
  // Decoding from both ends is awkward; titles are short, so scan forward.
  size_t pos = 0;
  size_t first = std::string_view::npos;
  size_t last_end = 0;
  while (pos < bytes.size()) {
    size_t start = pos;
    int64_t cp = DecodeOne(bytes, &pos);
    if (cp < 0 || !IsWhitespace(static_cast<char32_t>(cp))) {
      if (first == std::string_view::npos) first = start;
      last_end = pos;
    }
  }
  if (first == std::string_view::npos) return bytes.substr(0, 0);
  return bytes.substr(first, last_end - first);
}

}  // namespace taxopairs::text
