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

#ifndef TAXOPAIRS_TEXT_H_
#define TAXOPAIRS_TEXT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace taxopairs::text {

// Decodes UTF-8 into code points. Rejects overlong forms, surrogates and
// anything above U+10FFFF.
std::optional<std::u32string> DecodeUtf8(std::string_view bytes);

bool IsValidUtf8(std::string_view bytes);

void AppendUtf8(char32_t cp, std::string *out);
std::string EncodeUtf8(std::u32string_view cps);

// Simple case folding for ASCII, Latin-1, Latin Extended-A, basic Greek and
// basic Cyrillic. Everything else maps to itself.
char32_t ToLower(char32_t cp);
std::u32string ToLower(std::u32string_view cps);

// Lowercases valid UTF-8. Invalid input is lowercased byte-wise in ASCII only.
std::string ToLowerUtf8(std::string_view bytes);

// Number of code points; invalid sequences count one per byte.
size_t CodePointCount(std::string_view bytes);

// Decimal digits in ASCII, Arabic-Indic, Extended Arabic-Indic, Devanagari
// and fullwidth forms.
bool IsDecimalDigit(char32_t cp);

bool IsWhitespace(char32_t cp);

inline bool IsAsciiLetter(char32_t cp) {
  return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
}

// Splits on runs of whitespace; never yields empty tokens.
std::vector<std::string> SplitWhitespace(std::string_view bytes);

// Strips leading and trailing whitespace.
std::string_view Trim(std::string_view bytes);

}  // namespace taxopairs::text

#endif  // TAXOPAIRS_TEXT_H_
