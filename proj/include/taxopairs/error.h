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

#ifndef TAXOPAIRS_ERROR_H_
#define TAXOPAIRS_ERROR_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace taxopairs {

// Error classes map one-to-one onto CLI exit codes.
enum class ErrorKind {
  kConfig = 1,
  kData = 2,
  kIo = 3,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error ConfigError(const std::string &message) {
  return Error(ErrorKind::kConfig, message);
}
inline Error DataError(const std::string &message) {
  return Error(ErrorKind::kData, message);
}
inline Error IoError(const std::string &message) {
  return Error(ErrorKind::kIo, message);
}

// A recoverable problem with a single input record. Parsing continues past
// it. SQL readers fill in the byte offset of the tuple, line readers the
// 1-based line number; the unused field stays zero.
struct RecordError {
  uint64_t offset = 0;
  uint64_t line = 0;
  std::string message;

  std::string ToString() const {
    if (line != 0) return "line " + std::to_string(line) + ": " + message;
    return "byte " + std::to_string(offset) + ": " + message;
  }
};

}  // namespace taxopairs

#endif  // TAXOPAIRS_ERROR_H_
