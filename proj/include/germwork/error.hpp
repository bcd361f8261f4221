// Copyright 2026 The germwork authors
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

#ifndef GERMWORK_ERROR_HPP_
#define GERMWORK_ERROR_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace germwork {

// Structural errors carry a stable machine-readable code ("NonAssociative",
// "SizeMismatch", "NotProper", ...) next to the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& msg) {
  throw Error(std::move(code), msg);
}

// First counterexample found by an exhaustive check, under the fixed
// element-index iteration order.
struct Witness {
  std::string law;
  std::vector<std::size_t> where;
  std::string note;

  std::string describe() const {
    std::string s = law;
    if (!where.empty()) {
      s += " at (";
      for (std::size_t i = 0; i < where.size(); ++i) {
        if (i) {
          s += ", ";
        }
        s += std::to_string(where[i]);
      }
      s += ")";
    }
    if (!note.empty()) {
      s += ": " + note;
    }
    return s;
  }
};

// nullopt means the check passed.
using Check = std::optional<Witness>;

inline void expect_pass(const Check& c, const std::string& context) {
  if (c) {
    fail("InternalError", context + " failed: " + c->describe());
  }
}

}  // namespace germwork

#endif  // GERMWORK_ERROR_HPP_
