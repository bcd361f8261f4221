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

#ifndef GERMWORK_RUNNER_HPP_
#define GERMWORK_RUNNER_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "germwork/algebra.hpp"
#include "germwork/json_io.hpp"

namespace germwork {

struct RunOptions {
  Ring ring = Ring::q();
  bool force = false;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
};

struct CheckOutcome {
  std::string name;
  bool pass = false;
  std::string info;     // summary values on pass
  std::string witness;  // counterexample or error on failure
};

struct Report {
  std::string command;
  std::string input_name;
  std::string input_kind;
  std::vector<CheckOutcome> checks;  // ordered by check name

  bool ok() const;
  nlohmann::json to_json() const;
  std::string to_bytes() const;
};

// A named, independent verification step; the runner may fan these out to a
// worker pool. The report order is fixed by name, not completion order.
struct NamedCheck {
  std::string name;
  std::function<CheckOutcome()> run;
};

std::vector<CheckOutcome> run_checks(std::vector<NamedCheck> checks,
                                     std::size_t threads);

// Commands: check, analyze, germs, booleanize, esn, decompose, algebra-iso,
// pr. Throws IncompatibleKind when the document kind does not fit.
Report run_command(const std::string& command, const Document& doc,
                   const RunOptions& opt);

// Canonical bytes for a document (json) or a derived picture (dot).
std::string export_document(const Document& doc, const std::string& format);

}  // namespace germwork

#endif  // GERMWORK_RUNNER_HPP_
