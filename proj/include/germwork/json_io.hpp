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

#ifndef GERMWORK_JSON_IO_HPP_
#define GERMWORK_JSON_IO_HPP_

#include <string>

#include <json.hpp>

#include "germwork/category.hpp"
#include "germwork/constellation.hpp"
#include "germwork/germs.hpp"
#include "germwork/proper.hpp"
#include "germwork/semigroup.hpp"
#include "germwork/semilattice.hpp"

namespace germwork {

enum class DocKind {
  semigroup,
  semilattice,
  action,
  partial_action,
  constellation,
  category,
};

std::string to_string(DocKind k);
DocKind dockind_from_string(const std::string& s);

// A named workspace object of one of the supported kinds; the member
// matching `kind` is the payload.
struct Document {
  DocKind kind = DocKind::semigroup;
  std::string name;

  Semigroup semigroup;
  Semilattice semilattice;
  Action action;
  PartialAction partial_action;
  std::vector<Bitset> ideals;  // accompanies partial_action when given
  Constellation constellation;
  Category category;
};

nlohmann::json semigroup_to_json(const Semigroup& s);
Semigroup semigroup_from_json(const nlohmann::json& j, bool force = false);

nlohmann::json partial_map_to_json(const PartialMap& m);
PartialMap partial_map_from_json(const nlohmann::json& j);

nlohmann::json semilattice_to_json(const Semilattice& e);
Semilattice semilattice_from_json(const nlohmann::json& j);

nlohmann::json action_to_json(const Action& a);
Action action_from_json(const nlohmann::json& j, bool force = false);

nlohmann::json partial_action_to_json(const PartialAction& pa,
                                      const std::vector<Bitset>& ideals);
void partial_action_from_json(const nlohmann::json& j, PartialAction* pa,
                              std::vector<Bitset>* ideals, bool force = false);

nlohmann::json constellation_to_json(const Constellation& q);
Constellation constellation_from_json(const nlohmann::json& j);

nlohmann::json category_to_json(const Category& c);
Category category_from_json(const nlohmann::json& j);

nlohmann::json document_to_json(const Document& d);
Document document_from_json(const nlohmann::json& j, bool force = false);

// Stable, sorted, byte-reproducible serialization of a document.
std::string document_to_bytes(const Document& d);

// DOT rendering of a finite category: units as nodes, every arrow as a
// labeled edge (units appear as self-loops).
std::string category_to_dot(const Category& c, const std::string& name);

}  // namespace germwork

#endif  // GERMWORK_JSON_IO_HPP_
