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

#include "germwork/json_io.hpp"

#include <algorithm>

namespace germwork {

using nlohmann::json;

namespace {

std::vector<Elem> elem_vector(const json& j, const char* what) {
  if (!j.is_array()) {
    fail("SchemaError", std::string(what) + " must be an array");
  }
  std::vector<Elem> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) {
      fail("SchemaError", std::string(what) + " entries must be naturals");
    }
    out.push_back(v.get<Elem>());
  }
  return out;
}

std::vector<Elem> table_from_rows(const json& j, std::size_t n,
                                  const char* what, bool allow_null) {
  if (!j.is_array() || j.size() != n) {
    fail("SchemaError", std::string(what) + " must have one row per element");
  }
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != n) {
      fail("SchemaError", std::string(what) + " rows must have length size");
    }
    for (const auto& v : row) {
      if (v.is_null()) {
        if (!allow_null) {
          fail("SchemaError", std::string(what) + " entries must be naturals");
        }
        flat.push_back(knone);
      } else if (v.is_number_unsigned()) {
        flat.push_back(v.get<Elem>());
      } else {
        fail("SchemaError", std::string(what) + " entries must be naturals");
      }
    }
  }
  return flat;
}

json rows_from_table(const std::vector<Elem>& t, std::size_t n,
                     bool with_null) {
  json rows = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j2 = 0; j2 < n; ++j2) {
      const Elem v = t[i * n + j2];
      if (with_null && v == knone) {
        row.push_back(nullptr);
      } else {
        row.push_back(v);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json bitset_to_json(const Bitset& b) {
  json arr = json::array();
  b.for_each([&](std::size_t i) { arr.push_back(i); });
  return arr;
}

Bitset bitset_from_json(const json& j, std::size_t universe,
                        const char* what) {
  Bitset b(universe);
  for (Elem i : elem_vector(j, what)) {
    if (i >= universe) {
      fail("SchemaError", std::string(what) + " member out of range");
    }
    b.set(i);
  }
  return b;
}

}  // namespace

std::string to_string(DocKind k) {
  switch (k) {
    case DocKind::semigroup:
      return "semigroup";
    case DocKind::semilattice:
      return "semilattice";
    case DocKind::action:
      return "action";
    case DocKind::partial_action:
      return "partial-action";
    case DocKind::constellation:
      return "constellation";
    case DocKind::category:
      return "category";
  }
  return "?";
}

DocKind dockind_from_string(const std::string& s) {
  if (s == "semigroup") return DocKind::semigroup;
  if (s == "semilattice") return DocKind::semilattice;
  if (s == "action") return DocKind::action;
  if (s == "partial-action") return DocKind::partial_action;
  if (s == "constellation") return DocKind::constellation;
  if (s == "category") return DocKind::category;
  fail("SchemaError", "unknown document kind: " + s);
}

json semigroup_to_json(const Semigroup& s) {
  json j;
  j["size"] = s.size();
  j["mul"] = rows_from_table(s.mul_table(), s.size(), false);
  if (s.has_star()) {
    j["star"] = s.star_table();
  }
  if (s.has_plus()) {
    j["plus"] = s.plus_table();
  }
  if (s.has_labels()) {
    j["labels"] = s.labels();
  }
  return j;
}

Semigroup semigroup_from_json(const json& j, bool force) {
  if (!j.contains("size") || !j["size"].is_number_unsigned()) {
    fail("SchemaError", "semigroup needs a natural size");
  }
  const std::size_t n = j["size"].get<std::size_t>();
  std::vector<Elem> mul = table_from_rows(j.at("mul"), n, "mul", false);
  std::vector<Elem> star, plus;
  if (j.contains("star")) {
    star = elem_vector(j["star"], "star");
  }
  if (j.contains("plus")) {
    plus = elem_vector(j["plus"], "plus");
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : j["labels"]) {
      labels.push_back(l.get<std::string>());
    }
  }
  if (n > kExhaustiveGuard && !force) {
    fail("TooLarge", "semigroup exceeds the size guard (use force)");
  }
  return Semigroup::from_tables(n, std::move(mul), std::move(star),
                                std::move(plus), std::move(labels));
}

json partial_map_to_json(const PartialMap& m) {
  json j;
  j["ground"] = m.ground();
  json img = json::array();
  for (std::size_t x = 0; x < m.ground(); ++x) {
    if (m.defined(x)) {
      img.push_back(m(x));
    } else {
      img.push_back(nullptr);
    }
  }
  j["map"] = std::move(img);
  return j;
}

PartialMap partial_map_from_json(const json& j) {
  const std::size_t ground = j.at("ground").get<std::size_t>();
  const auto& arr = j.at("map");
  if (!arr.is_array() || arr.size() != ground) {
    fail("SchemaError", "partial map image must list every point");
  }
  std::vector<int> img;
  for (const auto& v : arr) {
    if (v.is_null()) {
      img.push_back(PartialMap::kUndef);
    } else {
      img.push_back(v.get<int>());
    }
  }
  return PartialMap(ground, std::move(img));
}

json semilattice_to_json(const Semilattice& e) {
  json j;
  j["size"] = e.size();
  std::vector<Elem> meet(e.size() * e.size());
  for (Elem a = 0; a < e.size(); ++a) {
    for (Elem b = 0; b < e.size(); ++b) {
      meet[a * e.size() + b] = e.meet(a, b);
    }
  }
  j["meet"] = rows_from_table(meet, e.size(), false);
  return j;
}

Semilattice semilattice_from_json(const json& j) {
  const std::size_t n = j.at("size").get<std::size_t>();
  return Semilattice::from_meet_table(
      n, table_from_rows(j.at("meet"), n, "meet", false));
}

json action_to_json(const Action& a) {
  json j;
  j["semigroup"] = semigroup_to_json(a.semigroup);
  j["space"] = a.space;
  json maps = json::array();
  for (const auto& m : a.theta) {
    maps.push_back(partial_map_to_json(m));
  }
  j["theta"] = std::move(maps);
  return j;
}

Action action_from_json(const json& j, bool force) {
  Action a;
  a.semigroup = semigroup_from_json(j.at("semigroup"), force);
  a.space = j.at("space").get<std::size_t>();
  for (const auto& m : j.at("theta")) {
    a.theta.push_back(partial_map_from_json(m));
  }
  return a;
}

json partial_action_to_json(const PartialAction& pa,
                            const std::vector<Bitset>& ideals) {
  json j;
  j["monoid"] = semigroup_to_json(pa.monoid);
  j["space"] = pa.space;
  json maps = json::array();
  for (const auto& m : pa.alpha) {
    maps.push_back(partial_map_to_json(m));
  }
  j["alpha"] = std::move(maps);
  if (!ideals.empty()) {
    json e = json::array();
    for (const auto& b : ideals) {
      e.push_back(bitset_to_json(b));
    }
    j["ideals"] = std::move(e);
  }
  return j;
}

void partial_action_from_json(const json& j, PartialAction* pa,
                              std::vector<Bitset>* ideals, bool force) {
  pa->monoid = semigroup_from_json(j.at("monoid"), force);
  pa->space = j.at("space").get<std::size_t>();
  pa->alpha.clear();
  for (const auto& m : j.at("alpha")) {
    pa->alpha.push_back(partial_map_from_json(m));
  }
  ideals->clear();
  if (j.contains("ideals")) {
    for (const auto& b : j["ideals"]) {
      ideals->push_back(bitset_from_json(b, pa->space, "ideal"));
    }
  }
}

json constellation_to_json(const Constellation& q) {
  json j;
  j["size"] = q.size;
  j["product"] = rows_from_table(q.product, q.size, true);
  j["star"] = q.star;
  return j;
}

Constellation constellation_from_json(const json& j) {
  const std::size_t n = j.at("size").get<std::size_t>();
  return derive_constellation(
      n, table_from_rows(j.at("product"), n, "product", true),
      elem_vector(j.at("star"), "star"));
}

json category_to_json(const Category& c) {
  json j;
  j["arrows"] = c.arrows();
  j["dom"] = json::array();
  j["ran"] = json::array();
  for (Elem x = 0; x < c.arrows(); ++x) {
    j["dom"].push_back(c.dom(x));
    j["ran"].push_back(c.ran(x));
  }
  json comp = json::array();
  for (Elem x = 0; x < c.arrows(); ++x) {
    for (Elem y = 0; y < c.arrows(); ++y) {
      if (c.composable(x, y)) {
        comp.push_back(json::array({x, y, c.compose(x, y)}));
      }
    }
  }
  j["compose"] = std::move(comp);
  if (c.has_labels()) {
    json labels = json::array();
    for (Elem x = 0; x < c.arrows(); ++x) {
      labels.push_back(c.label(x));
    }
    j["labels"] = std::move(labels);
  }
  return j;
}

Category category_from_json(const json& j) {
  const std::size_t n = j.at("arrows").get<std::size_t>();
  std::vector<Elem> dom = elem_vector(j.at("dom"), "dom");
  std::vector<Elem> ran = elem_vector(j.at("ran"), "ran");
  std::vector<Elem> compose(n * n, knone);
  for (const auto& triple : j.at("compose")) {
    if (!triple.is_array() || triple.size() != 3) {
      fail("SchemaError", "compose entries must be [x, y, xy] triples");
    }
    const Elem x = triple[0].get<Elem>();
    const Elem y = triple[1].get<Elem>();
    if (x >= n || y >= n) {
      fail("SchemaError", "compose triple out of range");
    }
    compose[x * n + y] = triple[2].get<Elem>();
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : j["labels"]) {
      labels.push_back(l.get<std::string>());
    }
  }
  return Category::from_tables(n, std::move(dom), std::move(ran),
                               std::move(compose), std::move(labels));
}

json document_to_json(const Document& d) {
  json j;
  j["kind"] = to_string(d.kind);
  j["name"] = d.name;
  switch (d.kind) {
    case DocKind::semigroup:
      j["payload"] = semigroup_to_json(d.semigroup);
      break;
    case DocKind::semilattice:
      j["payload"] = semilattice_to_json(d.semilattice);
      break;
    case DocKind::action:
      j["payload"] = action_to_json(d.action);
      break;
    case DocKind::partial_action:
      j["payload"] = partial_action_to_json(d.partial_action, d.ideals);
      break;
    case DocKind::constellation:
      j["payload"] = constellation_to_json(d.constellation);
      break;
    case DocKind::category:
      j["payload"] = category_to_json(d.category);
      break;
  }
  return j;
}

Document document_from_json(const json& j, bool force) {
  Document d;
  d.kind = dockind_from_string(j.at("kind").get<std::string>());
  d.name = j.value("name", "");
  const json& p = j.at("payload");
  switch (d.kind) {
    case DocKind::semigroup:
      d.semigroup = semigroup_from_json(p, force);
      break;
    case DocKind::semilattice:
      d.semilattice = semilattice_from_json(p);
      break;
    case DocKind::action:
      d.action = action_from_json(p, force);
      break;
    case DocKind::partial_action:
      partial_action_from_json(p, &d.partial_action, &d.ideals, force);
      break;
    case DocKind::constellation:
      d.constellation = constellation_from_json(p);
      break;
    case DocKind::category:
      d.category = category_from_json(p);
      break;
  }
  return d;
}

std::string document_to_bytes(const Document& d) {
  return document_to_json(d).dump(2) + "\n";
}

std::string category_to_dot(const Category& c, const std::string& name) {
  std::string out = "digraph \"" + name + "\" {\n";
  for (Elem u : c.units()) {
    out += "  \"u" + std::to_string(u) + "\" [label=\"" + c.label(u) +
           "\", shape=circle];\n";
  }
  for (Elem x = 0; x < c.arrows(); ++x) {
    out += "  \"u" + std::to_string(c.dom(x)) + "\" -> \"u" +
           std::to_string(c.ran(x)) + "\" [label=\"" + c.label(x) + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace germwork
