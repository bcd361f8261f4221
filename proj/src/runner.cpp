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

#include "germwork/runner.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "germwork/catalog.hpp"

namespace germwork {

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckOutcome& c) { return c.pass; });
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["input"] = {{"name", input_name}, {"kind", input_kind}};
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e;
    e["name"] = c.name;
    e["status"] = c.pass ? "pass" : "fail";
    if (!c.info.empty()) {
      e["info"] = c.info;
    }
    if (!c.witness.empty()) {
      e["witness"] = c.witness;
    }
    list.push_back(std::move(e));
  }
  j["checks"] = std::move(list);
  return j;
}

std::string Report::to_bytes() const { return to_json().dump(2) + "\n"; }

std::vector<CheckOutcome> run_checks(std::vector<NamedCheck> checks,
                                     std::size_t threads) {
  std::vector<CheckOutcome> out(checks.size());
  auto work_one = [&](std::size_t i) {
    try {
      out[i] = checks[i].run();
    } catch (const Error& e) {
      out[i] = CheckOutcome{checks[i].name, false, "", e.what()};
    } catch (const std::exception& e) {
      out[i] = CheckOutcome{checks[i].name, false, "", e.what()};
    }
    out[i].name = checks[i].name;
  };
  if (threads <= 1 || checks.size() <= 1) {
    for (std::size_t i = 0; i < checks.size(); ++i) {
      work_one(i);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const std::size_t workers = std::min(threads, checks.size());
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&]() {
        for (std::size_t i = next.fetch_add(1); i < checks.size();
             i = next.fetch_add(1)) {
          work_one(i);
        }
      });
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CheckOutcome& a, const CheckOutcome& b) {
              return a.name < b.name;
            });
  return out;
}

namespace {

CheckOutcome pass(std::string name, std::string info = "") {
  return CheckOutcome{std::move(name), true, std::move(info), ""};
}

CheckOutcome outcome_of(std::string name, const Check& c,
                        std::string info_on_pass = "") {
  if (c) {
    return CheckOutcome{std::move(name), false, "", c->describe()};
  }
  return pass(std::move(name), std::move(info_on_pass));
}

Semigroup semigroup_of_document(const Document& doc) {
  if (doc.kind == DocKind::semigroup) {
    return doc.semigroup;
  }
  if (doc.kind == DocKind::semilattice) {
    // A semilattice is a restriction semigroup with star the identity map.
    return doc.semilattice.as_semigroup();
  }
  fail("IncompatibleKind",
       "command needs a semigroup (or semilattice) document");
}

Semigroup with_local_units(const Semigroup& s, bool* adjoined) {
  if (has_local_units(s)) {
    if (adjoined) {
      *adjoined = false;
    }
    return s;
  }
  if (adjoined) {
    *adjoined = true;
  }
  return adjoin_identity(s);
}

Slice random_slice(const Category& c, std::mt19937_64& rng) {
  Slice s(c.arrows());
  for (Elem u : c.units()) {
    std::vector<Elem> bucket;
    for (Elem x = 0; x < c.arrows(); ++x) {
      if (c.dom(x) == u) {
        bucket.push_back(x);
      }
    }
    const std::size_t pick =
        std::uniform_int_distribution<std::size_t>(0, bucket.size())(rng);
    if (pick > 0) {
      s.set(bucket[pick - 1]);
    }
  }
  return s;
}

std::vector<NamedCheck> checks_for_check(const Document& doc,
                                         const RunOptions& opt) {
  std::vector<NamedCheck> list;
  switch (doc.kind) {
    case DocKind::semigroup: {
      const Semigroup s = doc.semigroup;
      std::vector<Axioms> families{Axioms::inverse};
      if (s.has_star()) {
        families.push_back(Axioms::ehresmann);
        families.push_back(Axioms::restriction);
      }
      if (s.has_plus()) {
        families.push_back(Axioms::coehresmann);
        families.push_back(Axioms::corestriction);
        families.push_back(Axioms::bi_ehresmann);
        families.push_back(Axioms::birestriction);
        families.push_back(Axioms::range);
      }
      for (Axioms f : families) {
        list.push_back({"axioms:" + to_string(f), [s, f, opt]() {
                          return outcome_of("", check_axioms(s, f, opt.force));
                        }});
      }
      break;
    }
    case DocKind::semilattice: {
      const Semilattice e = doc.semilattice;
      list.push_back({"semilattice-axioms", [e]() {
                        // Construction verified the axioms; confirm the
                        // derived semigroup is restriction.
                        return outcome_of(
                            "", check_axioms(e.as_semigroup(),
                                             Axioms::restriction));
                      }});
      break;
    }
    case DocKind::action: {
      const Action a = doc.action;
      list.push_back(
          {"action-laws", [a]() { return outcome_of("", check_action(a)); }});
      break;
    }
    case DocKind::partial_action: {
      const PartialAction pa = doc.partial_action;
      list.push_back({"partial-action-laws", [pa]() {
                        return outcome_of("", check_partial_action(pa));
                      }});
      if (!doc.ideals.empty()) {
        const std::vector<Bitset> ideals = doc.ideals;
        list.push_back({"proper-partial-action", [pa, ideals]() {
                          return outcome_of(
                              "", check_proper_partial_action(pa, ideals));
                        }});
      }
      break;
    }
    case DocKind::constellation: {
      const Constellation q = doc.constellation;
      list.push_back({"constellation-axioms", [q]() {
                        return outcome_of("", check_constellation(q));
                      }});
      list.push_back({"inductive-axioms", [q]() {
                        return outcome_of("", check_inductive(q));
                      }});
      break;
    }
    case DocKind::category: {
      // from_tables already re-verified the category axioms on ingestion.
      list.push_back({"category-axioms", []() { return pass(""); }});
      break;
    }
  }
  return list;
}

std::vector<NamedCheck> checks_for_analyze(const Document& doc,
                                           const RunOptions& opt) {
  const Semigroup s = semigroup_of_document(doc);
  std::vector<NamedCheck> list;
  list.push_back({"restriction-axioms", [s, opt]() {
                    return outcome_of(
                        "", check_axioms(s, Axioms::restriction, opt.force));
                  }});
  list.push_back({"projections", [s]() {
                    return pass("", "count=" +
                                        std::to_string(projections(s).size()));
                  }});
  list.push_back({"local-units", [s]() {
                    return pass("", has_local_units(s) ? "true" : "false");
                  }});
  list.push_back({"sigma-oracle", [s]() {
                    sigma(s);  // throws if the two routes disagree
                    return pass("", "classes=" +
                                        std::to_string(sigma(s).classes().size()));
                  }});
  list.push_back({"proper-routes", [s]() {
                    const bool p = is_proper(s);  // checks both routes agree
                    return pass("", p ? "proper" : "not-proper");
                  }});
  list.push_back({"f-restriction", [s]() {
                    return pass("", is_f_restriction(s) ? "true" : "false");
                  }});
  list.push_back({"boolean-restriction", [s]() {
                    if (!restriction_zero(s)) {
                      return pass("", "no-restriction-zero");
                    }
                    const Check c = check_boolean_restriction(s);
                    return pass("", c ? "no: " + c->describe() : "yes");
                  }});
  return list;
}

std::vector<NamedCheck> checks_for_germs(const Document& doc,
                                         const RunOptions&) {
  const Semigroup base = semigroup_of_document(doc);
  bool adjoined = false;
  const Semigroup s = with_local_units(base, &adjoined);
  std::vector<NamedCheck> list;
  list.push_back({"local-units", [adjoined]() {
                    return pass("", adjoined ? "adjoined-identity" : "native");
                  }});
  list.push_back({"universal-size", [s]() {
                    const UniversalCategory u = universal_category(s);
                    if (u.germs.cat.arrows() != s.size()) {
                      return CheckOutcome{"", false, "", "arrow count differs"};
                    }
                    return pass("", "arrows=" +
                                        std::to_string(u.germs.cat.arrows()));
                  }});
  list.push_back({"embedding", [s]() {
                    const UniversalCategory u = universal_category(s);
                    const ThetaEmbedding t =
                        theta_embedding(u.beta.action, u.germs);
                    if (!t.injective) {
                      return CheckOutcome{"", false, "", "iota not injective"};
                    }
                    return pass("", "injective multiplicative");
                  }});
  list.push_back({"oplus", [s]() {
                    const OplusResult o = range_oplus(s);
                    std::string table;
                    for (Elem t = 0; t < s.size(); ++t) {
                      if (t) {
                        table += ",";
                      }
                      table += s.label(o.oplus[t]);
                    }
                    std::string info = "table=[" + table + "] ";
                    info += o.is_range ? "range"
                                       : "not-range: " + o.violation->describe();
                    return pass("", info);
                  }});
  list.push_back({"underlying-iso", [s]() {
                    if (!s.has_plus() ||
                        check_axioms(s, Axioms::range).has_value()) {
                      return pass("", "not-a-range-semigroup");
                    }
                    const UniversalCategory u = universal_category(s);
                    return outcome_of("", check_underlying_iso(s, u),
                                      "isomorphic");
                  }});
  list.push_back({"theta-plus", [s]() {
                    if (!s.has_plus() ||
                        check_axioms(s, Axioms::range).has_value()) {
                      return pass("", "not-a-range-semigroup");
                    }
                    const UniversalCategory u = universal_category(s);
                    const ThetaEmbedding t =
                        theta_embedding(u.beta.action, u.germs);
                    for (Elem a = 0; a < s.size(); ++a) {
                      if (!(slice_ran(u.germs.cat, t.image[a]) ==
                            t.image[s.plus(a)])) {
                        return CheckOutcome{
                            "", false, "",
                            "ran(iota(s)) != iota(s+) at " + s.label(a)};
                      }
                    }
                    return pass("", "ran(iota(s)) = iota(s+)");
                  }});
  return list;
}

std::vector<NamedCheck> checks_for_booleanize(const Document& doc,
                                              const RunOptions& opt) {
  std::vector<NamedCheck> list;
  if (doc.kind == DocKind::semilattice) {
    const Semilattice e = doc.semilattice;
    list.push_back({"filter-count", [e, opt]() {
                      const auto f = filters(e, opt.force);
                      if (f.size() != e.size()) {
                        return CheckOutcome{"", false, "", "count differs"};
                      }
                      return pass("", "count=" + std::to_string(f.size()));
                    }});
    list.push_back({"gba-powerset", [e]() {
                      const Booleanization b = booleanization(e);
                      return pass("", "elements=" +
                                          std::to_string(
                                              b.algebra.elements().size()));
                    }});
    list.push_back({"psi-roundtrips", [e]() {
                      // Exhaustive over all unions of D_e and all ideals.
                      const std::size_t n = e.size();
                      for (std::size_t mask = 0;
                           mask < (std::size_t{1} << n); ++mask) {
                        PointSet u(n);
                        for (Elem g = 0; g < n; ++g) {
                          if ((mask >> g) & 1) {
                            u |= basic_open(e, g);
                          }
                        }
                        if (!(order_ideal_psi_inv(e, order_ideal_psi(e, u)) ==
                              u)) {
                          return CheckOutcome{"", false, "",
                                              "Psi^{-1} Psi != id"};
                        }
                        Bitset cand(n);
                        for (Elem g = 0; g < n; ++g) {
                          if ((mask >> g) & 1) {
                            cand.set(g);
                          }
                        }
                        if (is_order_ideal(e, cand) &&
                            !(order_ideal_psi(e, order_ideal_psi_inv(
                                                     e, cand)) == cand)) {
                          return CheckOutcome{"", false, "",
                                              "Psi Psi^{-1} != id"};
                        }
                      }
                      return pass("", "exhaustive");
                    }});
    return list;
  }
  if (doc.kind == DocKind::category) {
    const Category c = doc.category;
    list.push_back({"slice-semigroup", [c, opt]() {
                      const SliceSemigroup ss =
                          slice_semigroup(c, kSliceGuard, opt.force);
                      return pass("", "slices=" +
                                          std::to_string(ss.slices.size()));
                    }});
    if (c.is_groupoid()) {
      list.push_back({"bislices", [c, opt]() {
                        const auto b =
                            enumerate_bislices(c, kSliceGuard, opt.force);
                        return pass("", "count=" + std::to_string(b.size()));
                      }});
      list.push_back({"groupoid-span", [c]() {
                        if (!groupoid_span_check(c)) {
                          return CheckOutcome{"", false, "", "spans differ"};
                        }
                        return pass("", "spans equal");
                      }});
    }
    return list;
  }
  const Semigroup base = semigroup_of_document(doc);
  bool adjoined = false;
  const Semigroup s = with_local_units(base, &adjoined);
  list.push_back({"slice-semigroup", [s, opt]() {
                    const UniversalCategory u = universal_category(s);
                    const SliceSemigroup bs =
                        slice_semigroup(u.germs.cat, kSliceGuard, opt.force);
                    return pass("", "slices=" +
                                        std::to_string(bs.slices.size()));
                  }});
  list.push_back({"universal-property", [s, opt]() {
                    const UniversalCategory u = universal_category(s);
                    const SliceSemigroup bs =
                        slice_semigroup(u.germs.cat, kSliceGuard, opt.force);
                    const ThetaEmbedding t =
                        theta_embedding(u.beta.action, u.germs);
                    std::vector<Elem> alpha(s.size());
                    for (Elem a = 0; a < s.size(); ++a) {
                      alpha[a] = bs.index_of(t.image[a]);
                    }
                    const BooleanizationExtension ext =
                        booleanization_extend(s, u.germs.cat, bs, alpha);
                    for (Elem w = 0; w < ext.psi.size(); ++w) {
                      if (ext.psi[w] != w) {
                        return CheckOutcome{"", false, "",
                                            "psi over iota is not identity"};
                      }
                    }
                    return pass("", "psi(iota) = id");
                  }});
  return list;
}

std::vector<NamedCheck> checks_for_esn(const Document& doc,
                                       const RunOptions&) {
  const Semigroup s = semigroup_of_document(doc);
  std::vector<NamedCheck> list;
  list.push_back({"inductive-axioms", [s]() {
                    constellation_of(s);  // verified inside
                    return pass("");
                  }});
  list.push_back({"roundtrip-ts", [s]() {
                    const Semigroup t = semigroup_of(constellation_of(s));
                    if (!(t.mul_table() == s.mul_table() &&
                          t.star_table() == s.star_table())) {
                      return CheckOutcome{"", false, "", "T(P(S)) != S"};
                    }
                    return pass("", "T(P(S)) = S");
                  }});
  list.push_back({"roundtrip-pt", [s]() {
                    const Constellation q = constellation_of(s);
                    const Constellation q2 =
                        constellation_of(semigroup_of(q));
                    if (!(q.product == q2.product && q.star == q2.star &&
                          q.order == q2.order && q.restr == q2.restr &&
                          q.corestr == q2.corestr)) {
                      return CheckOutcome{"", false, "", "P(T(Q)) != Q"};
                    }
                    return pass("", "P(T(Q)) = Q");
                  }});
  list.push_back({"slice-clauses", [s]() {
                    bool adjoined = false;
                    const Semigroup t = with_local_units(s, &adjoined);
                    const UniversalCategory u = universal_category(t);
                    const ThetaEmbedding emb =
                        theta_embedding(u.beta.action, u.germs);
                    slice_constellation(u.germs.cat, emb.image);
                    return pass("", adjoined ? "on S^1" : "on S");
                  }});
  list.push_back({"p-iota-iso", [s]() {
                    bool adjoined = false;
                    const Semigroup t = with_local_units(s, &adjoined);
                    const UniversalCategory u = universal_category(t);
                    const ThetaEmbedding emb =
                        theta_embedding(u.beta.action, u.germs);
                    const Constellation q = constellation_of(t);
                    const Constellation r =
                        slice_constellation(u.germs.cat, emb.image);
                    std::vector<Elem> rho(t.size());
                    for (Elem a = 0; a < t.size(); ++a) {
                      rho[a] = a;  // family is indexed by elements
                    }
                    const RadiantReport rep = check_radiant(q, r, rho);
                    if (!rep.isomorphism) {
                      return CheckOutcome{
                          "", false, "",
                          rep.witness ? rep.witness->describe()
                                      : "not a strong bijective radiant"};
                    }
                    return pass("", "isomorphism");
                  }});
  return list;
}

std::vector<NamedCheck> checks_for_decompose(const Document& doc,
                                             const RunOptions&) {
  const Semigroup s = semigroup_of_document(doc);
  std::vector<NamedCheck> list;
  list.push_back({"proper", [s]() {
                    if (!is_proper(s)) {
                      return CheckOutcome{"", false, "",
                                          "NotProper: sigma-related elements "
                                          "with equal stars differ"};
                    }
                    return pass("", "proper");
                  }});
  list.push_back({"induced-action", [s]() {
                    induced_partial_action(s, spectral_action(s).action);
                    return pass("");
                  }});
  list.push_back({"germ-iso", [s]() {
                    return outcome_of(
                        "", check_germ_iso(s, spectral_action(s).action));
                  }});
  list.push_back({"proper-partial-action", [s]() {
                    const ProperDecomposition d = decompose_proper(s);
                    return outcome_of("", check_proper_partial_action(
                                              d.induced.pa, d.ideals));
                  }});
  list.push_back({"structure-iso", [s]() {
                    const ProperDecomposition d = decompose_proper(s);
                    return pass("", "pairs=" +
                                        std::to_string(d.product.sg.size()));
                  }});
  list.push_back({"f-criterion", [s]() {
                    return pass("", f_restriction_criterion(s)
                                        ? "F-restriction"
                                        : "not-F-restriction");
                  }});
  return list;
}

std::vector<NamedCheck> checks_for_algebra(const Document& doc,
                                           const RunOptions& opt) {
  const Semigroup base = semigroup_of_document(doc);
  bool adjoined = false;
  const Semigroup s = with_local_units(base, &adjoined);
  const Ring ring = opt.ring;
  std::vector<NamedCheck> list;
  list.push_back({"f-iso", [s, ring]() {
                    const UniversalCategory u = universal_category(s);
                    const FIsoResult r = f_iso(s, u, ring);
                    if (!r.multiplicative) {
                      return CheckOutcome{"", false, "", "not multiplicative"};
                    }
                    if (!r.unitriangular) {
                      return CheckOutcome{"", false, "", "not unitriangular"};
                    }
                    if (!r.invertible) {
                      return CheckOutcome{"", false, "", "not invertible"};
                    }
                    if (r.dim_semigroup != r.dim_category) {
                      return CheckOutcome{"", false, "", "dimension mismatch"};
                    }
                    return pass("", "dim=" + std::to_string(r.dim_semigroup) +
                                        " ring=" + ring.name());
                  }});
  list.push_back({"conv-indicator-random", [s, ring, opt]() {
                    const UniversalCategory u = universal_category(s);
                    std::mt19937_64 rng(opt.seed);
                    for (int round = 0; round < 100; ++round) {
                      const Slice a = random_slice(u.germs.cat, rng);
                      const Slice b = random_slice(u.germs.cat, rng);
                      const Slice ab = slice_product(u.germs.cat, a, b);
                      if (!(convolution(u.germs.cat, indicator(ring, a),
                                        indicator(ring, b)) ==
                            indicator(ring, ab))) {
                        return CheckOutcome{"", false, "",
                                            "chi_U * chi_V != chi_{UV}"};
                      }
                    }
                    return pass("", "100 random pairs");
                  }});
  list.push_back({"conv-associative-random", [s, ring, opt]() {
                    const UniversalCategory u = universal_category(s);
                    std::mt19937_64 rng(opt.seed + 1);
                    const std::size_t dim = u.germs.cat.arrows();
                    auto random_elem = [&]() {
                      AlgebraElement f(ring, dim);
                      std::uniform_int_distribution<int> coeff(-3, 3);
                      std::uniform_int_distribution<std::size_t> idx(0,
                                                                     dim - 1);
                      for (int k = 0; k < 4; ++k) {
                        f.add(idx(rng), coeff(rng));
                      }
                      return f;
                    };
                    for (int round = 0; round < 100; ++round) {
                      const AlgebraElement f = random_elem();
                      const AlgebraElement g = random_elem();
                      const AlgebraElement h = random_elem();
                      const auto& c = u.germs.cat;
                      if (!(convolution(c, convolution(c, f, g), h) ==
                            convolution(c, f, convolution(c, g, h)))) {
                        return CheckOutcome{"", false, "",
                                            "convolution not associative"};
                      }
                    }
                    return pass("", "100 random triples");
                  }});
  return list;
}

std::vector<NamedCheck> checks_for_pr(const Document& doc,
                                      const RunOptions&) {
  const Semigroup s = semigroup_of_document(doc);
  std::vector<NamedCheck> list;
  list.push_back({"e-unitary", [s]() {
                    if (check_axioms(s, Axioms::inverse)) {
                      return CheckOutcome{"", false, "",
                                          "NotEUnitary: not inverse"};
                    }
                    if (!is_proper(s)) {
                      return CheckOutcome{"", false, "",
                                          "NotEUnitary: not proper"};
                    }
                    return pass("");
                  }});
  list.push_back({"petrich-reilly", [s]() {
                    const PetrichReilly pr = petrich_reilly(s);
                    return pass("", "pairs=" +
                                        std::to_string(pr.pr_product.size()));
                  }});
  return list;
}

}  // namespace

Report run_command(const std::string& command, const Document& doc,
                   const RunOptions& opt) {
  Report report;
  report.command = command;
  report.input_name = doc.name;
  report.input_kind = to_string(doc.kind);
  std::vector<NamedCheck> checks;
  if (command == "check") {
    checks = checks_for_check(doc, opt);
  } else if (command == "analyze") {
    checks = checks_for_analyze(doc, opt);
  } else if (command == "germs") {
    checks = checks_for_germs(doc, opt);
  } else if (command == "booleanize") {
    checks = checks_for_booleanize(doc, opt);
  } else if (command == "esn") {
    checks = checks_for_esn(doc, opt);
  } else if (command == "decompose") {
    checks = checks_for_decompose(doc, opt);
  } else if (command == "algebra-iso") {
    checks = checks_for_algebra(doc, opt);
  } else if (command == "pr") {
    checks = checks_for_pr(doc, opt);
  } else {
    fail("SchemaError", "unknown command: " + command);
  }
  report.checks = run_checks(std::move(checks), opt.threads);
  return report;
}

std::string export_document(const Document& doc, const std::string& format) {
  if (format == "json") {
    return document_to_bytes(doc);
  }
  if (format == "dot") {
    switch (doc.kind) {
      case DocKind::category:
        return category_to_dot(doc.category, doc.name);
      case DocKind::semigroup:
      case DocKind::semilattice: {
        bool adjoined = false;
        const Semigroup s =
            with_local_units(semigroup_of_document(doc), &adjoined);
        const UniversalCategory u = universal_category(s);
        return category_to_dot(u.germs.cat, doc.name);
      }
      case DocKind::action:
        return category_to_dot(germ_category(doc.action).cat, doc.name);
      case DocKind::partial_action:
        return category_to_dot(
            transformation_category(doc.partial_action).cat, doc.name);
      default:
        fail("IncompatibleKind", "no DOT rendering for this document kind");
    }
  }
  fail("SchemaError", "unknown export format: " + format);
}

}  // namespace germwork
