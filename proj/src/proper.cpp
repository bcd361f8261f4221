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

#include "germwork/proper.hpp"

#include <algorithm>

namespace germwork {

Check check_partial_action(const PartialAction& pa) {
  const Semigroup& t = pa.monoid;
  if (pa.alpha.size() != t.size()) {
    return Witness{"alpha-size", {}, "one partial map per element required"};
  }
  for (Elem i = 0; i < t.size(); ++i) {
    if (pa.alpha[i].ground() != pa.space) {
      return Witness{"alpha-ground", {i}, ""};
    }
  }
  const auto one = identity_of(t);
  if (!one) {
    return Witness{"monoid-identity", {}, "the acting monoid needs a 1"};
  }
  if (!(pa.alpha[*one] == PartialMap::identity(pa.space))) {
    return Witness{"alpha-identity", {*one}, "alpha_1 is not the identity"};
  }
  // Premorphism: alpha_s alpha_t <= alpha_{st}.
  for (Elem s = 0; s < t.size(); ++s) {
    for (Elem u = 0; u < t.size(); ++u) {
      const PartialMap comp = pa.alpha[s].compose(pa.alpha[u]);
      if (!comp.restriction_of(pa.alpha[t.mul(s, u)])) {
        return Witness{"alpha-premorphism", {s, u}, ""};
      }
    }
  }
  return std::nullopt;
}

TransformationCategory transformation_category(const PartialAction& pa) {
  expect_pass(check_partial_action(pa), "partial action laws");
  const Semigroup& t = pa.monoid;
  const Elem one = *identity_of(t);

  TransformationCategory out;
  out.arrow_of.assign(t.size(), std::vector<Elem>(pa.space, knone));
  for (Elem s = 0; s < t.size(); ++s) {
    for (std::size_t x = 0; x < pa.space; ++x) {
      if (pa.alpha[s].defined(x)) {
        out.arrow_of[s][x] = out.arrows.size();
        out.arrows.emplace_back(s, x);
      }
    }
  }
  const std::size_t n = out.arrows.size();
  std::vector<Elem> dom(n), ran(n);
  std::vector<Elem> compose(n * n, knone);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto [s, x] = out.arrows[i];
    dom[i] = out.arrow_of[one][x];
    ran[i] = out.arrow_of[one][pa.alpha[s](x)];
    labels[i] = "(" + t.label(s) + "," + std::to_string(x) + ")";
  }
  // (s, x)(t, y) = (st, y) when alpha_t(y) = x; the point component of the
  // composite is forced to y by the category axioms.
  for (std::size_t i = 0; i < n; ++i) {
    const auto [s, x] = out.arrows[i];
    for (std::size_t j = 0; j < n; ++j) {
      const auto [u, y] = out.arrows[j];
      if (pa.alpha[u](y) != x) {
        continue;
      }
      const Elem su = t.mul(s, u);
      if (out.arrow_of[su][y] == knone) {
        fail("InternalError", "premorphism closure missing a composite");
      }
      compose[i * n + j] = out.arrow_of[su][y];
    }
  }
  out.cat = Category::from_tables(n, std::move(dom), std::move(ran),
                                  std::move(compose), std::move(labels));
  return out;
}

namespace {

// Shared worker: builds the class-wise union domains and checks whether all
// representatives agree; returns a conflict witness or fills `out`.
Check induce(const Semigroup& s, const Action& a, const SigmaQuotient& q,
             std::vector<PartialMap>* out) {
  const std::size_t classes =
      1 + *std::max_element(q.class_of.begin(), q.class_of.end());
  std::vector<std::vector<Elem>> members(classes);
  for (Elem u = 0; u < s.size(); ++u) {
    members[q.class_of[u]].push_back(u);
  }
  out->clear();
  for (std::size_t t = 0; t < classes; ++t) {
    std::vector<int> img(a.space, PartialMap::kUndef);
    for (Elem u : members[t]) {
      for (std::size_t x = 0; x < a.space; ++x) {
        if (!a.theta[u].defined(x)) {
          continue;
        }
        const int v = static_cast<int>(a.theta[u](x));
        if (img[x] == PartialMap::kUndef) {
          img[x] = v;
        } else if (img[x] != v) {
          return Witness{"representatives-disagree",
                         {t, x},
                         "two sigma-equivalent elements move the point "
                         "differently"};
        }
      }
    }
    out->emplace_back(a.space, std::move(img));
  }
  return std::nullopt;
}

}  // namespace

InducedPartialAction induced_partial_action(const Semigroup& s,
                                            const Action& a) {
  expect_pass(check_action(a), "action laws");
  if (!is_proper(s)) {
    fail("NotProper", "the induced partial action needs a proper semigroup");
  }
  InducedPartialAction out;
  out.quotient = quotient_by_sigma(s);
  std::vector<PartialMap> alpha;
  expect_pass(induce(s, a, out.quotient, &alpha),
              "well-definedness of the induced partial action");
  out.pa = PartialAction{out.quotient.monoid, a.space, std::move(alpha)};
  expect_pass(check_partial_action(out.pa), "induced premorphism laws");
  return out;
}

Check induced_action_conflict(const Semigroup& s, const Action& a) {
  expect_pass(check_action(a), "action laws");
  const SigmaQuotient q = quotient_by_sigma(s);
  std::vector<PartialMap> scratch;
  return induce(s, a, q, &scratch);
}

Check check_germ_iso(const Semigroup& s, const Action& a) {
  const InducedPartialAction ind = induced_partial_action(s, a);
  const GermCategory germs = germ_category(a);
  const TransformationCategory trans = transformation_category(ind.pa);
  const Category& c = trans.cat;
  const Category& d = germs.cat;
  if (c.arrows() != d.arrows()) {
    return Witness{"iso-arrow-count", {c.arrows(), d.arrows()}, ""};
  }
  // f(t, x) = [u, x] for any representative u with x in dom(theta_u).
  std::vector<Elem> f(c.arrows(), knone);
  std::vector<bool> hit(d.arrows(), false);
  for (std::size_t i = 0; i < c.arrows(); ++i) {
    const auto [t, x] = trans.arrows[i];
    for (Elem u = 0; u < s.size(); ++u) {
      if (ind.quotient.class_of[u] != t || !a.theta[u].defined(x)) {
        continue;
      }
      const Elem g = germs.germ(u, x);
      if (f[i] == knone) {
        f[i] = g;
      } else if (f[i] != g) {
        return Witness{"iso-not-well-defined", {i}, ""};
      }
    }
    if (f[i] == knone) {
      return Witness{"iso-missing-image", {i}, ""};
    }
    if (hit[f[i]]) {
      return Witness{"iso-not-injective", {i}, ""};
    }
    hit[f[i]] = true;
  }
  for (std::size_t i = 0; i < c.arrows(); ++i) {
    if (f[c.dom(i)] != d.dom(f[i]) || f[c.ran(i)] != d.ran(f[i])) {
      return Witness{"iso-dom-ran", {i}, ""};
    }
    for (std::size_t j = 0; j < c.arrows(); ++j) {
      const bool cc = c.composable(i, j);
      if (cc != d.composable(f[i], f[j])) {
        return Witness{"iso-composability", {i, j}, ""};
      }
      if (cc && f[c.compose(i, j)] != d.compose(f[i], f[j])) {
        return Witness{"iso-composition", {i, j}, ""};
      }
    }
  }
  return std::nullopt;
}

Check check_proper_partial_action(const PartialAction& pa,
                                  const std::vector<Bitset>& ideals) {
  if (auto w = check_partial_action(pa)) {
    return w;
  }
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (ideals[i].universe() != pa.space) {
      fail("SizeMismatch", "distinguished subset over the wrong space");
    }
    for (std::size_t j = i + 1; j < ideals.size(); ++j) {
      if (ideals[i] == ideals[j]) {
        fail("SizeMismatch", "distinguished subsets must be distinct");
      }
    }
  }
  auto find = [&](const Bitset& b) -> std::size_t {
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      if (ideals[i] == b) {
        return i;
      }
    }
    return knone;
  };
  // E is a meet-subsemilattice of the subsets of the space.
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    for (std::size_t j = 0; j < ideals.size(); ++j) {
      if (find(ideals[i] & ideals[j]) == knone) {
        return Witness{"E-meet-closed", {i, j}, ""};
      }
    }
  }
  for (Elem t = 0; t < pa.monoid.size(); ++t) {
    const Bitset dom = pa.alpha[t].domain();
    Bitset covered(pa.space);
    for (const auto& e : ideals) {
      if (e.subset_of(dom)) {
        covered |= e;
      }
    }
    if (!(covered == dom)) {
      return Witness{"P1", {t}, "domain is not a union of members of E"};
    }
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      if (!ideals[i].subset_of(dom)) {
        continue;
      }
      for (std::size_t j = 0; j < ideals.size(); ++j) {
        Bitset pre(pa.space);
        ideals[i].for_each([&](std::size_t x) {
          if (ideals[j].test(pa.alpha[t](x))) {
            pre.set(x);
          }
        });
        if (find(pre) == knone) {
          return Witness{"P2", {t, i, j}, ""};
        }
      }
    }
  }
  return std::nullopt;
}

Elem PartialActionProduct::index_of(Elem t, std::size_t e) const {
  const auto key = std::make_pair(t, e);
  auto it = std::lower_bound(elems.begin(), elems.end(), key);
  if (it == elems.end() || *it != key) {
    fail("InternalError", "pair not present in the partial action product");
  }
  return static_cast<Elem>(it - elems.begin());
}

PartialActionProduct partial_action_product(const PartialAction& pa,
                                            const std::vector<Bitset>& ideals) {
  if (auto w = check_proper_partial_action(pa, ideals)) {
    fail("NotProperAction", w->describe());
  }
  const Semigroup& t = pa.monoid;
  const Elem one = *identity_of(t);

  PartialActionProduct out;
  for (Elem s = 0; s < t.size(); ++s) {
    for (std::size_t e = 0; e < ideals.size(); ++e) {
      if (ideals[e].subset_of(pa.alpha[s].domain())) {
        out.elems.emplace_back(s, e);
      }
    }
  }
  std::sort(out.elems.begin(), out.elems.end());
  auto ideal_index = [&](const Bitset& b) -> std::size_t {
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      if (ideals[i] == b) {
        return i;
      }
    }
    fail("InternalError", "(P2) closure lost");
  };

  const std::size_t n = out.elems.size();
  std::vector<Elem> mul(n * n);
  std::vector<Elem> star(n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto [s, e] = out.elems[i];
    star[i] = out.index_of(one, e);
    labels[i] = "(" + t.label(s) + ",e" + std::to_string(e) + ")";
    for (std::size_t j = 0; j < n; ++j) {
      const auto [u, f] = out.elems[j];
      Bitset pre(pa.space);
      ideals[f].for_each([&](std::size_t x) {
        if (ideals[e].test(pa.alpha[u](x))) {
          pre.set(x);
        }
      });
      // pre = alpha_u^{-1}(e) n f, which lies inside dom(alpha_{su}).
      if (!pre.subset_of(pa.alpha[t.mul(s, u)].domain())) {
        fail("InternalError", "product pair escapes the domain");
      }
      mul[i * n + j] = out.index_of(t.mul(s, u), ideal_index(pre));
    }
  }
  out.sg = Semigroup::from_tables(n, std::move(mul), std::move(star),
                                  std::vector<Elem>{}, std::move(labels));

  // Clause (1): the restriction axioms hold.
  expect_pass(check_axioms(out.sg, Axioms::restriction),
              "restriction axioms of the partial action product");
  // Clause (2): projections are exactly the pairs (1, e), a copy of E.
  {
    const std::vector<Elem> proj = projections(out.sg);
    if (proj.size() != ideals.size()) {
      fail("InternalError", "P(S) is not a copy of E");
    }
    for (Elem p : proj) {
      if (out.elems[p].first != one) {
        fail("InternalError", "a projection is not of the form (1, e)");
      }
    }
    for (std::size_t e = 0; e < ideals.size(); ++e) {
      for (std::size_t f = 0; f < ideals.size(); ++f) {
        const Elem p = out.sg.mul(out.index_of(one, e), out.index_of(one, f));
        if (out.elems[p].second != ideal_index(ideals[e] & ideals[f])) {
          fail("InternalError", "e -> (1, e) is not a semilattice morphism");
        }
      }
    }
  }
  // Clause (3): (s, e) <= (t, f) iff s = t and e is contained in f.
  {
    const Relation leq = natural_order(out.sg);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const bool expected =
            out.elems[i].first == out.elems[j].first &&
            ideals[out.elems[i].second].subset_of(ideals[out.elems[j].second]);
        if (leq.has(i, j) != expected) {
          fail("InternalError", "order clause fails");
        }
      }
    }
  }
  // Clause (4): sigma identifies equal monoid parts, and S/sigma = T.
  {
    const Relation sig = sigma(out.sg);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (sig.has(i, j) !=
            (out.elems[i].first == out.elems[j].first)) {
          fail("InternalError", "sigma clause fails");
        }
      }
    }
    std::vector<bool> seen(t.size(), false);
    for (const auto& [s, e] : out.elems) {
      seen[s] = true;
    }
    for (Elem s = 0; s < t.size(); ++s) {
      if (!seen[s]) {
        fail("NotProperAction",
             "monoid element " + std::to_string(s) +
                 " carries no pair; S/sigma cannot be all of T");
      }
    }
    // Multiplication descends to T's table.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (out.elems[out.sg.mul(i, j)].first !=
            t.mul(out.elems[i].first, out.elems[j].first)) {
          fail("InternalError", "quotient is not T");
        }
      }
    }
  }
  // Clause (5): the product is proper.
  if (!is_proper(out.sg)) {
    fail("InternalError", "partial action product is not proper");
  }
  return out;
}

ProperDecomposition decompose_proper(const Semigroup& s) {
  if (!has_local_units(s)) {
    fail("NoLocalUnits", "decomposition needs local units");
  }
  if (!is_proper(s)) {
    fail("NotProper", "decomposition needs a proper semigroup");
  }
  ProperDecomposition out;
  out.spectral = spectral_action(s);
  out.induced = induced_partial_action(s, out.spectral.action);
  for (Elem e : out.spectral.projections) {
    // D_e is exactly the domain of the spectral map of e.
    out.ideals.push_back(out.spectral.action.theta[e].domain());
  }
  out.product = partial_action_product(out.induced.pa, out.ideals);
  out.psi.resize(s.size());
  std::vector<bool> hit(out.product.sg.size(), false);
  for (Elem a = 0; a < s.size(); ++a) {
    const Elem t = out.induced.quotient.class_of[a];
    const std::size_t e = out.spectral.point_of[s.star(a)];
    out.psi[a] = out.product.index_of(t, e);
    if (hit[out.psi[a]]) {
      fail("InternalError", "psi is not injective");
    }
    hit[out.psi[a]] = true;
  }
  if (s.size() != out.product.sg.size()) {
    fail("InternalError", "psi is not surjective");
  }
  for (Elem a = 0; a < s.size(); ++a) {
    if (out.product.sg.star(out.psi[a]) != out.psi[s.star(a)]) {
      fail("InternalError", "psi does not preserve star");
    }
    for (Elem b = 0; b < s.size(); ++b) {
      if (out.product.sg.mul(out.psi[a], out.psi[b]) != out.psi[s.mul(a, b)]) {
        fail("InternalError", "psi is not multiplicative");
      }
    }
  }
  return out;
}

bool f_restriction_criterion(const Semigroup& s) {
  const ProperDecomposition d = decompose_proper(s);
  const Semigroup& t = d.induced.quotient.monoid;
  bool principal_all = true;
  for (Elem u = 0; u < t.size() && principal_all; ++u) {
    const Bitset dom = d.induced.pa.alpha[u].domain();
    // Psi(dom) = the set of projections e with D_e inside the domain.
    std::vector<std::size_t> ideal;
    for (std::size_t e = 0; e < d.ideals.size(); ++e) {
      if (d.ideals[e].subset_of(dom)) {
        ideal.push_back(e);
      }
    }
    bool principal = false;
    for (std::size_t m : ideal) {
      bool top = true;
      for (std::size_t e : ideal) {
        if (!d.ideals[e].subset_of(d.ideals[m])) {
          top = false;
          break;
        }
      }
      if (top) {
        principal = true;
        break;
      }
    }
    principal_all = principal_all && principal;
  }
  if (principal_all != is_f_restriction(s)) {
    fail("InternalError",
         "the two F-restriction characterisations disagree");
  }
  return principal_all;
}

PetrichReilly petrich_reilly(const Semigroup& s) {
  if (check_axioms(s, Axioms::inverse)) {
    fail("NotEUnitary", "input is not an inverse semigroup");
  }
  if (!s.has_star()) {
    fail("SignatureTooWeak", "petrich_reilly needs the star signature");
  }
  const std::vector<Elem> inv = inverse_table(s);
  for (Elem a = 0; a < s.size(); ++a) {
    if (s.star(a) != s.mul(inv[a], a)) {
      fail("NotEUnitary", "star is not a^{-1} a");
    }
  }
  if (!is_proper(s)) {
    fail("NotEUnitary", "input inverse semigroup is not E-unitary");
  }

  PetrichReilly out;
  out.quotient = quotient_by_sigma(s);
  out.proj = projections(s);
  const std::size_t points = out.proj.size();
  std::vector<Elem> point_of(s.size(), knone);
  for (std::size_t i = 0; i < points; ++i) {
    point_of[out.proj[i]] = i;
  }
  const Semigroup& t = out.quotient.monoid;
  auto below = [&](Elem e, Elem f) { return s.mul(e, f) == e; };

  // The underlying partial action psi_u: e -> v e v^{-1} for representatives
  // v with e <= v*; well-definedness across representatives is verified.
  out.psi.reserve(t.size());
  for (Elem u = 0; u < t.size(); ++u) {
    std::vector<int> img(points, PartialMap::kUndef);
    for (std::size_t x = 0; x < points; ++x) {
      const Elem e = out.proj[x];
      for (Elem v = 0; v < s.size(); ++v) {
        if (out.quotient.class_of[v] != u || !below(e, s.star(v))) {
          continue;
        }
        const Elem w = s.mul(s.mul(v, e), inv[v]);
        if (point_of[w] == knone) {
          fail("InternalError", "v e v^{-1} is not an idempotent");
        }
        if (img[x] == PartialMap::kUndef) {
          img[x] = static_cast<int>(point_of[w]);
        } else if (img[x] != static_cast<int>(point_of[w])) {
          fail("InternalError", "psi_t depends on the representative");
        }
      }
    }
    out.psi.emplace_back(points, std::move(img));
  }
  // Each psi_u is an order isomorphism between order ideals.
  for (Elem u = 0; u < t.size(); ++u) {
    const PartialMap& p = out.psi[u];
    if (!p.injective()) {
      fail("InternalError", "psi_t is not injective");
    }
    for (std::size_t x = 0; x < points; ++x) {
      for (std::size_t y = 0; y < points; ++y) {
        if (!p.defined(x) || !p.defined(y)) {
          continue;
        }
        if (below(out.proj[x], out.proj[y]) !=
            below(out.proj[p(x)], out.proj[p(y)])) {
          fail("InternalError", "psi_t is not an order isomorphism");
        }
      }
      // Domains and ranges are order ideals.
      if (p.defined(x)) {
        for (std::size_t y = 0; y < points; ++y) {
          if (below(out.proj[y], out.proj[x]) && !p.defined(y)) {
            fail("InternalError", "dom(psi_t) is not an order ideal");
          }
        }
      }
    }
  }

  // The Petrich-Reilly pair product over psi.
  for (Elem u = 0; u < t.size(); ++u) {
    for (std::size_t e = 0; e < points; ++e) {
      if (out.psi[u].defined(e)) {
        out.pr_elems.emplace_back(u, e);
      }
    }
  }
  std::sort(out.pr_elems.begin(), out.pr_elems.end());
  auto pr_index = [&](Elem u, Elem e) -> Elem {
    const auto key = std::make_pair(u, e);
    auto it = std::lower_bound(out.pr_elems.begin(), out.pr_elems.end(), key);
    if (it == out.pr_elems.end() || *it != key) {
      fail("InternalError", "pair escapes the Petrich-Reilly product");
    }
    return static_cast<Elem>(it - out.pr_elems.begin());
  };
  const Elem tone = *identity_of(t);
  const std::size_t n = out.pr_elems.size();
  std::vector<Elem> mul(n * n);
  std::vector<Elem> star(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto [u, e] = out.pr_elems[i];
    star[i] = pr_index(tone, e);
    for (std::size_t j = 0; j < n; ++j) {
      const auto [v, f] = out.pr_elems[j];
      // (u, e)(v, f) = (uv, psi_v^{-1}(psi_v(f) ^ e)).
      const Elem meet =
          point_of[s.mul(out.proj[out.psi[v](f)], out.proj[e])];
      const PartialMap vinv = out.psi[v].inverse();
      if (!vinv.defined(meet)) {
        fail("InternalError", "psi_v(f) ^ e escapes ran(psi_v)");
      }
      mul[i * n + j] = pr_index(t.mul(u, v), vinv(meet));
    }
  }
  out.pr_product = Semigroup::from_tables(n, std::move(mul), std::move(star));
  expect_pass(check_axioms(out.pr_product, Axioms::inverse),
              "inverse axioms of the Petrich-Reilly product");
  expect_pass(check_axioms(out.pr_product, Axioms::restriction),
              "restriction axioms of the Petrich-Reilly product");

  // Theorem: s -> ([s]_sigma, s*) is an isomorphism.
  out.iso_from_s.resize(s.size());
  std::vector<bool> hit(n, false);
  for (Elem a = 0; a < s.size(); ++a) {
    out.iso_from_s[a] =
        pr_index(out.quotient.class_of[a], point_of[s.star(a)]);
    if (hit[out.iso_from_s[a]]) {
      fail("InternalError", "s -> ([s], s*) is not injective");
    }
    hit[out.iso_from_s[a]] = true;
  }
  if (s.size() != n) {
    fail("InternalError", "s -> ([s], s*) is not surjective");
  }
  for (Elem a = 0; a < s.size(); ++a) {
    if (out.pr_product.star(out.iso_from_s[a]) != out.iso_from_s[s.star(a)]) {
      fail("InternalError", "([s], s*) does not preserve star");
    }
    for (Elem b = 0; b < s.size(); ++b) {
      if (out.pr_product.mul(out.iso_from_s[a], out.iso_from_s[b]) !=
          out.iso_from_s[s.mul(a, b)]) {
        fail("InternalError", "([s], s*) is not multiplicative");
      }
    }
  }

  // The spectral route and gamma : (t, e) -> (t, D_e).
  out.spectral_route = decompose_proper(s);
  const auto& de = out.spectral_route.product;
  out.gamma.resize(n);
  const auto& bbar = out.spectral_route.induced.pa;
  // The identities beta-bar_t(D_e) = D_{psi_t(e)} and
  // beta-bar_t^{-1}(D_e) = D_{psi_t^{-1}(e)}.
  for (Elem u = 0; u < t.size(); ++u) {
    for (std::size_t e = 0; e < points; ++e) {
      const Bitset de_set = out.spectral_route.ideals[e];
      const bool in_dom = out.psi[u].defined(e);
      if (in_dom != de_set.subset_of(bbar.alpha[u].domain())) {
        fail("InternalError", "dom(psi_t) disagrees with dom(beta-bar_t)");
      }
      if (in_dom) {
        Bitset image(points);
        de_set.for_each([&](std::size_t x) { image.set(bbar.alpha[u](x)); });
        if (!(image == out.spectral_route.ideals[out.psi[u](e)])) {
          fail("InternalError", "beta-bar_t(D_e) != D_{psi_t(e)}");
        }
      }
      const PartialMap uinv = out.psi[u].inverse();
      if (uinv.defined(e)) {
        Bitset pre(points);
        bbar.alpha[u].domain().for_each([&](std::size_t x) {
          if (de_set.test(bbar.alpha[u](x))) {
            pre.set(x);
          }
        });
        if (!(pre == out.spectral_route.ideals[uinv(e)])) {
          fail("InternalError", "beta-bar_t^{-1}(D_e) != D_{psi_t^{-1}(e)}");
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto [u, e] = out.pr_elems[i];
    out.gamma[i] = de.index_of(u, e);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (de.sg.star(out.gamma[i]) != out.gamma[out.pr_product.star(i)]) {
      fail("InternalError", "gamma does not preserve star");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (de.sg.mul(out.gamma[i], out.gamma[j]) !=
          out.gamma[out.pr_product.mul(i, j)]) {
        fail("InternalError", "gamma is not multiplicative");
      }
    }
  }
  if (de.sg.size() != n) {
    fail("InternalError", "gamma is not bijective");
  }
  return out;
}

}  // namespace germwork
