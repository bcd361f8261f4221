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

#include "germwork/germs.hpp"

#include <algorithm>
#include <numeric>

namespace germwork {

Check check_action(const Action& a) {
  const Semigroup& s = a.semigroup;
  const std::size_t n = s.size();
  if (a.theta.size() != n) {
    return Witness{"theta-size", {}, "one partial map per element required"};
  }
  for (Elem i = 0; i < n; ++i) {
    if (a.theta[i].ground() != a.space) {
      return Witness{"theta-ground", {i}, "map over a different space"};
    }
  }
  // theta is a (., *)-morphism.
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      if (!(a.theta[s.mul(i, j)] == a.theta[i].compose(a.theta[j]))) {
        return Witness{"theta-multiplicative", {i, j}, ""};
      }
    }
  }
  for (Elem i = 0; i < n; ++i) {
    if (!(a.theta[s.star(i)] == a.theta[i].star())) {
      return Witness{"theta-star", {i}, ""};
    }
  }
  // Non-degenerate: projection domains cover the space.
  Bitset covered(a.space);
  for (Elem e : projections(s)) {
    covered |= a.theta[e].domain();
  }
  if (covered != Bitset::full(a.space)) {
    return Witness{"non-degenerate", {}, "projection domains do not cover"};
  }
  return std::nullopt;
}

Action tautological_action(const PtPresentation& p) {
  Action a;
  a.semigroup = p.sg;
  a.space = p.maps.empty() ? 0 : p.maps[0].ground();
  a.theta = p.maps;
  return a;
}

SpectralAction spectral_action(const Semigroup& s) {
  if (!has_local_units(s)) {
    fail("NoLocalUnits", "the spectral action needs local units");
  }
  std::vector<Elem> proj = projections(s);
  std::vector<Elem> point_of(s.size(), knone);
  for (std::size_t i = 0; i < proj.size(); ++i) {
    point_of[proj[i]] = i;
  }
  const std::size_t space = proj.size();

  std::vector<PartialMap> theta;
  theta.reserve(s.size());
  for (Elem t = 0; t < s.size(); ++t) {
    std::vector<int> img(space, PartialMap::kUndef);
    for (std::size_t x = 0; x < space; ++x) {
      const Elem e = proj[x];
      // dom(beta_t) = D_{t*}.
      if (s.mul(s.star(t), e) != e) {
        continue;  // e is not below t*
      }
      // The image filter {h : (h t)* >= e} must be principal; its generator
      // is the meet of its members.
      Elem gen = knone;
      bool in_filter_gen = false;
      for (std::size_t h = 0; h < space; ++h) {
        const Elem he = s.star(s.mul(proj[h], t));
        if (s.mul(he, e) == e) {  // (h t)* >= e
          gen = gen == knone ? proj[h] : s.mul(gen, proj[h]);
        }
      }
      if (gen == knone) {
        fail("InternalError", "empty image filter in the spectral action");
      }
      // Verify the meet is itself in the filter (the minimum exists).
      in_filter_gen = s.mul(s.star(s.mul(gen, t)), e) == e;
      if (!in_filter_gen) {
        fail("InternalError",
             "image filter of the spectral action is not principal");
      }
      img[x] = static_cast<int>(point_of[gen]);
    }
    theta.emplace_back(space, std::move(img));
  }
  SpectralAction out;
  out.action = Action{s, space, std::move(theta)};
  out.projections = std::move(proj);
  out.point_of = std::move(point_of);
  expect_pass(check_action(out.action), "spectral action laws");
  return out;
}

namespace {

struct UnionFind {
  std::vector<Elem> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  Elem find(Elem a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void unite(Elem a, Elem b) { parent[find(a)] = find(b); }
};

}  // namespace

GermCategory germ_category(const Action& a) {
  expect_pass(check_action(a), "action laws");
  const Semigroup& s = a.semigroup;
  const std::size_t n = s.size();
  const Relation leq = natural_order(s);

  // below[t] = {u : u <= t}; live[x] = {u : x in dom(theta_u)}.
  std::vector<Bitset> below(n, Bitset(n));
  for (Elem u = 0; u < n; ++u) {
    for (Elem t = 0; t < n; ++t) {
      if (leq.has(u, t)) {
        below[t].set(u);
      }
    }
  }
  std::vector<Bitset> live(a.space, Bitset(n));
  for (Elem t = 0; t < n; ++t) {
    a.theta[t].domain().for_each([&](std::size_t x) { live[x].set(t); });
  }

  // Index the pair set Omega = {(t, x) : x in dom(theta_t)}.
  std::vector<std::vector<Elem>> pair_id(n, std::vector<Elem>(a.space, knone));
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem t = 0; t < n; ++t) {
    for (std::size_t x = 0; x < a.space; ++x) {
      if (a.theta[t].defined(x)) {
        pair_id[t][x] = pairs.size();
        pairs.emplace_back(t, x);
      }
    }
  }

  // Germ equivalence: (t, x) ~ (v, x) iff some u <= t, v has x in its
  // domain. The relation is transitive, so pairwise union suffices.
  UnionFind uf(pairs.size());
  for (std::size_t x = 0; x < a.space; ++x) {
    const auto members = live[x].members();
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const Bitset common = below[members[i]] & below[members[j]];
        if (common.intersects(live[x])) {
          uf.unite(pair_id[members[i]][x], pair_id[members[j]][x]);
        }
      }
    }
  }

  // Canonical representative per class: a <=-minimal member, with smallest
  // element index as tie-break.
  std::vector<std::vector<Elem>> class_members(pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    class_members[uf.find(p)].push_back(p);
  }
  std::vector<Elem> canon_pair(pairs.size(), knone);
  for (std::size_t root = 0; root < pairs.size(); ++root) {
    const auto& members = class_members[root];
    Elem best = knone;
    for (Elem p : members) {
      const Elem t = pairs[p].first;
      bool minimal = true;
      for (Elem q : members) {
        const Elem v = pairs[q].first;
        if (v != t && leq.has(v, t)) {
          minimal = false;
          break;
        }
      }
      if (minimal && (best == knone || t < pairs[best].first)) {
        best = p;
      }
    }
    canon_pair[root] = best;
  }

  // Arrows: classes sorted by canonical (element, point).
  std::vector<Elem> roots;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (uf.find(p) == p) {
      roots.push_back(p);
    }
  }
  std::sort(roots.begin(), roots.end(), [&](Elem r1, Elem r2) {
    return pairs[canon_pair[r1]] < pairs[canon_pair[r2]];
  });
  std::vector<Elem> arrow_of_root(pairs.size(), knone);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    arrow_of_root[roots[i]] = i;
  }
  const std::size_t arrows = roots.size();

  GermCategory g;
  g.canon.resize(arrows);
  g.arrow_of.assign(n, std::vector<Elem>(a.space, knone));
  for (std::size_t i = 0; i < arrows; ++i) {
    g.canon[i] = pairs[canon_pair[roots[i]]];
  }
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [t, x] = pairs[p];
    g.arrow_of[t][x] = arrow_of_root[uf.find(p)];
  }

  // Unit arrows: the germs of projections; exactly one per point.
  g.unit_of_point.assign(a.space, knone);
  for (Elem e : projections(s)) {
    for (std::size_t x = 0; x < a.space; ++x) {
      const Elem arr = g.arrow_of[e][x];
      if (arr == knone) {
        continue;
      }
      if (g.unit_of_point[x] == knone) {
        g.unit_of_point[x] = arr;
      } else if (g.unit_of_point[x] != arr) {
        fail("InternalError", "unit germs at a point are not unique");
      }
    }
  }
  for (std::size_t x = 0; x < a.space; ++x) {
    if (g.unit_of_point[x] == knone) {
      fail("InternalError", "a point carries no unit germ");
    }
  }

  // dom([t, x]) = [t*, x]; ran([t, x]) = the unit at theta_t(x).
  std::vector<Elem> dom(arrows), ran(arrows);
  for (std::size_t i = 0; i < arrows; ++i) {
    const auto [t, x] = g.canon[i];
    dom[i] = g.unit_of_point[x];
    if (g.arrow_of[s.star(t)][x] != dom[i]) {
      fail("InternalError", "dom germ is not the unit at its point");
    }
    ran[i] = g.unit_of_point[a.theta[t](x)];
  }
  // Composition: [t, theta_v(y)][v, y] = [t v, y].
  std::vector<Elem> compose(arrows * arrows, knone);
  for (std::size_t i = 0; i < arrows; ++i) {
    for (std::size_t j = 0; j < arrows; ++j) {
      if (dom[i] != ran[j]) {
        continue;
      }
      const auto [t, x] = g.canon[i];
      const auto [v, y] = g.canon[j];
      if (a.theta[v](y) != x) {
        fail("InternalError", "composable germs with mismatched points");
      }
      const Elem tv = s.mul(t, v);
      if (g.arrow_of[tv][y] == knone) {
        fail("InternalError", "composite pair escapes Omega");
      }
      compose[i * arrows + j] = g.arrow_of[tv][y];
    }
  }

  // Representative independence of the composite (kept to modest sizes; the
  // category axioms below are always verified).
  if (pairs.size() <= 2000) {
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto [t, x] = pairs[p];
      for (std::size_t q = 0; q < pairs.size(); ++q) {
        const auto [v, y] = pairs[q];
        if (a.theta[v](y) != x) {
          continue;
        }
        const Elem lhs = g.arrow_of[s.mul(t, v)][y];
        const Elem rhs =
            compose[g.arrow_of[t][x] * arrows + g.arrow_of[v][y]];
        if (lhs != rhs) {
          fail("InternalError", "germ composition depends on representatives");
        }
      }
    }
  }

  std::vector<std::string> labels(arrows);
  for (std::size_t i = 0; i < arrows; ++i) {
    labels[i] = "[" + s.label(g.canon[i].first) + "," +
                std::to_string(g.canon[i].second) + "]";
  }
  g.cat = Category::from_tables(arrows, std::move(dom), std::move(ran),
                                std::move(compose), std::move(labels));
  return g;
}

UniversalCategory universal_category(const Semigroup& s) {
  UniversalCategory u;
  u.beta = spectral_action(s);
  u.germs = germ_category(u.beta.action);
  const std::size_t n = s.size();

  // s -> [s, (s*)^] is a bijection onto the arrow set.
  u.arrow_of_elem.resize(n);
  std::vector<bool> hit(u.germs.cat.arrows(), false);
  for (Elem t = 0; t < n; ++t) {
    const Elem x = u.beta.point_of[s.star(t)];
    const Elem arr = u.germs.germ(t, x);
    if (arr == knone) {
      fail("InternalError", "missing germ [s, (s*)^]");
    }
    if (hit[arr]) {
      fail("InternalError", "s -> [s, (s*)^] is not injective");
    }
    hit[arr] = true;
    u.arrow_of_elem[t] = arr;
  }
  if (u.germs.cat.arrows() != n) {
    fail("InternalError", "universal category has the wrong arrow count");
  }
  // Germ equality over e^ is the equation se = te, and the canonical
  // representative of [s, e^] is (se, e).
  for (Elem t = 0; t < n; ++t) {
    for (std::size_t x = 0; x < u.beta.action.space; ++x) {
      const Elem arr = u.germs.germ(t, x);
      if (arr == knone) {
        continue;
      }
      const Elem e = u.beta.projections[x];
      const auto [c, cx] = u.germs.canon[arr];
      if (cx != x || c != s.mul(t, e)) {
        fail("InternalError",
             "spectral germ canonical form is not (se, e)");
      }
    }
  }
  return u;
}

ThetaEmbedding theta_embedding(const Action& a, const GermCategory& c) {
  const Semigroup& s = a.semigroup;
  const std::size_t n = s.size();
  ThetaEmbedding out;
  out.image.reserve(n);
  for (Elem t = 0; t < n; ++t) {
    Slice u(c.cat.arrows());
    a.theta[t].domain().for_each(
        [&](std::size_t x) { u.set(c.germ(t, x)); });
    if (!is_slice(c.cat, u)) {
      fail("InternalError", "Theta image is not a slice");
    }
    out.image.push_back(std::move(u));
  }
  for (Elem i = 0; i < n; ++i) {
    if (!(slice_star(c.cat, out.image[i]) == out.image[s.star(i)])) {
      fail("InternalError", "Theta does not preserve star");
    }
    for (Elem j = 0; j < n; ++j) {
      if (!(slice_product(c.cat, out.image[i], out.image[j]) ==
            out.image[s.mul(i, j)])) {
        fail("InternalError", "Theta is not multiplicative");
      }
    }
  }
  out.injective = true;
  for (Elem i = 0; i < n && out.injective; ++i) {
    for (Elem j = i + 1; j < n; ++j) {
      if (out.image[i] == out.image[j]) {
        out.injective = false;
        break;
      }
    }
  }
  return out;
}

OplusResult range_oplus(const Semigroup& s) {
  if (!has_local_units(s)) {
    fail("NoLocalUnits", "the oplus operation needs local units");
  }
  const std::vector<Elem> proj = projections(s);
  auto below = [&](Elem e, Elem f) { return s.mul(f, e) == e; };  // e <= f
  OplusResult out;
  out.oplus.resize(s.size());
  for (Elem t = 0; t < s.size(); ++t) {
    Elem gen = knone;
    for (Elem h : proj) {
      if (below(s.star(t), s.star(s.mul(h, t)))) {  // (h t)* >= t*
        gen = gen == knone ? h : s.mul(gen, h);
      }
    }
    if (gen == knone || !below(s.star(t), s.star(s.mul(gen, t)))) {
      fail("InternalError", "oplus filter has no minimum");
    }
    out.oplus[t] = gen;
  }
  out.extended = s.with_plus(out.oplus);
  out.violation = check_axioms(out.extended, Axioms::range);
  out.is_range = !out.violation.has_value();
  return out;
}

Category underlying_category(const Semigroup& s) {
  if (check_axioms(s, Axioms::range)) {
    fail("NotRange", "the underlying category needs a range semigroup");
  }
  const std::size_t n = s.size();
  std::vector<Elem> dom(n), ran(n);
  std::vector<Elem> compose(n * n, knone);
  std::vector<std::string> labels(n);
  for (Elem t = 0; t < n; ++t) {
    dom[t] = s.star(t);
    ran[t] = s.plus(t);
    labels[t] = s.label(t);
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (s.star(a) == s.plus(b)) {
        compose[a * n + b] = s.mul(a, b);
      }
    }
  }
  return Category::from_tables(n, std::move(dom), std::move(ran),
                               std::move(compose), std::move(labels));
}

Check check_underlying_iso(const Semigroup& s, const UniversalCategory& u) {
  const Category c = underlying_category(s);
  const Category& d = u.germs.cat;
  if (c.arrows() != d.arrows()) {
    return Witness{"iso-arrow-count", {}, ""};
  }
  const auto& f = u.arrow_of_elem;  // bijective by construction
  for (Elem a = 0; a < c.arrows(); ++a) {
    if (f[c.dom(a)] != d.dom(f[a]) || f[c.ran(a)] != d.ran(f[a])) {
      return Witness{"iso-dom-ran", {a}, ""};
    }
    for (Elem b = 0; b < c.arrows(); ++b) {
      const bool cc = c.composable(a, b);
      const bool dc = d.composable(f[a], f[b]);
      if (cc != dc) {
        return Witness{"iso-composability", {a, b}, ""};
      }
      if (cc && f[c.compose(a, b)] != d.compose(f[a], f[b])) {
        return Witness{"iso-composition", {a, b}, ""};
      }
    }
  }
  return std::nullopt;
}

BooleanizationExtension booleanization_extend(const Semigroup& s,
                                              const Category& target_cat,
                                              const SliceSemigroup& target,
                                              const std::vector<Elem>& alpha) {
  const std::size_t n = s.size();
  if (alpha.size() != n) {
    fail("SizeMismatch", "alpha must be defined on all of S");
  }
  // alpha is a (., *)-morphism into the target.
  for (Elem i = 0; i < n; ++i) {
    if (target.sg.star(alpha[i]) != alpha[s.star(i)]) {
      fail("NotMorphism", "alpha does not preserve star");
    }
    for (Elem j = 0; j < n; ++j) {
      if (target.sg.mul(alpha[i], alpha[j]) != alpha[s.mul(i, j)]) {
        fail("NotMorphism", "alpha is not multiplicative");
      }
    }
  }
  // alpha restricted to projections is non-degenerate into P(T): the images
  // must cover the unit space of the target category.
  Bitset covered(target_cat.arrows());
  for (Elem e : projections(s)) {
    covered |= target.slices[alpha[e]];
  }
  Bitset all_units(target_cat.arrows());
  for (Elem u : target_cat.units()) {
    all_units.set(u);
  }
  if (!all_units.subset_of(covered)) {
    fail("DegenerateOnProjections",
         "alpha(P(S)) does not cover the target unit space");
  }

  BooleanizationExtension out;
  const UniversalCategory u = universal_category(s);
  out.bs = slice_semigroup(u.germs.cat);
  const ThetaEmbedding iota = theta_embedding(u.beta.action, u.germs);
  out.iota.resize(n);
  for (Elem i = 0; i < n; ++i) {
    out.iota[i] = out.bs.index_of(iota.image[i]);
  }

  const Relation leq = natural_order(s);
  // psi of the singleton germ {[t, (t*)^]}: alpha(t) minus the images of
  // everything strictly below t.
  std::vector<Slice> singleton_psi(n, Bitset(target_cat.arrows()));
  for (Elem t = 0; t < n; ++t) {
    Slice img = target.slices[alpha[t]];
    for (Elem v = 0; v < n; ++v) {
      if (v != t && leq.has(v, t)) {
        img = img - target.slices[alpha[v]];
      }
    }
    singleton_psi[t] = img;
  }

  out.psi.resize(out.bs.slices.size());
  for (std::size_t w = 0; w < out.bs.slices.size(); ++w) {
    Slice img(target_cat.arrows());
    out.bs.slices[w].for_each([&](std::size_t arr) {
      img |= singleton_psi[u.germs.canon[arr].first];
    });
    if (!is_slice(target_cat, img)) {
      fail("InternalError", "psi image is not a slice");
    }
    out.psi[w] = target.index_of(img);
  }

  // alpha = psi o iota.
  for (Elem t = 0; t < n; ++t) {
    if (out.psi[out.iota[t]] != alpha[t]) {
      fail("InternalError", "alpha != psi o iota");
    }
  }
  // psi is a (., *)-morphism, and a GBA morphism on projections.
  const std::size_t m = out.bs.slices.size();
  for (Elem i = 0; i < m; ++i) {
    if (target.sg.star(out.psi[i]) != out.psi[out.bs.sg.star(i)]) {
      fail("InternalError", "psi does not preserve star");
    }
    for (Elem j = 0; j < m; ++j) {
      if (target.sg.mul(out.psi[i], out.psi[j]) !=
          out.psi[out.bs.sg.mul(i, j)]) {
        fail("InternalError", "psi is not multiplicative");
      }
    }
  }
  for (Elem i = 0; i < m; ++i) {
    if (out.bs.sg.star(i) != i) {
      continue;
    }
    for (Elem j = 0; j < m; ++j) {
      if (out.bs.sg.star(j) != j) {
        continue;
      }
      // Projections of a slice semigroup are unit sets: joins and relative
      // complements are unions and differences of slices.
      const Slice join = out.bs.slices[i] | out.bs.slices[j];
      const Slice diff = out.bs.slices[i] - out.bs.slices[j];
      const Slice pj = target.slices[out.psi[i]];
      const Slice pk = target.slices[out.psi[j]];
      if (out.psi[out.bs.index_of(join)] != target.index_of(pj | pk) ||
          out.psi[out.bs.index_of(diff)] != target.index_of(pj - pk)) {
        fail("InternalError", "psi is not a GBA morphism on projections");
      }
    }
  }
  return out;
}

}  // namespace germwork
