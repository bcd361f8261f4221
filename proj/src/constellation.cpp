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

#include "germwork/constellation.hpp"

#include <algorithm>

namespace germwork {

std::vector<Elem> Constellation::proj() const {
  std::vector<Elem> out;
  for (Elem s = 0; s < size; ++s) {
    if (star[s] == s) {
      out.push_back(s);
    }
  }
  return out;
}

namespace {

// Largest t <= s (in q.order) such that e . t is defined; knone if none.
Elem corestriction_by_search(const Constellation& q, Elem e, Elem s) {
  std::vector<Elem> cand;
  for (Elem t = 0; t < q.size; ++t) {
    if (q.order.has(t, s) && q.defined(e, t)) {
      cand.push_back(t);
    }
  }
  for (Elem t : cand) {
    bool max = true;
    for (Elem v : cand) {
      if (!q.order.has(v, t)) {
        max = false;
        break;
      }
    }
    if (max) {
      return t;
    }
  }
  return knone;
}

}  // namespace

Constellation derive_constellation(std::size_t size, std::vector<Elem> product,
                                   std::vector<Elem> star) {
  if (size == 0 || product.size() != size * size || star.size() != size) {
    fail("SizeMismatch", "constellation tables have inconsistent sizes");
  }
  Constellation q;
  q.size = size;
  q.product = std::move(product);
  q.star = std::move(star);
  q.order = Relation(size);
  for (Elem s = 0; s < size; ++s) {
    for (Elem t = 0; t < size; ++t) {
      if (q.pp(t, q.star[s]) == s) {
        q.order.set(s, t);
      }
    }
  }
  const std::vector<Elem> proj = q.proj();
  Bitset is_proj(size);
  for (Elem e : proj) {
    is_proj.set(e);
  }
  q.restr.assign(size * size, knone);
  q.corestr.assign(size * size, knone);
  for (Elem s = 0; s < size; ++s) {
    for (Elem e : proj) {
      if (q.order.has(e, q.star[s]) && q.defined(s, e)) {
        q.restr[s * size + e] = q.pp(s, e);
      }
      q.corestr[e * size + s] = corestriction_by_search(q, e, s);
    }
  }
  return q;
}

Check check_constellation(const Constellation& q) {
  const std::size_t n = q.size;
  // (Q1) if (s t) u exists then s (t u) exists and the two agree.
  for (Elem s = 0; s < n; ++s) {
    for (Elem t = 0; t < n; ++t) {
      if (!q.defined(s, t)) {
        continue;
      }
      const Elem st = q.pp(s, t);
      for (Elem u = 0; u < n; ++u) {
        if (!q.defined(st, u)) {
          continue;
        }
        if (!q.defined(t, u) || !q.defined(s, q.pp(t, u)) ||
            q.pp(s, q.pp(t, u)) != q.pp(st, u)) {
          return Witness{"Q1", {s, t, u}, ""};
        }
      }
    }
  }
  // (Q2) if s t and t u exist then (s t) u exists.
  for (Elem s = 0; s < n; ++s) {
    for (Elem t = 0; t < n; ++t) {
      if (!q.defined(s, t)) {
        continue;
      }
      for (Elem u = 0; u < n; ++u) {
        if (q.defined(t, u) && !q.defined(q.pp(s, t), u)) {
          return Witness{"Q2", {s, t, u}, ""};
        }
      }
    }
  }
  // (Q3) each element has exactly one right identity, recorded by star.
  for (Elem s = 0; s < n; ++s) {
    Elem found = knone;
    for (Elem e = 0; e < n; ++e) {
      if (q.defined(s, e) && q.pp(s, e) == s) {
        if (found != knone) {
          return Witness{"Q3", {s}, "two right identities"};
        }
        found = e;
      }
    }
    if (found == knone) {
      return Witness{"Q3", {s}, "no right identity"};
    }
    if (q.star[s] != found) {
      return Witness{"Q3", {s}, "star table disagrees with the right identity"};
    }
  }
  // (Q4) if s* t exists then s* t = t.
  for (Elem s = 0; s < n; ++s) {
    for (Elem t = 0; t < n; ++t) {
      if (q.defined(q.star[s], t) && q.pp(q.star[s], t) != t) {
        return Witness{"Q4", {s, t}, ""};
      }
    }
  }
  return std::nullopt;
}

Check check_inductive(const Constellation& q) {
  if (auto w = check_constellation(q)) {
    return w;
  }
  const std::size_t n = q.size;
  if (!q.order.reflexive() || !q.order.antisymmetric() ||
      !q.order.transitive()) {
    return Witness{"order", {}, "not a partial order"};
  }
  const std::vector<Elem> proj = q.proj();
  Bitset is_proj(n);
  for (Elem e : proj) {
    is_proj.set(e);
  }
  // (O1) the product is monotone where defined.
  std::vector<std::pair<Elem, Elem>> le_pairs;
  for (Elem s = 0; s < n; ++s) {
    for (Elem t = 0; t < n; ++t) {
      if (q.order.has(s, t)) {
        le_pairs.emplace_back(s, t);
      }
    }
  }
  for (auto [s, t] : le_pairs) {
    for (auto [u, v] : le_pairs) {
      if (q.defined(s, u) && q.defined(t, v) &&
          !q.order.has(q.pp(s, u), q.pp(t, v))) {
        return Witness{"O1", {s, t, u, v}, ""};
      }
    }
  }
  // (O2) star is monotone.
  for (auto [s, t] : le_pairs) {
    if (!q.order.has(q.star[s], q.star[t])) {
      return Witness{"O2", {s, t}, ""};
    }
  }
  // (O3) restrictions exist uniquely for e <= s*.
  for (Elem s = 0; s < n; ++s) {
    for (Elem e : proj) {
      const Elem r = q.restriction(s, e);
      if (!q.order.has(e, q.star[s])) {
        if (r != knone) {
          return Witness{"O3", {s, e}, "restriction defined above s*"};
        }
        continue;
      }
      Elem found = knone;
      for (Elem u = 0; u < n; ++u) {
        if (q.order.has(u, s) && q.star[u] == e) {
          if (found != knone) {
            return Witness{"O3", {s, e}, "two candidate restrictions"};
          }
          found = u;
        }
      }
      if (found == knone || r != found) {
        return Witness{"O3", {s, e}, "restriction missing or wrong"};
      }
    }
  }
  // (O4) corestrictions are the maxima of {t <= s : e t defined}.
  for (Elem s = 0; s < n; ++s) {
    for (Elem e : proj) {
      const Elem expected = corestriction_by_search(q, e, s);
      if (expected == knone || q.corestriction(e, s) != expected) {
        return Witness{"O4", {e, s}, "corestriction missing or wrong"};
      }
    }
  }
  // (O5) (_e|(s t))* = (_{(_e|s)*}|t)*.
  for (Elem s = 0; s < n; ++s) {
    for (Elem t = 0; t < n; ++t) {
      if (!q.defined(s, t)) {
        continue;
      }
      for (Elem e : proj) {
        const Elem lhs = q.star[q.corestriction(e, q.pp(s, t))];
        const Elem rhs = q.star[q.corestriction(q.star[q.corestriction(e, s)], t)];
        if (lhs != rhs) {
          return Witness{"O5", {s, t, e}, ""};
        }
      }
    }
  }
  // (O6) e|_f = _f|e for projections.
  for (Elem e : proj) {
    for (Elem f : proj) {
      const Elem r = q.restriction(e, f);
      if (r != knone && r != q.corestriction(f, e)) {
        return Witness{"O6", {e, f}, ""};
      }
    }
  }
  // (I) projections form a semilattice under e ^ f = _f|e.
  for (Elem e : proj) {
    for (Elem f : proj) {
      const Elem m = q.corestriction(f, e);
      if (m == knone || !is_proj.test(m)) {
        return Witness{"I", {e, f}, "meet escapes the projections"};
      }
      if (m != q.corestriction(e, f)) {
        return Witness{"I", {e, f}, "meet is not commutative"};
      }
      if ((m == e) != q.order.has(e, f)) {
        return Witness{"I", {e, f}, "meet disagrees with the order"};
      }
      for (Elem g : proj) {
        if (q.corestriction(g, m) !=
            q.corestriction(q.corestriction(g, f), e)) {
          return Witness{"I", {e, f, g}, "meet is not associative"};
        }
      }
    }
  }
  return std::nullopt;
}

Constellation constellation_of(const Semigroup& s) {
  const std::size_t n = s.size();
  Constellation q;
  q.size = n;
  q.star = s.star_table();
  if (q.star.empty()) {
    fail("SignatureTooWeak", "constellation_of needs a star operation");
  }
  q.product.assign(n * n, knone);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (s.mul(s.star(a), b) == b) {
        q.product[a * n + b] = s.mul(a, b);
      }
    }
  }
  q.order = natural_order(s);
  const std::vector<Elem> proj = projections(s);
  q.restr.assign(n * n, knone);
  q.corestr.assign(n * n, knone);
  for (Elem a = 0; a < n; ++a) {
    for (Elem e : proj) {
      if (q.order.has(e, s.star(a))) {
        q.restr[a * n + e] = s.mul(a, e);
      }
      q.corestr[e * n + a] = s.mul(e, a);
    }
  }
  // The corestriction _e|s = es is re-derived as the maximum t <= s with
  // e t defined; a disagreement would falsify the construction.
  for (Elem a = 0; a < n; ++a) {
    for (Elem e : proj) {
      if (corestriction_by_search(q, e, a) != s.mul(e, a)) {
        fail("InternalError",
             "corestriction es is not the maximality-search value");
      }
    }
  }
  expect_pass(check_inductive(q), "inductive constellation axioms of P(S)");
  return q;
}

Semigroup semigroup_of(const Constellation& q) {
  if (auto w = check_inductive(q)) {
    fail("NotInductive", w->describe());
  }
  const std::size_t n = q.size;
  std::vector<Elem> mul(n * n);
  for (Elem s = 0; s < n; ++s) {
    for (Elem t = 0; t < n; ++t) {
      const Elem u = q.corestriction(q.star[s], t);
      if (u == knone || !q.defined(s, u)) {
        fail("InternalError", "pseudoproduct s . (_{s*}|t) is undefined");
      }
      mul[s * n + t] = q.pp(s, u);
    }
  }
  Semigroup out = Semigroup::from_tables(n, std::move(mul), q.star);
  expect_pass(check_axioms(out, Axioms::restriction),
              "restriction axioms of T(Q)");
  return out;
}

Constellation slice_constellation(const Category& c,
                                  const std::vector<Slice>& family) {
  const Semigroup s = semigroup_on_slices(c, family);
  const std::size_t n = family.size();

  Constellation q;
  q.size = n;
  q.star = s.star_table();
  q.product.assign(n * n, knone);
  // Set-level product rule: s . t defined iff dom(s) contains ran(t).
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const bool set_defined =
          slice_ran(c, family[b]).subset_of(slice_star(c, family[a]));
      const bool alg_defined = s.mul(s.star(a), b) == b;
      if (set_defined != alg_defined) {
        fail("InternalError",
             "slice constellation definedness disagrees with s* t = t");
      }
      if (set_defined) {
        q.product[a * n + b] = s.mul(a, b);
      }
    }
  }
  // The order is inclusion of slices.
  q.order = Relation(n);
  const Relation leq = natural_order(s);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const bool incl = family[a].subset_of(family[b]);
      if (incl != leq.has(a, b)) {
        fail("InternalError", "slice order is not inclusion");
      }
      if (incl) {
        q.order.set(a, b);
      }
    }
  }
  const std::vector<Elem> proj = projections(s);
  q.restr.assign(n * n, knone);
  q.corestr.assign(n * n, knone);
  for (Elem a = 0; a < n; ++a) {
    for (Elem e : proj) {
      // s|_e = se = {x in s : dom(x) in e}.
      Slice by_dom(c.arrows());
      family[a].for_each([&](std::size_t x) {
        if (family[e].test(c.dom(x))) {
          by_dom.set(x);
        }
      });
      if (!(by_dom == family[s.mul(a, e)])) {
        fail("InternalError", "se is not the dom-filtered slice");
      }
      if (q.order.has(e, s.star(a))) {
        q.restr[a * n + e] = s.mul(a, e);
      }
      // _e|s = es = {x in s : ran(x) in e}.
      Slice by_ran(c.arrows());
      family[a].for_each([&](std::size_t x) {
        if (family[e].test(c.ran(x))) {
          by_ran.set(x);
        }
      });
      if (!(by_ran == family[s.mul(e, a)])) {
        fail("InternalError", "es is not the ran-filtered slice");
      }
      q.corestr[e * n + a] = s.mul(e, a);
    }
  }
  expect_pass(check_inductive(q), "slice constellation axioms");
  return q;
}

RadiantReport check_radiant(const Constellation& q, const Constellation& r,
                            const std::vector<Elem>& rho) {
  if (rho.size() != q.size) {
    fail("SizeMismatch", "rho must be defined on all of Q");
  }
  for (Elem v : rho) {
    if (v >= r.size) {
      fail("SizeMismatch", "rho image out of range");
    }
  }
  RadiantReport rep;
  // (1) preservation of existing products.
  for (Elem s = 0; s < q.size; ++s) {
    for (Elem t = 0; t < q.size; ++t) {
      if (!q.defined(s, t)) {
        continue;
      }
      if (!r.defined(rho[s], rho[t]) ||
          r.pp(rho[s], rho[t]) != rho[q.pp(s, t)]) {
        rep.witness = Witness{"radiant-1", {s, t}, ""};
        return rep;
      }
    }
  }
  // (2) stars.
  for (Elem s = 0; s < q.size; ++s) {
    if (rho[q.star[s]] != r.star[rho[s]]) {
      rep.witness = Witness{"radiant-2", {s}, ""};
      return rep;
    }
  }
  // (3) order preservation.
  for (Elem s = 0; s < q.size; ++s) {
    for (Elem t = 0; t < q.size; ++t) {
      if (q.order.has(s, t) && !r.order.has(rho[s], rho[t])) {
        rep.witness = Witness{"radiant-3", {s, t}, ""};
        return rep;
      }
    }
  }
  // (4) corestrictions.
  for (Elem e : q.proj()) {
    for (Elem s = 0; s < q.size; ++s) {
      const Elem cs = q.corestriction(e, s);
      if (cs == knone) {
        continue;
      }
      if (r.corestriction(rho[e], rho[s]) != rho[cs]) {
        rep.witness = Witness{"radiant-4", {e, s}, ""};
        return rep;
      }
    }
  }
  rep.radiant = true;
  // (1') and (3') for strong radiants.
  rep.strong = true;
  for (Elem s = 0; s < q.size && rep.strong; ++s) {
    for (Elem t = 0; t < q.size; ++t) {
      if (r.defined(rho[s], rho[t]) && !q.defined(s, t)) {
        rep.strong = false;
        break;
      }
      if (r.order.has(rho[s], rho[t]) && !q.order.has(s, t)) {
        rep.strong = false;
        break;
      }
    }
  }
  if (rep.strong) {
    std::vector<bool> hit(r.size, false);
    bool bij = q.size == r.size;
    for (Elem v : rho) {
      if (hit[v]) {
        bij = false;
        break;
      }
      hit[v] = true;
    }
    rep.isomorphism = bij;
  }
  return rep;
}

}  // namespace germwork
