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

#include "germwork/semilattice.hpp"

#include <algorithm>
#include <set>

namespace germwork {

Semilattice Semilattice::from_meet_table(std::size_t size,
                                         std::vector<Elem> meet) {
  if (size == 0 || meet.size() != size * size) {
    fail("SizeMismatch", "meet table is not size x size");
  }
  for (Elem v : meet) {
    if (v >= size) {
      fail("SizeMismatch", "meet table entry out of range");
    }
  }
  auto m = [&](Elem a, Elem b) { return meet[a * size + b]; };
  for (Elem a = 0; a < size; ++a) {
    if (m(a, a) != a) {
      fail("NotSemilattice", "meet is not idempotent at " + std::to_string(a));
    }
    for (Elem b = 0; b < size; ++b) {
      if (m(a, b) != m(b, a)) {
        fail("NotSemilattice", "meet is not commutative");
      }
      for (Elem c = 0; c < size; ++c) {
        if (m(m(a, b), c) != m(a, m(b, c))) {
          fail("NotSemilattice", "meet is not associative");
        }
      }
    }
  }
  Semilattice e;
  e.size_ = size;
  e.meet_ = std::move(meet);
  e.order_ = Relation(size);
  for (Elem a = 0; a < size; ++a) {
    for (Elem b = 0; b < size; ++b) {
      if (e.meet(a, b) == a) {
        e.order_.set(a, b);
      }
    }
  }
  return e;
}

Semilattice Semilattice::projections_of(const Semigroup& s,
                                        std::vector<Elem>* elems) {
  const std::vector<Elem> proj = projections(s);
  std::vector<Elem> index(s.size(), knone);
  for (std::size_t i = 0; i < proj.size(); ++i) {
    index[proj[i]] = i;
  }
  const std::size_t n = proj.size();
  std::vector<Elem> meet(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      meet[i * n + j] = index[s.mul(proj[i], proj[j])];
    }
  }
  if (elems) {
    *elems = proj;
  }
  return from_meet_table(n, std::move(meet));
}

Semigroup Semilattice::as_semigroup() const {
  std::vector<Elem> star(size_);
  for (Elem i = 0; i < size_; ++i) {
    star[i] = i;
  }
  return Semigroup::from_tables(size_, meet_, std::move(star));
}

std::vector<Bitset> filters(const Semilattice& e, bool force) {
  const std::size_t n = e.size();
  std::vector<Bitset> principal;
  for (Elem g = 0; g < n; ++g) {
    Bitset up(n);
    for (Elem f = 0; f < n; ++f) {
      if (e.leq(g, f)) {
        up.set(f);
      }
    }
    principal.push_back(up);
  }
  // Exhaustive cross-check: every filter is principal.
  if (n > 20) {
    if (!force) {
      fail("TooLarge", "filter enumeration refused for |E| > 20 without force");
    }
  } else {
    std::set<Bitset> expected(principal.begin(), principal.end());
    const std::size_t total = std::size_t{1} << n;
    for (std::size_t mask = 1; mask < total; ++mask) {
      Bitset cand(n);
      for (Elem i = 0; i < n; ++i) {
        if ((mask >> i) & 1) {
          cand.set(i);
        }
      }
      bool filter = true;
      for (Elem a = 0; a < n && filter; ++a) {
        if (!cand.test(a)) {
          continue;
        }
        for (Elem b = 0; b < n && filter; ++b) {
          if (cand.test(b) && !cand.test(e.meet(a, b))) {
            filter = false;  // not meet-closed (downward directed)
          }
          if (!cand.test(b) && e.leq(a, b)) {
            filter = false;  // not upward closed
          }
        }
      }
      if (filter && !expected.count(cand)) {
        fail("InternalError", "found a non-principal filter");
      }
    }
  }
  return principal;
}

PointSet basic_open(const Semilattice& e, Elem gen) {
  PointSet d(e.size());
  for (Elem f = 0; f < e.size(); ++f) {
    if (e.leq(f, gen)) {
      d.set(f);
    }
  }
  return d;
}

PointSet basic_open(const Semilattice& e, Elem gen,
                    std::span<const Elem> minus) {
  PointSet d = basic_open(e, gen);
  for (Elem f : minus) {
    if (!e.leq(f, gen)) {
      fail("NotBelow", "subtracted element " + std::to_string(f) +
                           " is not below " + std::to_string(gen));
    }
    d = d - basic_open(e, f);
  }
  return d;
}

Gba Gba::generate(std::size_t ground, std::vector<Bitset> generators,
                  bool force) {
  for (const auto& g : generators) {
    if (g.universe() != ground) {
      fail("SizeMismatch", "generator over wrong ground set");
    }
  }
  std::set<Bitset> closed;
  closed.insert(Bitset(ground));
  std::vector<Bitset> work;
  auto add = [&](const Bitset& b) {
    if (closed.insert(b).second) {
      work.push_back(b);
    }
  };
  for (const auto& g : generators) {
    add(g);
  }
  const std::size_t guard =
      force ? std::size_t{1} << 26 : std::size_t{1} << 20;
  while (!work.empty()) {
    Bitset b = work.back();
    work.pop_back();
    std::vector<Bitset> snapshot(closed.begin(), closed.end());
    for (const auto& c : snapshot) {
      add(b | c);
      add(b & c);
      add(b - c);
      add(c - b);
      if (closed.size() > guard) {
        fail("TooLarge", "generated Boolean algebra exceeds the guard");
      }
    }
  }
  Gba g;
  g.ground_ = ground;
  g.elems_.assign(closed.begin(), closed.end());
  return g;
}

bool Gba::contains(const Bitset& b) const {
  return std::binary_search(elems_.begin(), elems_.end(), b);
}

Bitset Gba::top() const {
  Bitset t(ground_);
  for (const auto& b : elems_) {
    t |= b;
  }
  return t;
}

Booleanization booleanization(const Semilattice& e) {
  const std::size_t n = e.size();
  std::vector<PointSet> iota;
  for (Elem g = 0; g < n; ++g) {
    iota.push_back(basic_open(e, g));
  }
  // iota is injective and turns meets into intersections.
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (a != b && iota[a] == iota[b]) {
        fail("InternalError", "iota is not injective");
      }
      if ((iota[a] & iota[b]) != iota[e.meet(a, b)]) {
        fail("InternalError", "iota does not preserve meets");
      }
    }
  }
  Gba g = Gba::generate(n, iota);
  // Finite spectra are discrete: the closure is the full powerset.
  if (n <= 20 && g.elements().size() != (std::size_t{1} << n)) {
    fail("InternalError", "generated algebra is not the full powerset");
  }
  return Booleanization{std::move(g), std::move(iota)};
}

namespace {

// Decomposes a point set as a disjoint union of singletons {g^} written in
// basic form D_g \ (union of D_f, f < g), and evaluates the prescribed image
// under alpha.
Bitset evaluate_by_singletons(const Semilattice& e,
                              const std::vector<Bitset>& alpha,
                              const Bitset& u) {
  Bitset out(alpha.empty() ? 0 : alpha[0].universe());
  u.for_each([&](std::size_t g) {
    Bitset img = alpha[g];
    for (Elem f = 0; f < e.size(); ++f) {
      if (f != g && e.leq(f, g)) {
        img = img - alpha[f];
      }
    }
    out |= img;
  });
  return out;
}

// Independent route: greedy cover of u by maximal basic sets D_g contained in
// u, with the excess of each D_g carved out by subtracted D_f terms.
Bitset evaluate_by_cover(const Semilattice& e, const std::vector<Bitset>& iota,
                         const std::vector<Bitset>& alpha, const Bitset& u) {
  Bitset out(alpha.empty() ? 0 : alpha[0].universe());
  for (Elem g = 0; g < e.size(); ++g) {
    if (!u.test(g)) {
      continue;
    }
    // D_g need not lie inside u; subtract D_f for every f <= g outside u.
    Bitset img = alpha[g];
    for (Elem f = 0; f < e.size(); ++f) {
      if (f != g && e.leq(f, g) && !u.test(f)) {
        img = img - alpha[f];
      }
    }
    (void)iota;
    out |= img;
  }
  return out;
}

}  // namespace

std::vector<Bitset> extend_to_gba_morphism(const Semilattice& e, const Gba& b,
                                           const std::vector<Bitset>& alpha) {
  const std::size_t n = e.size();
  if (alpha.size() != n) {
    fail("SizeMismatch", "alpha must be defined on all of E");
  }
  for (const auto& a : alpha) {
    if (a.universe() != b.ground() || !b.contains(a)) {
      fail("SizeMismatch", "alpha image outside the target algebra");
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if ((alpha[x] & alpha[y]) != alpha[e.meet(x, y)]) {
        fail("NotMeetMorphism", "alpha does not preserve meets at (" +
                                    std::to_string(x) + ", " +
                                    std::to_string(y) + ")");
      }
    }
  }
  // Non-degenerate: the ideal generated by alpha(E) is all of B, which in
  // the finite case means the images cover the top of B.
  Bitset covered(b.ground());
  for (const auto& a : alpha) {
    covered |= a;
  }
  if (!(b.top().subset_of(covered))) {
    fail("Degenerate", "alpha(E) does not generate the target as an ideal");
  }

  const Booleanization bl = booleanization(e);
  std::vector<Bitset> psi;
  psi.reserve(bl.algebra.elements().size());
  for (const auto& u : bl.algebra.elements()) {
    const Bitset v1 = evaluate_by_singletons(e, alpha, u);
    const Bitset v2 = evaluate_by_cover(e, bl.iota, alpha, u);
    if (v1 != v2) {
      fail("InternalError",
           "psi disagrees across two decompositions of an open set");
    }
    if (!b.contains(v1)) {
      fail("InternalError", "psi image escapes the target algebra");
    }
    psi.push_back(v1);
  }
  // psi is a morphism of generalized Boolean algebras and alpha = psi iota.
  const auto& elems = bl.algebra.elements();
  auto index_of = [&](const Bitset& x) {
    return static_cast<std::size_t>(
        std::lower_bound(elems.begin(), elems.end(), x) - elems.begin());
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (psi[index_of(elems[i] & elems[j])] != (psi[i] & psi[j]) ||
          psi[index_of(elems[i] | elems[j])] != (psi[i] | psi[j]) ||
          psi[index_of(elems[i] - elems[j])] != (psi[i] - psi[j])) {
        fail("InternalError", "psi is not a GBA morphism");
      }
    }
  }
  for (Elem g = 0; g < n; ++g) {
    if (psi[index_of(bl.iota[g])] != alpha[g]) {
      fail("InternalError", "alpha != psi o iota");
    }
  }
  return psi;
}

bool is_order_ideal(const Semilattice& e, const Bitset& members) {
  for (Elem a = 0; a < e.size(); ++a) {
    if (!members.test(a)) {
      continue;
    }
    for (Elem f = 0; f < e.size(); ++f) {
      if (e.leq(f, a) && !members.test(f)) {
        return false;
      }
    }
  }
  return true;
}

Bitset order_ideal_psi(const Semilattice& e, const Bitset& open_set) {
  Bitset ideal(e.size());
  for (Elem f = 0; f < e.size(); ++f) {
    if (basic_open(e, f).subset_of(open_set)) {
      ideal.set(f);
    }
  }
  if (!is_order_ideal(e, ideal)) {
    fail("InternalError", "Psi image is not an order ideal");
  }
  return ideal;
}

PointSet order_ideal_psi_inv(const Semilattice& e, const Bitset& ideal) {
  if (!is_order_ideal(e, ideal)) {
    fail("SizeMismatch", "Psi^{-1} needs an order ideal");
  }
  PointSet u(e.size());
  ideal.for_each([&](std::size_t g) { u |= basic_open(e, g); });
  return u;
}

}  // namespace germwork
