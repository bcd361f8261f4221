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

#include "germwork/catalog.hpp"

#include <algorithm>

namespace germwork {

namespace {

// Builds the tables for an explicitly ordered, composition-closed list of
// partial maps (used where the element order is fixed by convention rather
// than sorted).
Semigroup semigroup_from_maps(const std::vector<PartialMap>& maps,
                              bool with_plus,
                              std::vector<std::string> labels) {
  const std::size_t n = maps.size();
  auto index = [&](const PartialMap& f) -> Elem {
    for (std::size_t i = 0; i < n; ++i) {
      if (maps[i] == f) {
        return i;
      }
    }
    fail("InternalError", "map list is not closed");
  };
  std::vector<Elem> mul(n * n), star(n), plus;
  for (std::size_t i = 0; i < n; ++i) {
    star[i] = index(maps[i].star());
    for (std::size_t j = 0; j < n; ++j) {
      mul[i * n + j] = index(maps[i].compose(maps[j]));
    }
  }
  if (with_plus) {
    plus.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      plus[i] = index(maps[i].plus());
    }
  }
  return Semigroup::from_tables(n, std::move(mul), std::move(star),
                                std::move(plus), std::move(labels));
}

Semigroup paper_four() {
  const std::size_t ground = 2;  // points a = 0, b = 1
  const PartialMap zero = PartialMap::empty(ground);
  const PartialMap f(ground, {0, PartialMap::kUndef});
  const PartialMap g(ground, {1, PartialMap::kUndef});
  const PartialMap one = PartialMap::identity(ground);
  return semigroup_from_maps({zero, f, g, one}, /*with_plus=*/false,
                             {"0", "f", "g", "1"});
}

Semigroup cyclic_group(std::size_t m) {
  if (m == 0 || m > 64) {
    fail("TooLarge", "cyclic group order out of range");
  }
  std::vector<Elem> mul(m * m), star(m, 0), plus(m, 0);
  std::vector<std::string> labels(m);
  for (std::size_t a = 0; a < m; ++a) {
    labels[a] = "g" + std::to_string(a);
    for (std::size_t b = 0; b < m; ++b) {
      mul[a * m + b] = (a + b) % m;
    }
  }
  return Semigroup::from_tables(m, std::move(mul), std::move(star),
                                std::move(plus), std::move(labels));
}

Semigroup chain_times_cyclic(std::size_t k, std::size_t m) {
  if (k == 0 || m == 0 || k * m > 256) {
    fail("TooLarge", "chain x cyclic parameters out of range");
  }
  const std::size_t n = k * m;
  auto id = [&](std::size_t e, std::size_t g) { return e * m + g; };
  std::vector<Elem> mul(n * n), star(n), plus(n);
  std::vector<std::string> labels(n);
  for (std::size_t e = 0; e < k; ++e) {
    for (std::size_t g = 0; g < m; ++g) {
      star[id(e, g)] = id(e, 0);
      plus[id(e, g)] = id(e, 0);
      labels[id(e, g)] = "(e" + std::to_string(e) + ",g" + std::to_string(g) +
                         ")";
      for (std::size_t f2 = 0; f2 < k; ++f2) {
        for (std::size_t h = 0; h < m; ++h) {
          mul[id(e, g) * n + id(f2, h)] = id(std::min(e, f2), (g + h) % m);
        }
      }
    }
  }
  return Semigroup::from_tables(n, std::move(mul), std::move(star),
                                std::move(plus), std::move(labels));
}

Semilattice chain(std::size_t k) {
  if (k == 0 || k > 6) {
    fail("TooLarge", "chain length out of range");
  }
  std::vector<Elem> meet(k * k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      meet[a * k + b] = std::min(a, b);
    }
  }
  return Semilattice::from_meet_table(k, std::move(meet));
}

Semilattice antichain_bottom(std::size_t atoms) {
  if (atoms == 0 || atoms > 4) {
    fail("TooLarge", "antichain width out of range");
  }
  const std::size_t n = atoms + 1;  // element 0 is the bottom
  std::vector<Elem> meet(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    meet[a * n + a] = a;
  }
  return Semilattice::from_meet_table(n, std::move(meet));
}

Semilattice free_meet_two() {
  // a = 0, b = 1, ab = 2.
  std::vector<Elem> meet{0, 2, 2, 2, 1, 2, 2, 2, 2};
  return Semilattice::from_meet_table(3, std::move(meet));
}

// A proper restriction monoid whose sigma-class of the flip has no maximum:
// Z/2 acting on the spectrum of the bottom-plus-two-atoms semilattice by
// swapping the atoms.
Semigroup non_f_six() {
  const Semilattice e = antichain_bottom(2);  // 0 < a=1, 0 < b=2
  PartialAction pa;
  pa.monoid = cyclic_group(2);
  pa.space = e.size();
  pa.alpha.push_back(PartialMap::identity(pa.space));
  pa.alpha.push_back(PartialMap(pa.space, {0, 2, 1}));
  std::vector<Bitset> ideals;
  for (Elem g = 0; g < e.size(); ++g) {
    ideals.push_back(basic_open(e, g));
  }
  PartialActionProduct p = partial_action_product(pa, ideals);
  return p.sg;
}

}  // namespace

Semigroup p_semigroup(const Semigroup& group,
                      const std::vector<std::vector<bool>>& poset_leq,
                      const std::vector<std::vector<Elem>>& group_action,
                      const std::vector<Elem>& y_set) {
  const std::size_t xn = poset_leq.size();
  const std::size_t gn = group.size();
  if (group_action.size() != gn) {
    fail("SizeMismatch", "one permutation per group element required");
  }
  auto leq = [&](Elem a, Elem b) { return poset_leq[a][b]; };
  auto act = [&](Elem g, Elem x) { return group_action[g][x]; };
  Bitset y(xn);
  for (Elem v : y_set) {
    y.set(v);
  }
  // Y is an order ideal and a meet-semilattice inside the poset.
  for (Elem a : y_set) {
    for (Elem b = 0; b < xn; ++b) {
      if (leq(b, a) && !y.test(b)) {
        fail("SizeMismatch", "Y is not an order ideal");
      }
    }
  }
  auto meet = [&](Elem a, Elem b) -> Elem {
    Elem best = knone;
    for (Elem c = 0; c < xn; ++c) {
      if (leq(c, a) && leq(c, b) && (best == knone || leq(best, c))) {
        best = c;
      }
    }
    if (best == knone || !leq(best, a) || !leq(best, b)) {
      fail("SizeMismatch", "poset lacks a needed meet");
    }
    for (Elem c = 0; c < xn; ++c) {
      if (leq(c, a) && leq(c, b) && !leq(c, best)) {
        fail("SizeMismatch", "meet candidate is not the greatest lower bound");
      }
    }
    return best;
  };
  // G Y = X and g Y n Y nonempty.
  {
    Bitset covered(xn);
    for (Elem g = 0; g < gn; ++g) {
      bool meets_y = false;
      for (Elem v : y_set) {
        covered.set(act(g, v));
        meets_y = meets_y || y.test(act(g, v));
      }
      if (!meets_y) {
        fail("SizeMismatch", "g Y does not meet Y");
      }
    }
    if (!(covered == Bitset::full(xn))) {
      fail("SizeMismatch", "G Y is not all of X");
    }
  }
  // Elements: pairs (y, g) with y in Y n gY.
  std::vector<std::pair<Elem, Elem>> elems;
  for (Elem yv = 0; yv < xn; ++yv) {
    for (Elem g = 0; g < gn; ++g) {
      if (!y.test(yv)) {
        continue;
      }
      bool in_gy = false;
      for (Elem w : y_set) {
        if (act(g, w) == yv) {
          in_gy = true;
          break;
        }
      }
      if (in_gy) {
        elems.emplace_back(yv, g);
      }
    }
  }
  auto index = [&](Elem yv, Elem g) -> Elem {
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (elems[i] == std::make_pair(yv, g)) {
        return i;
      }
    }
    fail("SizeMismatch", "P-triple is not closed under the product");
  };
  const std::size_t n = elems.size();
  std::vector<Elem> mul(n * n), star(n), plus(n);
  std::vector<std::string> labels(n);
  const Elem gone = *identity_of(group);
  std::vector<Elem> ginv(gn);
  for (Elem g = 0; g < gn; ++g) {
    for (Elem h = 0; h < gn; ++h) {
      if (group.mul(g, h) == gone) {
        ginv[g] = h;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto [yv, g] = elems[i];
    labels[i] = "(y" + std::to_string(yv) + "," + group.label(g) + ")";
    star[i] = index(act(ginv[g], yv), gone);
    plus[i] = index(yv, gone);
    for (std::size_t j = 0; j < n; ++j) {
      const auto [zv, h] = elems[j];
      mul[i * n + j] = index(meet(yv, act(g, zv)), group.mul(g, h));
    }
  }
  Semigroup s = Semigroup::from_tables(n, std::move(mul), std::move(star),
                                       std::move(plus), std::move(labels));
  expect_pass(check_axioms(s, Axioms::inverse), "P-triple inverse axioms");
  if (!is_proper(s)) {
    fail("InternalError", "P-triple semigroup is not E-unitary");
  }
  return s;
}

namespace {

Semigroup p_semigroup_three() {
  // Poset: bottom = 0 with two incomparable atoms p = 1, q = 2; Z/2 swaps
  // the atoms; Y = {bottom, p}.
  std::vector<std::vector<bool>> leq = {
      {true, true, true}, {false, true, false}, {false, false, true}};
  std::vector<std::vector<Elem>> action = {{0, 1, 2}, {0, 2, 1}};
  return p_semigroup(cyclic_group(2), leq, action, {0, 1});
}

}  // namespace

Document catalog(const std::string& name) {
  Document d;
  d.name = name;
  auto num_after = [&](const std::string& prefix) -> std::size_t {
    const std::string tail = name.substr(prefix.size());
    if (tail.empty() ||
        tail.find_first_not_of("0123456789") != std::string::npos) {
      fail("UnknownName", "bad numeric suffix in catalog name: " + name);
    }
    return std::stoul(tail);
  };
  if (name == "trivial") {
    d.kind = DocKind::semigroup;
    d.semigroup = Semigroup::from_tables(1, {0}, {0}, {0}, {"1"});
    return d;
  }
  if (name == "paper-4") {
    d.kind = DocKind::semigroup;
    d.semigroup = paper_four();
    return d;
  }
  if (name.rfind("pt:", 0) == 0) {
    d.kind = DocKind::semigroup;
    d.semigroup = full_pt(num_after("pt:")).sg;
    return d;
  }
  if (name.rfind("i:", 0) == 0) {
    d.kind = DocKind::semigroup;
    d.semigroup = symmetric_inverse(num_after("i:")).sg;
    return d;
  }
  if (name == "r:2") {
    d.kind = DocKind::semigroup;
    d.semigroup = relation_monoid(2);
    return d;
  }
  if (name.rfind("exg:", 0) == 0) {
    const std::string tail = name.substr(4);
    const auto x = tail.find('x');
    if (x == std::string::npos) {
      fail("UnknownName", "exg needs the form exg:KxM");
    }
    d.kind = DocKind::semigroup;
    d.semigroup = chain_times_cyclic(std::stoul(tail.substr(0, x)),
                                     std::stoul(tail.substr(x + 1)));
    return d;
  }
  if (name.rfind("group:", 0) == 0) {
    d.kind = DocKind::semigroup;
    d.semigroup = cyclic_group(num_after("group:"));
    return d;
  }
  if (name == "psemigroup:3") {
    d.kind = DocKind::semigroup;
    d.semigroup = p_semigroup_three();
    return d;
  }
  if (name == "nonf:6") {
    d.kind = DocKind::semigroup;
    d.semigroup = non_f_six();
    return d;
  }
  if (name.rfind("chain:", 0) == 0) {
    d.kind = DocKind::semilattice;
    d.semilattice = chain(num_after("chain:"));
    return d;
  }
  if (name.rfind("antichain-bottom:", 0) == 0) {
    d.kind = DocKind::semilattice;
    d.semilattice = antichain_bottom(num_after("antichain-bottom:"));
    return d;
  }
  if (name == "free-meet:2") {
    d.kind = DocKind::semilattice;
    d.semilattice = free_meet_two();
    return d;
  }
  if (name.rfind("pair-groupoid:", 0) == 0) {
    const std::size_t n = num_after("pair-groupoid:");
    if (n == 0 || n > 3) {
      fail("TooLarge", "pair groupoid size out of range");
    }
    d.kind = DocKind::category;
    d.category = pair_groupoid(n);
    return d;
  }
  fail("UnknownName", "no catalog entry named " + name);
}

std::vector<std::string> acceptance_catalog() {
  return {
      "trivial",        "pt:2",
      "pt:3",           "i:2",
      "i:3",            "r:2",
      "paper-4",        "exg:2x2",
      "exg:3x2",        "group:2",
      "group:3",        "psemigroup:3",
      "nonf:6",         "chain:2",
      "chain:3",        "chain:4",
      "chain:6",        "antichain-bottom:2",
      "antichain-bottom:3", "free-meet:2",
      "pair-groupoid:2", "pair-groupoid:3",
  };
}

}  // namespace germwork
