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

#include "germwork/semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace germwork {

namespace {

void check_table_entries(std::size_t size, const std::vector<Elem>& t,
                         const char* what) {
  for (Elem v : t) {
    if (v >= size) {
      fail("SizeMismatch", std::string(what) + " table entry out of range");
    }
  }
}

}  // namespace

Semigroup Semigroup::from_tables(std::size_t size, std::vector<Elem> mul,
                                 std::vector<Elem> star,
                                 std::vector<Elem> plus,
                                 std::vector<std::string> labels) {
  if (size == 0) {
    fail("SizeMismatch", "a semigroup needs a non-empty carrier");
  }
  if (mul.size() != size * size) {
    fail("SizeMismatch", "multiplication table is not size x size");
  }
  check_table_entries(size, mul, "multiplication");
  if (!star.empty()) {
    if (star.size() != size) {
      fail("SizeMismatch", "star table has wrong length");
    }
    check_table_entries(size, star, "star");
  }
  if (!plus.empty()) {
    if (star.empty()) {
      fail("SizeMismatch", "plus table given without a star table");
    }
    if (plus.size() != size) {
      fail("SizeMismatch", "plus table has wrong length");
    }
    check_table_entries(size, plus, "plus");
  }
  if (!labels.empty() && labels.size() != size) {
    fail("SizeMismatch", "label list has wrong length");
  }
  if (size > kExhaustiveGuard) {
    fail("TooLarge", "carrier of size " + std::to_string(size) +
                         " exceeds the exhaustive-check guard");
  }
  for (Elem a = 0; a < size; ++a) {
    for (Elem b = 0; b < size; ++b) {
      const Elem ab = mul[a * size + b];
      for (Elem c = 0; c < size; ++c) {
        if (mul[ab * size + c] != mul[a * size + mul[b * size + c]]) {
          fail("NonAssociative",
               "(a b) c != a (b c) for (a, b, c) = (" + std::to_string(a) +
                   ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
        }
      }
    }
  }
  Semigroup s;
  s.size_ = size;
  s.mul_ = std::move(mul);
  s.star_ = std::move(star);
  s.plus_ = std::move(plus);
  s.sig_ = s.star_.empty() ? Signature::plain
           : s.plus_.empty() ? Signature::star
                             : Signature::star_plus;
  s.labels_ = std::move(labels);
  return s;
}

Semigroup Semigroup::with_plus(std::vector<Elem> plus) const {
  if (!has_star()) {
    fail("SignatureTooWeak", "cannot attach a plus table without star");
  }
  if (plus.size() != size_) {
    fail("SizeMismatch", "plus table has wrong length");
  }
  check_table_entries(size_, plus, "plus");
  Semigroup s = *this;
  s.plus_ = std::move(plus);
  s.sig_ = Signature::star_plus;
  return s;
}

Semigroup Semigroup::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != size_) {
    fail("SizeMismatch", "label list has wrong length");
  }
  Semigroup s = *this;
  s.labels_ = std::move(labels);
  return s;
}

bool Relation::reflexive() const {
  for (Elem a = 0; a < n_; ++a) {
    if (!has(a, a)) {
      return false;
    }
  }
  return true;
}

bool Relation::symmetric() const {
  for (Elem a = 0; a < n_; ++a) {
    for (Elem b = a + 1; b < n_; ++b) {
      if (has(a, b) != has(b, a)) {
        return false;
      }
    }
  }
  return true;
}

bool Relation::antisymmetric() const {
  for (Elem a = 0; a < n_; ++a) {
    for (Elem b = 0; b < n_; ++b) {
      if (a != b && has(a, b) && has(b, a)) {
        return false;
      }
    }
  }
  return true;
}

bool Relation::transitive() const {
  for (Elem a = 0; a < n_; ++a) {
    for (Elem b = 0; b < n_; ++b) {
      if (!has(a, b)) {
        continue;
      }
      for (Elem c = 0; c < n_; ++c) {
        if (has(b, c) && !has(a, c)) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::vector<Elem>> Relation::classes() const {
  std::vector<std::vector<Elem>> out;
  std::vector<bool> seen(n_, false);
  for (Elem a = 0; a < n_; ++a) {
    if (seen[a]) {
      continue;
    }
    std::vector<Elem> cls;
    for (Elem b = 0; b < n_; ++b) {
      if (has(a, b)) {
        cls.push_back(b);
        seen[b] = true;
      }
    }
    out.push_back(std::move(cls));
  }
  return out;
}

std::string to_string(Axioms a) {
  switch (a) {
    case Axioms::ehresmann:
      return "ehresmann";
    case Axioms::restriction:
      return "restriction";
    case Axioms::coehresmann:
      return "coehresmann";
    case Axioms::corestriction:
      return "corestriction";
    case Axioms::bi_ehresmann:
      return "biEhresmann";
    case Axioms::birestriction:
      return "birestriction";
    case Axioms::range:
      return "range";
    case Axioms::inverse:
      return "inverse";
  }
  return "?";
}

Axioms axioms_from_string(const std::string& s) {
  if (s == "ehresmann") return Axioms::ehresmann;
  if (s == "restriction") return Axioms::restriction;
  if (s == "coehresmann") return Axioms::coehresmann;
  if (s == "corestriction") return Axioms::corestriction;
  if (s == "biEhresmann" || s == "biehresmann") return Axioms::bi_ehresmann;
  if (s == "birestriction") return Axioms::birestriction;
  if (s == "range") return Axioms::range;
  if (s == "inverse") return Axioms::inverse;
  fail("SchemaError", "unknown axiom family: " + s);
}

namespace {

enum class Law {
  e1,    // x x* = x
  e2,    // x* y* = y* x*
  e2p,   // (x* y*)* = x* y*
  e3,    // (x y)* = (x* y)*
  rr,    // x* y = y (x y)*
  c1,    // x+ x = x
  c2,    // x+ y+ = y+ x+
  c2p,   // (x+ y+)+ = x+ y+
  c3,    // (x y)+ = (x y+)+
  cr,    // x y+ = (x y)+ x
  l1,    // (x+)* = x+
  l2,    // (x*)+ = x*
  inv,   // unique inverse
};

const char* law_name(Law l) {
  switch (l) {
    case Law::e1: return "xx*=x";
    case Law::e2: return "x*y*=y*x*";
    case Law::e2p: return "(x*y*)*=x*y*";
    case Law::e3: return "(xy)*=(x*y)*";
    case Law::rr: return "x*y=y(xy)*";
    case Law::c1: return "x+x=x";
    case Law::c2: return "x+y+=y+x+";
    case Law::c2p: return "(x+y+)+=x+y+";
    case Law::c3: return "(xy)+=(xy+)+";
    case Law::cr: return "xy+=(xy)+x";
    case Law::l1: return "(x+)*=x+";
    case Law::l2: return "(x*)+=x*";
    case Law::inv: return "unique-inverse";
  }
  return "?";
}

std::vector<Law> laws_for(Axioms which) {
  using L = Law;
  switch (which) {
    case Axioms::ehresmann:
      return {L::e1, L::e2, L::e2p, L::e3};
    case Axioms::restriction:
      return {L::e1, L::e2, L::e2p, L::e3, L::rr};
    case Axioms::coehresmann:
      return {L::c1, L::c2, L::c2p, L::c3};
    case Axioms::corestriction:
      return {L::c1, L::c2, L::c2p, L::c3, L::cr};
    case Axioms::bi_ehresmann:
      return {L::e1, L::e2, L::e2p, L::e3, L::c1, L::c2,
              L::c2p, L::c3, L::l1, L::l2};
    case Axioms::birestriction:
      return {L::e1, L::e2, L::e2p, L::e3, L::rr, L::c1,
              L::c2, L::c2p, L::c3, L::cr, L::l1, L::l2};
    case Axioms::range:
      return {L::e1, L::e2, L::e2p, L::e3, L::rr, L::c1,
              L::c2, L::c2p, L::c3, L::l1, L::l2};
    case Axioms::inverse:
      return {L::inv};
  }
  return {};
}

bool needs_star(Law l) {
  switch (l) {
    case Law::e1:
    case Law::e2:
    case Law::e2p:
    case Law::e3:
    case Law::rr:
    case Law::l1:
    case Law::l2:
      return true;
    default:
      return false;
  }
}

bool needs_plus(Law l) {
  switch (l) {
    case Law::c1:
    case Law::c2:
    case Law::c2p:
    case Law::c3:
    case Law::cr:
    case Law::l1:
    case Law::l2:
      return true;
    default:
      return false;
  }
}

Check check_law(const Semigroup& s, Law law) {
  const std::size_t n = s.size();
  auto w = [&](std::vector<std::size_t> where) {
    return Witness{law_name(law), std::move(where), ""};
  };
  switch (law) {
    case Law::e1:
      for (Elem x = 0; x < n; ++x) {
        if (s.mul(x, s.star(x)) != x) return w({x});
      }
      return std::nullopt;
    case Law::e2:
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
          if (s.mul(s.star(x), s.star(y)) != s.mul(s.star(y), s.star(x)))
            return w({x, y});
        }
      return std::nullopt;
    case Law::e2p:
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
          const Elem p = s.mul(s.star(x), s.star(y));
          if (s.star(p) != p) return w({x, y});
        }
      return std::nullopt;
    case Law::e3:
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
          if (s.star(s.mul(x, y)) != s.star(s.mul(s.star(x), y)))
            return w({x, y});
        }
      return std::nullopt;
    case Law::rr:
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
          if (s.mul(s.star(x), y) != s.mul(y, s.star(s.mul(x, y))))
            return w({x, y});
        }
      return std::nullopt;
    case Law::c1:
      for (Elem x = 0; x < n; ++x) {
        if (s.mul(s.plus(x), x) != x) return w({x});
      }
      return std::nullopt;
    case Law::c2:
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
          if (s.mul(s.plus(x), s.plus(y)) != s.mul(s.plus(y), s.plus(x)))
            return w({x, y});
        }
      return std::nullopt;
    case Law::c2p:
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
          const Elem p = s.mul(s.plus(x), s.plus(y));
          if (s.plus(p) != p) return w({x, y});
        }
      return std::nullopt;
    case Law::c3:
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
          if (s.plus(s.mul(x, y)) != s.plus(s.mul(x, s.plus(y))))
            return w({x, y});
        }
      return std::nullopt;
    case Law::cr:
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
          if (s.mul(x, s.plus(y)) != s.mul(s.plus(s.mul(x, y)), x))
            return w({x, y});
        }
      return std::nullopt;
    case Law::l1:
      for (Elem x = 0; x < n; ++x) {
        if (s.star(s.plus(x)) != s.plus(x)) return w({x});
      }
      return std::nullopt;
    case Law::l2:
      for (Elem x = 0; x < n; ++x) {
        if (s.plus(s.star(x)) != s.star(x)) return w({x});
      }
      return std::nullopt;
    case Law::inv:
      for (Elem a = 0; a < n; ++a) {
        std::size_t count = 0;
        for (Elem b = 0; b < n; ++b) {
          if (s.mul(s.mul(a, b), a) == a && s.mul(s.mul(b, a), b) == b) {
            ++count;
          }
        }
        if (count != 1) {
          Witness v = w({a});
          v.note = count == 0 ? "no inverse" : "multiple inverses";
          return v;
        }
      }
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

Check check_axioms(const Semigroup& s, Axioms which, bool force) {
  if (!force && s.size() > kExhaustiveGuard) {
    fail("TooLarge", "axiom check refused for size " +
                         std::to_string(s.size()) + " without force");
  }
  for (Law law : laws_for(which)) {
    if (needs_star(law) && !s.has_star()) {
      fail("SignatureTooWeak",
           std::string("law ") + law_name(law) + " needs a star operation");
    }
    if (needs_plus(law) && !s.has_plus()) {
      fail("SignatureTooWeak",
           std::string("law ") + law_name(law) + " needs a plus operation");
    }
    if (auto v = check_law(s, law)) {
      return v;
    }
  }
  return std::nullopt;
}

bool is_restriction(const Semigroup& s) {
  return s.has_star() && !check_axioms(s, Axioms::restriction);
}

std::vector<Elem> projections(const Semigroup& s) {
  if (!s.has_star()) {
    fail("SignatureTooWeak", "projections need a star operation");
  }
  std::vector<Elem> out;
  for (Elem a = 0; a < s.size(); ++a) {
    if (s.star(a) == a) {
      out.push_back(a);
    }
  }
  // P(S) must be a commutative idempotent subsemigroup.
  for (Elem e : out) {
    if (s.mul(e, e) != e) {
      fail("InternalError", "projection is not idempotent");
    }
    for (Elem f : out) {
      if (s.mul(e, f) != s.mul(f, e) || s.star(s.mul(e, f)) != s.mul(e, f)) {
        fail("InternalError", "projections do not form a semilattice");
      }
    }
  }
  return out;
}

Relation natural_order(const Semigroup& s) {
  const std::size_t n = s.size();
  Relation leq(n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (a == s.mul(b, s.star(a))) {
        leq.set(a, b);
      }
    }
  }
  if (!leq.reflexive() || !leq.antisymmetric() || !leq.transitive()) {
    fail("NotRestriction", "natural order is not a partial order");
  }
  // a <= b implies a* <= b*.
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (leq.has(a, b) && !leq.has(s.star(a), s.star(b))) {
        fail("NotRestriction", "order does not descend to stars");
      }
    }
  }
  // e <= f implies (es)* <= (fs)* for projections e, f.
  for (Elem e = 0; e < n; ++e) {
    if (s.star(e) != e) continue;
    for (Elem f = 0; f < n; ++f) {
      if (s.star(f) != f || !leq.has(e, f)) continue;
      for (Elem x = 0; x < n; ++x) {
        if (!leq.has(s.star(s.mul(e, x)), s.star(s.mul(f, x)))) {
          fail("NotRestriction", "order is not stable under left projections");
        }
      }
    }
  }
  // s <= t implies su <= tu and us <= ut.
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (!leq.has(a, b)) continue;
      for (Elem u = 0; u < n; ++u) {
        if (!leq.has(s.mul(a, u), s.mul(b, u)) ||
            !leq.has(s.mul(u, a), s.mul(u, b))) {
          fail("NotRestriction", "order is not multiplication-stable");
        }
      }
    }
  }
  return leq;
}

Relation compatibility(const Semigroup& s) {
  const std::size_t n = s.size();
  Relation r(n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (s.mul(a, s.star(b)) == s.mul(b, s.star(a))) {
        r.set(a, b);
      }
    }
  }
  if (!r.reflexive() || !r.symmetric()) {
    fail("NotRestriction", "compatibility is not reflexive/symmetric");
  }
  return r;
}

Elem meet_of_compatible(const Semigroup& s, std::span<const Elem> elems) {
  if (elems.empty()) {
    fail("SizeMismatch", "meet of an empty family");
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      const Elem a = elems[i];
      const Elem b = elems[j];
      if (s.mul(a, s.star(b)) != s.mul(b, s.star(a))) {
        fail("NotCompatible", "elements " + std::to_string(a) + " and " +
                                  std::to_string(b) + " are not compatible");
      }
    }
  }
  Elem e = s.star(elems[0]);
  for (std::size_t i = 1; i < elems.size(); ++i) {
    e = s.mul(e, s.star(elems[i]));
  }
  const Elem m = s.mul(elems[0], e);
  // Re-verify the greatest-lower-bound property, and that the meet coincides
  // with every s_i e.
  const Relation leq = natural_order(s);
  for (Elem a : elems) {
    if (s.mul(a, e) != m || !leq.has(m, a)) {
      fail("InternalError", "computed meet is not a lower bound");
    }
  }
  for (Elem t = 0; t < s.size(); ++t) {
    bool lower = true;
    for (Elem a : elems) {
      if (!leq.has(t, a)) {
        lower = false;
        break;
      }
    }
    if (lower && !leq.has(t, m)) {
      fail("InternalError", "computed meet is not the greatest lower bound");
    }
  }
  return m;
}

Relation sigma_pair_closure(const Semigroup& s) {
  const std::size_t n = s.size();
  std::vector<Elem> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Elem a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  std::queue<std::pair<Elem, Elem>> todo;
  const std::vector<Elem> proj = projections(s);
  for (std::size_t i = 1; i < proj.size(); ++i) {
    todo.emplace(proj[0], proj[i]);
  }
  while (!todo.empty()) {
    auto [a, b] = todo.front();
    todo.pop();
    a = find(a);
    b = find(b);
    if (a == b) {
      continue;
    }
    parent[b] = a;
    // Close the congruence under left/right translations and star.
    for (Elem c = 0; c < n; ++c) {
      todo.emplace(s.mul(a, c), s.mul(b, c));
      todo.emplace(s.mul(c, a), s.mul(c, b));
    }
    todo.emplace(s.star(a), s.star(b));
  }
  Relation r(n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (find(a) == find(b)) {
        r.set(a, b);
      }
    }
  }
  return r;
}

Relation sigma(const Semigroup& s) {
  const std::size_t n = s.size();
  const Relation leq = natural_order(s);
  // below[a] = set of elements <= a.
  std::vector<Bitset> below(n, Bitset(n));
  for (Elem c = 0; c < n; ++c) {
    for (Elem a = 0; a < n; ++a) {
      if (leq.has(c, a)) {
        below[a].set(c);
      }
    }
  }
  Relation r(n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (below[a].intersects(below[b])) {
        r.set(a, b);
      }
    }
  }
  if (!(r == sigma_pair_closure(s))) {
    fail("InternalError",
         "sigma via common lower bounds disagrees with the congruence "
         "closure oracle");
  }
  return r;
}

namespace {

bool proper_by_definition(const Semigroup& s, const Relation& sig) {
  for (Elem a = 0; a < s.size(); ++a) {
    for (Elem b = a + 1; b < s.size(); ++b) {
      if (sig.has(a, b) && s.star(a) == s.star(b)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_proper(const Semigroup& s) {
  const Relation sig = sigma(s);
  const bool by_def = proper_by_definition(s, sig);
  const bool by_compat = (compatibility(s) == sig);
  if (by_def != by_compat) {
    fail("InternalError", "the two properness routes disagree");
  }
  return by_def;
}

bool check_proper_via_compat(const Semigroup& s) { return is_proper(s); }

bool has_local_units(const Semigroup& s) {
  const std::vector<Elem> proj = projections(s);
  for (Elem a = 0; a < s.size(); ++a) {
    bool left = false;
    bool right = false;
    for (Elem e : proj) {
      left = left || s.mul(e, a) == a;
      right = right || s.mul(a, e) == a;
    }
    if (!left || !right) {
      return false;
    }
  }
  return true;
}

std::optional<Elem> identity_of(const Semigroup& s) {
  for (Elem e = 0; e < s.size(); ++e) {
    bool id = true;
    for (Elem a = 0; a < s.size(); ++a) {
      if (s.mul(e, a) != a || s.mul(a, e) != a) {
        id = false;
        break;
      }
    }
    if (id) {
      return e;
    }
  }
  return std::nullopt;
}

Semigroup adjoin_identity(const Semigroup& s) {
  if (identity_of(s)) {
    return s;
  }
  const std::size_t n = s.size();
  const std::size_t m = n + 1;
  std::vector<Elem> mul(m * m);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      mul[a * m + b] = s.mul(a, b);
    }
    mul[a * m + n] = a;
    mul[n * m + a] = a;
  }
  mul[n * m + n] = n;
  std::vector<Elem> star;
  if (s.has_star()) {
    star = s.star_table();
    star.push_back(n);
  }
  std::vector<Elem> plus;
  if (s.has_plus()) {
    plus = s.plus_table();
    plus.push_back(n);
  }
  std::vector<std::string> labels;
  if (s.has_labels()) {
    labels = s.labels();
    labels.push_back("1");
  }
  return Semigroup::from_tables(m, std::move(mul), std::move(star),
                                std::move(plus), std::move(labels));
}

SigmaQuotient quotient_by_sigma(const Semigroup& s) {
  const Relation sig = sigma(s);
  const auto classes = sig.classes();
  const std::size_t m = classes.size();
  std::vector<Elem> class_of(s.size());
  for (std::size_t c = 0; c < m; ++c) {
    for (Elem a : classes[c]) {
      class_of[a] = c;
    }
  }
  std::vector<Elem> mul(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      mul[i * m + j] = class_of[s.mul(classes[i][0], classes[j][0])];
    }
  }
  // The projection map must be a (., *)-morphism: products and stars must be
  // constant on classes.
  for (Elem a = 0; a < s.size(); ++a) {
    for (Elem b = 0; b < s.size(); ++b) {
      if (class_of[s.mul(a, b)] != mul[class_of[a] * m + class_of[b]]) {
        fail("InternalError", "sigma is not a congruence for multiplication");
      }
    }
  }
  std::vector<Elem> star(m);
  for (std::size_t i = 0; i < m; ++i) {
    star[i] = class_of[s.star(classes[i][0])];
  }
  for (Elem a = 0; a < s.size(); ++a) {
    if (class_of[s.star(a)] != star[class_of[a]]) {
      fail("InternalError", "sigma is not a congruence for star");
    }
  }
  Semigroup q = Semigroup::from_tables(m, std::move(mul), std::move(star));
  std::size_t nproj = projections(q).size();
  if (nproj != 1) {
    fail("InternalError", "sigma quotient is not reduced");
  }
  return SigmaQuotient{std::move(q), std::move(class_of)};
}

bool is_f_restriction(const Semigroup& s) {
  const Relation sig = sigma(s);
  const Relation leq = natural_order(s);
  for (const auto& cls : sig.classes()) {
    bool has_max = false;
    for (Elem m : cls) {
      bool is_max = true;
      for (Elem a : cls) {
        if (!leq.has(a, m)) {
          is_max = false;
          break;
        }
      }
      if (is_max) {
        has_max = true;
        break;
      }
    }
    if (!has_max) {
      return false;
    }
  }
  return true;
}

std::optional<Elem> restriction_zero(const Semigroup& s) {
  for (Elem z = 0; z < s.size(); ++z) {
    if (s.star(z) != z) {
      continue;
    }
    bool zero = true;
    for (Elem a = 0; a < s.size(); ++a) {
      if (s.mul(z, a) != z || s.mul(a, z) != z) {
        zero = false;
        break;
      }
    }
    if (zero) {
      return z;
    }
  }
  return std::nullopt;
}

std::optional<Elem> join_of(const Semigroup& s, const Relation& order, Elem a,
                            Elem b) {
  std::vector<Elem> ub;
  for (Elem u = 0; u < s.size(); ++u) {
    if (order.has(a, u) && order.has(b, u)) {
      ub.push_back(u);
    }
  }
  for (Elem u : ub) {
    bool least = true;
    for (Elem v : ub) {
      if (!order.has(u, v)) {
        least = false;
        break;
      }
    }
    if (least) {
      return u;
    }
  }
  return std::nullopt;
}

Check check_boolean_restriction(const Semigroup& s) {
  const auto zero = restriction_zero(s);
  if (!zero) {
    fail("NoRestrictionZero", "no zero element that is a projection");
  }
  const Relation leq = natural_order(s);
  const Relation compat = compatibility(s);
  const std::size_t n = s.size();

  // (BR1) joins of compatible pairs exist.
  std::vector<Elem> join(n * n, knone);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (!compat.has(a, b)) {
        continue;
      }
      auto j = join_of(s, leq, a, b);
      if (!j) {
        return Witness{"BR1-join-exists", {a, b}, ""};
      }
      join[a * n + b] = *j;
    }
  }

  // (BR2) P(S) is a generalized Boolean algebra.
  const std::vector<Elem> proj = projections(s);
  Bitset is_proj(n);
  for (Elem e : proj) {
    is_proj.set(e);
  }
  for (Elem e : proj) {
    for (Elem f : proj) {
      const Elem j = join[e * n + f];
      if (j == knone || !is_proj.test(j)) {
        return Witness{"BR2-projection-joins", {e, f}, ""};
      }
    }
  }
  for (Elem e : proj) {
    for (Elem f : proj) {
      for (Elem g : proj) {
        // e ^ (f v g) = (e ^ f) v (e ^ g)
        const Elem lhs = s.mul(e, join[f * n + g]);
        const Elem rhs = join[s.mul(e, f) * n + s.mul(e, g)];
        if (lhs != rhs) {
          return Witness{"BR2-distributivity", {e, f, g}, ""};
        }
      }
    }
  }
  for (Elem e : proj) {
    for (Elem f : proj) {
      if (!leq.has(e, f)) {
        continue;
      }
      bool found = false;
      for (Elem g : proj) {
        if (s.mul(g, e) == *zero && join[g * n + e] == f) {
          found = true;
          break;
        }
      }
      if (!found) {
        return Witness{"BR2-relative-complement", {e, f}, ""};
      }
    }
  }

  // (BR3) right distributivity over existing joins.
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem j = join[a * n + b];
      if (j == knone) {
        continue;
      }
      for (Elem u = 0; u < n; ++u) {
        const Elem lhs = s.mul(j, u);
        const Elem rhs = join[s.mul(a, u) * n + s.mul(b, u)];
        if (rhs == knone || lhs != rhs) {
          return Witness{"BR3-right-distributivity", {a, b, u}, ""};
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<Elem> inverse_table(const Semigroup& s) {
  const std::size_t n = s.size();
  std::vector<Elem> inv(n, knone);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (s.mul(s.mul(a, b), a) == a && s.mul(s.mul(b, a), b) == b) {
        if (inv[a] != knone) {
          fail("NotInverse", "element " + std::to_string(a) +
                                 " has more than one inverse");
        }
        inv[a] = b;
      }
    }
    if (inv[a] == knone) {
      fail("NotInverse", "element " + std::to_string(a) + " has no inverse");
    }
  }
  return inv;
}

// --- Concrete partial-map semigroups -----------------------------------

PtPresentation generate_in_pt(std::size_t ground,
                              std::vector<PartialMap> generators,
                              bool close_star, bool close_plus) {
  if (generators.empty()) {
    fail("SizeMismatch", "generate_in_pt needs at least one generator");
  }
  for (const auto& g : generators) {
    if (g.ground() != ground) {
      fail("SizeMismatch", "generator over a different ground set");
    }
  }
  std::map<PartialMap, Elem> seen;
  std::vector<PartialMap> elems;
  std::queue<PartialMap> todo;
  auto add = [&](const PartialMap& f) {
    if (seen.emplace(f, 0).second) {
      elems.push_back(f);
      todo.push(f);
    }
  };
  for (const auto& g : generators) {
    add(g);
  }
  while (!todo.empty()) {
    const PartialMap f = todo.front();
    todo.pop();
    if (close_star) {
      add(f.star());
    }
    if (close_plus) {
      add(f.plus());
    }
    // Compose with everything found so far, both ways.
    const std::size_t snapshot = elems.size();
    for (std::size_t i = 0; i < snapshot; ++i) {
      add(f.compose(elems[i]));
      add(elems[i].compose(f));
    }
    if (elems.size() > kExhaustiveGuard) {
      fail("TooLarge", "closure in PT exceeded the size guard");
    }
  }
  std::sort(elems.begin(), elems.end());
  std::map<PartialMap, Elem> index;
  for (Elem i = 0; i < elems.size(); ++i) {
    index[elems[i]] = i;
  }
  const std::size_t n = elems.size();
  std::vector<Elem> mul(n * n);
  std::vector<Elem> star(n);
  std::vector<Elem> plus;
  std::vector<std::string> labels(n);
  for (Elem i = 0; i < n; ++i) {
    star[i] = index.at(elems[i].star());
    labels[i] = elems[i].label();
    for (Elem j = 0; j < n; ++j) {
      mul[i * n + j] = index.at(elems[i].compose(elems[j]));
    }
  }
  if (close_plus) {
    plus.resize(n);
    for (Elem i = 0; i < n; ++i) {
      plus[i] = index.at(elems[i].plus());
    }
  }
  Semigroup sg = Semigroup::from_tables(n, std::move(mul), std::move(star),
                                        std::move(plus), std::move(labels));
  return PtPresentation{std::move(sg), std::move(elems)};
}

namespace {

std::vector<PartialMap> all_partial_maps(std::size_t ground,
                                         bool injective_only) {
  std::vector<PartialMap> out;
  std::vector<int> img(ground, PartialMap::kUndef);
  // Odometer over {undef, 0, ..., ground-1}^ground.
  while (true) {
    PartialMap f(ground, img);
    if (!injective_only || f.injective()) {
      out.push_back(f);
    }
    std::size_t pos = ground;
    while (pos > 0) {
      --pos;
      if (img[pos] + 1 < static_cast<int>(ground)) {
        ++img[pos];
        break;
      }
      img[pos] = PartialMap::kUndef;
      if (pos == 0) {
        return out;
      }
    }
    if (ground == 0) {
      return out;
    }
  }
}

}  // namespace

PtPresentation full_pt(std::size_t ground) {
  if (ground == 0 || ground > 4) {
    fail("TooLarge", "PT(n) is built only for 1 <= n <= 4");
  }
  return generate_in_pt(ground, all_partial_maps(ground, false),
                        /*close_star=*/true, /*close_plus=*/true);
}

PtPresentation symmetric_inverse(std::size_t ground) {
  if (ground == 0 || ground > 4) {
    fail("TooLarge", "I(n) is built only for 1 <= n <= 4");
  }
  return generate_in_pt(ground, all_partial_maps(ground, true),
                        /*close_star=*/true, /*close_plus=*/true);
}

Semigroup relation_monoid(std::size_t ground) {
  if (ground == 0 || ground > 3) {
    fail("TooLarge", "R(n) is built only for 1 <= n <= 3");
  }
  const std::size_t bits = ground * ground;
  const std::size_t n = std::size_t{1} << bits;
  // A relation is a bitmask over pairs (out, in); bit index out*ground + in.
  auto compose = [&](std::size_t r, std::size_t q) {
    std::size_t out = 0;
    for (std::size_t z = 0; z < ground; ++z) {
      for (std::size_t x = 0; x < ground; ++x) {
        for (std::size_t y = 0; y < ground; ++y) {
          if ((r >> (z * ground + y)) & 1 && (q >> (y * ground + x)) & 1) {
            out |= std::size_t{1} << (z * ground + x);
          }
        }
      }
    }
    return out;
  };
  std::vector<Elem> mul(n * n);
  std::vector<Elem> star(n);
  std::vector<Elem> plus(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t st = 0;
    std::size_t pl = 0;
    for (std::size_t y = 0; y < ground; ++y) {
      for (std::size_t x = 0; x < ground; ++x) {
        if ((r >> (y * ground + x)) & 1) {
          st |= std::size_t{1} << (x * ground + x);
          pl |= std::size_t{1} << (y * ground + y);
        }
      }
    }
    star[r] = st;
    plus[r] = pl;
    for (std::size_t q = 0; q < n; ++q) {
      mul[r * n + q] = compose(r, q);
    }
  }
  return Semigroup::from_tables(n, std::move(mul), std::move(star),
                                std::move(plus));
}

}  // namespace germwork
