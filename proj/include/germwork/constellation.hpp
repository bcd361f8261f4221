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

#ifndef GERMWORK_CONSTELLATION_HPP_
#define GERMWORK_CONSTELLATION_HPP_

#include <cstddef>
#include <vector>

#include "germwork/category.hpp"
#include "germwork/error.hpp"
#include "germwork/semigroup.hpp"

namespace germwork {

// A constellation: a partially defined product with a star picking the
// unique right identity, plus order, restriction and corestriction data for
// the inductive axioms. Undefined products are an explicit sentinel (knone).
struct Constellation {
  std::size_t size = 0;
  std::vector<Elem> product;   // size*size, knone where undefined
  std::vector<Elem> star;      // s -> s*
  Relation order;              // candidate partial order
  std::vector<Elem> restr;     // (s, e) -> s|_e, knone where undefined
  std::vector<Elem> corestr;   // (e, s) -> _e|s, knone where undefined

  Elem pp(Elem a, Elem b) const { return product[a * size + b]; }
  bool defined(Elem a, Elem b) const { return pp(a, b) != knone; }
  Elem restriction(Elem s, Elem e) const { return restr[s * size + e]; }
  Elem corestriction(Elem e, Elem s) const { return corestr[e * size + s]; }
  std::vector<Elem> proj() const;  // {s* : s}
};

// Derives order, restriction and corestriction from the product and star
// tables: s <= t iff t . s* is defined and equals s; s|_e = s . e;
// _e|s = the largest t <= s with e . t defined. Used when ingesting a
// constellation given only by (product, star).
Constellation derive_constellation(std::size_t size, std::vector<Elem> product,
                                   std::vector<Elem> star);

// Axioms (Q1)-(Q4).
Check check_constellation(const Constellation& q);

// Ordered axioms (O1)-(O6) plus the inductive condition (I): the projections
// form a semilattice under e ^ f = _f|e. Includes check_constellation.
Check check_inductive(const Constellation& q);

// The inductive constellation of a restriction semigroup: s . t = st when
// s* t = t, the natural partial order, s|_e = se, _e|s = es. The
// corestriction is re-derived by maximality search; a mismatch is a hard
// error, and check_inductive must pass.
Constellation constellation_of(const Semigroup& s);

// The restriction semigroup of an inductive constellation via the
// pseudoproduct s (x) t = s . (_{s*}|t); verifies that the partial product
// s . (_{s*}|t) is always defined and that the restriction axioms hold.
// Throws NotInductive.
Semigroup semigroup_of(const Constellation& q);

// The constellation of a (., *)-closed family of slices of a category, with
// the product defined when dom(s) contains ran(t). Verifies the four
// set-level laws: definedness matches s* t = t, the order is inclusion,
// s|_e = se = {x in s : dom(x) in e} and _e|s = es = {x in s : ran(x) in e}.
Constellation slice_constellation(const Category& c,
                                  const std::vector<Slice>& family);

struct RadiantReport {
  bool radiant = false;
  bool strong = false;
  bool isomorphism = false;
  Check witness;  // first failed radiant condition, if any
};

// Conditions (1)-(4) for an ordered radiant rho : Q -> R, the strengthened
// (1') and (3') for strong radiants, and bijectivity for isomorphisms.
RadiantReport check_radiant(const Constellation& q, const Constellation& r,
                            const std::vector<Elem>& rho);

}  // namespace germwork

#endif  // GERMWORK_CONSTELLATION_HPP_
