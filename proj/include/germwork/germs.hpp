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

#ifndef GERMWORK_GERMS_HPP_
#define GERMWORK_GERMS_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "germwork/category.hpp"
#include "germwork/error.hpp"
#include "germwork/partial_map.hpp"
#include "germwork/semigroup.hpp"
#include "germwork/semilattice.hpp"

namespace germwork {

// An action of a restriction semigroup on a finite set: one partial map per
// element, with theta_{st} = theta_s o theta_t, theta_{s*} the identity on
// the domain of theta_s, and the domains of the projections covering the
// space.
struct Action {
  Semigroup semigroup;
  std::size_t space = 0;
  std::vector<PartialMap> theta;
};

// Reports which action law fails first, and where.
Check check_action(const Action& a);

// The action of S on itself read off from a PT presentation (each element
// acts as the partial map it names).
Action tautological_action(const PtPresentation& p);

// The spectral action of S on the spectrum of P(S). Point i is the
// principal filter generated by projections[i]; beta_s moves e^ to f^ where
// f is the least projection h with (h s)* >= e. Existence of that minimum is
// verified. Throws NoLocalUnits.
struct SpectralAction {
  Action action;
  std::vector<Elem> projections;  // point index -> projection element of S
  std::vector<Elem> point_of;     // projection element of S -> point index
};

SpectralAction spectral_action(const Semigroup& s);

// A category of germs together with its bookkeeping: the canonical
// representative of each arrow, the unit arrow of each space point, and the
// germ map (s, x) -> arrow.
struct GermCategory {
  Category cat;
  std::vector<std::pair<Elem, Elem>> canon;  // arrow -> (element, point)
  std::vector<Elem> unit_of_point;           // point -> unit arrow
  std::vector<std::vector<Elem>> arrow_of;   // [s][x] -> arrow or knone

  Elem germ(Elem s, Elem x) const { return arrow_of[s][x]; }
};

// Builds the category of germs of an action; the category axioms are
// re-verified. The canonical representative of a class is its least member
// in the natural partial order, with index tie-break.
GermCategory germ_category(const Action& a);

struct UniversalCategory {
  GermCategory germs;
  SpectralAction beta;
  std::vector<Elem> arrow_of_elem;  // s -> the arrow [s, (s*)^]
};

// The category of germs of the spectral action. Verifies that
// s -> [s, (s*)^] is a bijection onto the arrow set and that germ equality
// at e^ coincides with the equation se = te.
UniversalCategory universal_category(const Semigroup& s);

// Theta: s -> (s, X_{s*}) as a slice of the germ category. Verified to be a
// (., *)-morphism; `injective` reports whether it is one-to-one (always the
// case for the spectral action, where Theta is the embedding iota).
struct ThetaEmbedding {
  std::vector<Slice> image;
  bool injective = false;
};

ThetaEmbedding theta_embedding(const Action& a, const GermCategory& c);

// s^{(+)} := the generator of beta_s((s*)^), the least projection e with
// (e s)* >= s*. `is_range` tells whether attaching this table as a plus
// operation satisfies the range-semigroup axioms; `violation` carries the
// first broken law otherwise.
struct OplusResult {
  std::vector<Elem> oplus;
  bool is_range = false;
  Check violation;
  Semigroup extended;  // S with plus := oplus attached
};

OplusResult range_oplus(const Semigroup& s);

// The underlying category of a range semigroup: arrows are the elements,
// dom(s) = s*, ran(s) = s+, with st defined when s* = t+. Throws NotRange.
Category underlying_category(const Semigroup& s);

// Checks that s -> [s, (s*)^] is an isomorphism from the underlying
// category onto the universal category.
Check check_underlying_iso(const Semigroup& s, const UniversalCategory& u);

// Extends a (., *)-morphism alpha : S -> T, where T is the slice semigroup
// of a finite category, to a morphism psi : B(S) -> T of Boolean restriction
// semigroups with alpha = psi o iota. All claimed properties are verified
// exhaustively. Throws NotMorphism / DegenerateOnProjections.
struct BooleanizationExtension {
  SliceSemigroup bs;        // B(S), the slice semigroup of C(S)
  std::vector<Elem> iota;   // S -> element of bs
  std::vector<Elem> psi;    // element of bs -> element of T
};

BooleanizationExtension booleanization_extend(const Semigroup& s,
                                              const Category& target_cat,
                                              const SliceSemigroup& target,
                                              const std::vector<Elem>& alpha);

}  // namespace germwork

#endif  // GERMWORK_GERMS_HPP_
