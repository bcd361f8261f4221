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

#ifndef GERMWORK_PROPER_HPP_
#define GERMWORK_PROPER_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "germwork/category.hpp"
#include "germwork/error.hpp"
#include "germwork/germs.hpp"
#include "germwork/partial_map.hpp"
#include "germwork/semigroup.hpp"

namespace germwork {

// A partial action of a monoid on a finite set: alpha_1 is the identity and
// alpha_s alpha_t <= alpha_{st} (the premorphism law).
struct PartialAction {
  Semigroup monoid;
  std::size_t space = 0;
  std::vector<PartialMap> alpha;
};

Check check_partial_action(const PartialAction& pa);

// The partial transformation category of a partial action: arrows are pairs
// (t, x) with x in dom(alpha_t); (s, x)(t, y) is defined when alpha_t(y) = x
// and equals (st, y).
struct TransformationCategory {
  Category cat;
  std::vector<std::pair<Elem, Elem>> arrows;  // arrow -> (t, x)
  std::vector<std::vector<Elem>> arrow_of;    // [t][x] -> arrow or knone
};

TransformationCategory transformation_category(const PartialAction& pa);

// The sigma-quotient partial action theta-bar of a proper S induced by an
// action theta: dom(theta-bar_t) is the union of the domains over the class,
// with the common value of the representatives. Well-definedness is verified
// exhaustively. Throws NotProper.
struct InducedPartialAction {
  PartialAction pa;
  SigmaQuotient quotient;
};

InducedPartialAction induced_partial_action(const Semigroup& s,
                                            const Action& a);

// Attempts the induced construction without the properness gate and reports
// the first representative conflict, if any (the negative test for
// non-proper inputs).
Check induced_action_conflict(const Semigroup& s, const Action& a);

// Verifies that (t, x) -> [u, x] is an isomorphism from the partial
// transformation category of theta-bar onto the category of germs of theta.
Check check_germ_iso(const Semigroup& s, const Action& a);

// Conditions (P1) and (P2) of a proper partial action with respect to a
// family of distinguished subsets (which must be distinct and meet-closed).
Check check_proper_partial_action(const PartialAction& pa,
                                  const std::vector<Bitset>& ideals);

// The proper restriction semigroup of pairs (t, e) with e contained in
// dom(alpha_t): (s, e)(t, f) = (st, alpha_t^{-1}(e) n f), (s, e)* = (1, e).
// All five structural clauses are verified: the restriction axioms, the
// projection semilattice being a copy of E, the order, the sigma classes and
// the quotient being T, and properness. Throws NotProperAction.
struct PartialActionProduct {
  Semigroup sg;
  std::vector<std::pair<Elem, std::size_t>> elems;  // (monoid elem, E index)

  Elem index_of(Elem t, std::size_t e) const;
};

PartialActionProduct partial_action_product(const PartialAction& pa,
                                            const std::vector<Bitset>& ideals);

// Writes a proper S with local units as the partial action product of
// iota(P(S)) by S/sigma along the induced spectral action, and verifies that
// s -> ([s]_sigma, D_{s*}) is an isomorphism.
struct ProperDecomposition {
  SpectralAction spectral;
  InducedPartialAction induced;
  std::vector<Bitset> ideals;  // E index i = D at projection i
  PartialActionProduct product;
  std::vector<Elem> psi;  // S -> product element
};

ProperDecomposition decompose_proper(const Semigroup& s);

// S is F-restriction iff the order ideal Psi(dom(beta-bar_t)) is principal
// for every t; must agree with the direct per-class maximum search.
bool f_restriction_criterion(const Semigroup& s);

// The Petrich-Reilly data of a finite E-unitary inverse semigroup: the
// underlying partial action psi_t(e) = t e t^{-1} on idempotents, the pair
// product over psi, the pair product over the spectral D_e sets, the
// isomorphism gamma between them, and the isomorphism from S itself.
// Throws NotEUnitary.
struct PetrichReilly {
  SigmaQuotient quotient;
  std::vector<Elem> proj;              // idempotents of S (index = point)
  std::vector<PartialMap> psi;         // per quotient element, on proj points
  Semigroup pr_product;                // pairs over psi
  std::vector<std::pair<Elem, Elem>> pr_elems;  // (t, proj index)
  ProperDecomposition spectral_route;  // pairs over D_e
  std::vector<Elem> gamma;             // pr element -> spectral product element
  std::vector<Elem> iso_from_s;        // S -> pr element
};

PetrichReilly petrich_reilly(const Semigroup& s);

}  // namespace germwork

#endif  // GERMWORK_PROPER_HPP_
