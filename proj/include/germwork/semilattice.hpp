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

#ifndef GERMWORK_SEMILATTICE_HPP_
#define GERMWORK_SEMILATTICE_HPP_

#include <cstddef>
#include <vector>

#include "germwork/bitset.hpp"
#include "germwork/error.hpp"
#include "germwork/semigroup.hpp"

namespace germwork {

// A finite meet-semilattice given by its meet table. Commutativity,
// associativity and idempotency are verified on construction; the partial
// order e <= f iff e ^ f = e is derived.
class Semilattice {
 public:
  Semilattice() = default;

  static Semilattice from_meet_table(std::size_t size, std::vector<Elem> meet);

  // The projection semilattice of a unary semigroup, with the index map back
  // into S.
  static Semilattice projections_of(const Semigroup& s,
                                    std::vector<Elem>* elems = nullptr);

  std::size_t size() const { return size_; }
  Elem meet(Elem e, Elem f) const { return meet_[e * size_ + f]; }
  bool leq(Elem e, Elem f) const { return meet(e, f) == e; }
  const Relation& order() const { return order_; }

  Semigroup as_semigroup() const;

 private:
  std::size_t size_ = 0;
  std::vector<Elem> meet_;
  Relation order_;
};

// In the finite case every filter is principal; spectrum point i is the
// principal filter generated by element i. Subsets of the spectrum are
// Bitsets over [0, |E|).
using PointSet = Bitset;

// All filters of E, each returned as a member set. Verified exhaustively
// (over all subsets, guarded) to be exactly the principal filters; in
// particular the count equals |E|.
std::vector<Bitset> filters(const Semilattice& e, bool force = false);

// D_e = set of spectrum points generated by elements below e.
PointSet basic_open(const Semilattice& e, Elem gen);

// D_e minus the union of D_f for the given f <= e; throws NotBelow otherwise.
PointSet basic_open(const Semilattice& e, Elem gen,
                    std::span<const Elem> minus);

// A finite generalized Boolean algebra represented as a family of subsets of
// a ground set, closed under union, intersection and relative complement and
// containing the empty set.
class Gba {
 public:
  Gba() = default;

  // Closes the generators; refuses to grow past the guard unless forced.
  static Gba generate(std::size_t ground, std::vector<Bitset> generators,
                      bool force = false);

  std::size_t ground() const { return ground_; }
  const std::vector<Bitset>& elements() const { return elems_; }
  bool contains(const Bitset& b) const;
  Bitset top() const;  // the union of all elements (finite GBAs have a top)

 private:
  std::size_t ground_ = 0;
  std::vector<Bitset> elems_;  // sorted canonically
};

struct Booleanization {
  Gba algebra;                // equals the full powerset of the spectrum
  std::vector<PointSet> iota; // e -> D_e
};

// The generated generalized Boolean algebra of a finite semilattice together
// with the embedding e -> D_e. Asserts that the closure is the full powerset
// of the spectrum and that iota is injective and meet-preserving.
Booleanization booleanization(const Semilattice& e);

// Extends a non-degenerate meet-morphism alpha : E -> B to a morphism of
// generalized Boolean algebras psi with alpha = psi o iota. psi is evaluated
// on every element of B(E) through two independent decompositions; a
// mismatch is an internal error. Throws Degenerate or NotMeetMorphism.
// The result maps every subset of the spectrum to an element of B.
std::vector<Bitset> extend_to_gba_morphism(const Semilattice& e, const Gba& b,
                                           const std::vector<Bitset>& alpha);

// Order ideals of E as member sets.
bool is_order_ideal(const Semilattice& e, const Bitset& members);

// Psi: a union of basic sets D_e over the generating set -> the order ideal
// {f : D_f included in the union}.
Bitset order_ideal_psi(const Semilattice& e, const Bitset& open_set);

// Psi^{-1}: an order ideal -> the union of D_e over its members.
PointSet order_ideal_psi_inv(const Semilattice& e, const Bitset& ideal);

}  // namespace germwork

#endif  // GERMWORK_SEMILATTICE_HPP_
