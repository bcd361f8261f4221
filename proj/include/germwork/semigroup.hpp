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

#ifndef GERMWORK_SEMIGROUP_HPP_
#define GERMWORK_SEMIGROUP_HPP_

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "germwork/bitset.hpp"
#include "germwork/error.hpp"
#include "germwork/partial_map.hpp"

namespace germwork {

using Elem = std::size_t;
inline constexpr Elem knone = std::numeric_limits<Elem>::max();

// Exhaustive O(n^3) verifications refuse larger carriers unless forced.
inline constexpr std::size_t kExhaustiveGuard = 4096;

enum class Signature { plain, star, star_plus };

// A finite semigroup given by its multiplication table, optionally with a
// star (domain) and a plus (range) unary table. Associativity is verified on
// construction; the unary axioms are the business of check_axioms below.
// Instances are immutable.
class Semigroup {
 public:
  Semigroup() = default;

  static Semigroup from_tables(std::size_t size, std::vector<Elem> mul,
                               std::vector<Elem> star = {},
                               std::vector<Elem> plus = {},
                               std::vector<std::string> labels = {});

  std::size_t size() const { return size_; }
  Signature signature() const { return sig_; }
  bool has_star() const { return sig_ != Signature::plain; }
  bool has_plus() const { return sig_ == Signature::star_plus; }

  Elem mul(Elem a, Elem b) const { return mul_[a * size_ + b]; }
  Elem star(Elem a) const { return star_[a]; }
  Elem plus(Elem a) const { return plus_[a]; }

  const std::vector<Elem>& mul_table() const { return mul_; }
  const std::vector<Elem>& star_table() const { return star_; }
  const std::vector<Elem>& plus_table() const { return plus_; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Elem a) const {
    return labels_.empty() ? "#" + std::to_string(a) : labels_[a];
  }

  // Derived structure with a replacement plus table (used to test whether a
  // candidate range operation satisfies the bi-unary axioms).
  Semigroup with_plus(std::vector<Elem> plus) const;
  Semigroup with_labels(std::vector<std::string> labels) const;

 private:
  std::size_t size_ = 0;
  std::vector<Elem> mul_;
  std::vector<Elem> star_;
  std::vector<Elem> plus_;
  Signature sig_ = Signature::plain;
  std::vector<std::string> labels_;
};

// A binary relation on {0, ..., n-1} stored as a bit matrix.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : n_(n), bits_(n * n) {}

  std::size_t size() const { return n_; }
  bool has(Elem a, Elem b) const { return bits_.test(a * n_ + b); }
  void set(Elem a, Elem b, bool v = true) { bits_.set(a * n_ + b, v); }

  bool operator==(const Relation&) const = default;

  bool reflexive() const;
  bool symmetric() const;
  bool antisymmetric() const;
  bool transitive() const;
  bool equivalence() const { return reflexive() && symmetric() && transitive(); }

  // Equivalence classes sorted by least member; requires equivalence().
  std::vector<std::vector<Elem>> classes() const;

 private:
  std::size_t n_ = 0;
  Bitset bits_;
};

enum class Axioms {
  ehresmann,
  restriction,
  coehresmann,
  corestriction,
  bi_ehresmann,
  birestriction,
  range,
  inverse,
};

std::string to_string(Axioms a);
Axioms axioms_from_string(const std::string& s);

// Exhaustively checks the requested axiom family; returns the first
// counterexample in lexicographic element order, or nullopt.
// Throws SignatureTooWeak when the signature lacks a required operation and
// TooLarge when the carrier exceeds the guard and force is not set.
Check check_axioms(const Semigroup& s, Axioms which, bool force = false);

bool is_restriction(const Semigroup& s);

// {s : s* = s}; equals {s* : s in S}. Verified to be a commutative idempotent
// subsemigroup (it always is for Ehresmann semigroups).
std::vector<Elem> projections(const Semigroup& s);

// Natural partial order s <= t iff s = t s*. Re-verifies that the relation is
// a partial order compatible with the operations.
Relation natural_order(const Semigroup& s);

// Compatibility: s ~ t iff s t* = t s*.
Relation compatibility(const Semigroup& s);

// Greatest lower bound of pairwise compatible elements, computed as s_1 e
// with e = s_1* ... s_n* and re-verified as the glb by exhaustive search.
// Throws NotCompatible with a witness pair otherwise.
Elem meet_of_compatible(const Semigroup& s, std::span<const Elem> elems);

// Least congruence collapsing all projections, computed by the
// common-lower-bound characterisation and cross-checked against
// sigma_pair_closure; a mismatch is an internal error.
Relation sigma(const Semigroup& s);

// Independent oracle: pair-closure computation of the least (.,*)-congruence
// identifying all projections.
Relation sigma_pair_closure(const Semigroup& s);

bool is_proper(const Semigroup& s);
// Properness via "compatibility coincides with sigma"; must agree with
// is_proper on every input.
bool check_proper_via_compat(const Semigroup& s);

bool has_local_units(const Semigroup& s);
std::optional<Elem> identity_of(const Semigroup& s);

// S^1: adjoins a fresh identity with 1* = 1 when S has none; otherwise
// returns S unchanged.
Semigroup adjoin_identity(const Semigroup& s);

struct SigmaQuotient {
  Semigroup monoid;            // the maximum reduced quotient
  std::vector<Elem> class_of;  // element -> class index
};
SigmaQuotient quotient_by_sigma(const Semigroup& s);

// Every sigma-class has a maximum element under the natural partial order.
bool is_f_restriction(const Semigroup& s);

std::optional<Elem> restriction_zero(const Semigroup& s);

// Least upper bound in a partial order, if it exists.
std::optional<Elem> join_of(const Semigroup& s, const Relation& order, Elem a,
                            Elem b);

// (BR1) joins of compatible pairs exist, (BR2) P(S) is a relatively
// complemented distributive lattice with 0, (BR3) right distributivity.
// Returns the first violated axiom with a witness, or nullopt.
// Throws NoRestrictionZero when S has no zero that is a projection.
Check check_boolean_restriction(const Semigroup& s);

// Inverse table a -> a^{-1} for an inverse semigroup (throws otherwise).
std::vector<Elem> inverse_table(const Semigroup& s);

// --- Concrete partial-map semigroups -----------------------------------

struct PtPresentation {
  Semigroup sg;
  std::vector<PartialMap> maps;  // one per element, same indexing
};

// Closure of the generators inside PT(ground) under composition and the
// requested unary operations. Elements are sorted canonically by their image
// tables; star(f) is the identity on dom(f) and plus(f) the identity on
// ran(f).
PtPresentation generate_in_pt(std::size_t ground,
                              std::vector<PartialMap> generators,
                              bool close_star, bool close_plus);

// All partial self-maps of an n-set: the monoid PT(n), order (n+1)^n.
PtPresentation full_pt(std::size_t ground);

// All partial bijections of an n-set: the symmetric inverse monoid I(n).
PtPresentation symmetric_inverse(std::size_t ground);

// All binary relations on an n-set with the domain/range unary operations;
// biEhresmann but (for n >= 2) neither restriction nor corestriction.
Semigroup relation_monoid(std::size_t ground);

}  // namespace germwork

#endif  // GERMWORK_SEMIGROUP_HPP_
