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

#ifndef GERMWORK_CATEGORY_HPP_
#define GERMWORK_CATEGORY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "germwork/bitset.hpp"
#include "germwork/error.hpp"
#include "germwork/semigroup.hpp"

namespace germwork {

// Default ceiling for slice enumeration.
inline constexpr std::size_t kSliceGuard = 200000;

// A finite category in the single-sorted style: units are arrows, dom and
// ran map arrows to units, and xy is defined exactly when dom(x) = ran(y).
// The five category axioms are verified on construction.
class Category {
 public:
  Category() = default;

  static Category from_tables(std::size_t arrows, std::vector<Elem> dom,
                              std::vector<Elem> ran,
                              std::vector<Elem> compose,
                              std::vector<std::string> labels = {});

  std::size_t arrows() const { return n_; }
  Elem dom(Elem x) const { return dom_[x]; }
  Elem ran(Elem x) const { return ran_[x]; }
  bool is_unit(Elem x) const { return dom_[x] == x && ran_[x] == x; }
  const std::vector<Elem>& units() const { return units_; }

  bool composable(Elem x, Elem y) const { return dom_[x] == ran_[y]; }
  Elem compose(Elem x, Elem y) const { return compose_[x * n_ + y]; }

  bool has_labels() const { return !labels_.empty(); }
  std::string label(Elem x) const {
    return labels_.empty() ? "a" + std::to_string(x) : labels_[x];
  }

  // Every arrow has an inverse arrow.
  bool is_groupoid() const;
  // Inverse arrow table for a groupoid; throws NotGroupoid.
  std::vector<Elem> inverse_arrows() const;

 private:
  std::size_t n_ = 0;
  std::vector<Elem> dom_, ran_;
  std::vector<Elem> compose_;  // knone where undefined
  std::vector<Elem> units_;
  std::vector<std::string> labels_;
};

// The pair groupoid on n points: arrows (a, b) stand for b -> a, with
// (a, b)(b, c) = (a, c).
Category pair_groupoid(std::size_t points);

// Slices are arrow sets on which dom is injective; bislices additionally
// have ran injective. In the finite discrete case these are exactly the
// slices and bislices of the topological picture.
using Slice = Bitset;

bool is_slice(const Category& c, const Slice& u);
bool is_bislice(const Category& c, const Slice& u);

// UV = {xy : x in U, y in V, composable}; re-verifies the unique
// factorization property and that the result is a slice.
Slice slice_product(const Category& c, const Slice& u, const Slice& v);

// U* = dom(U), as a set of unit arrows (always a slice).
Slice slice_star(const Category& c, const Slice& u);

// ran(U) as a set of unit arrows (a subset of units; not a coslice check).
Bitset slice_ran(const Category& c, const Slice& u);

// All slices (or bislices) in canonical order; throws TooLarge past the
// guard unless forced.
std::vector<Slice> enumerate_slices(const Category& c,
                                    std::size_t guard = kSliceGuard,
                                    bool force = false);
std::vector<Slice> enumerate_bislices(const Category& c,
                                      std::size_t guard = kSliceGuard,
                                      bool force = false);

// The Boolean restriction semigroup of all slices of a finite category,
// with zero the empty slice. check_boolean_restriction must pass; a failure
// is an internal error.
struct SliceSemigroup {
  Semigroup sg;
  std::vector<Slice> slices;  // element -> slice, canonically sorted
  Elem zero;

  Elem index_of(const Slice& u) const;
};

SliceSemigroup slice_semigroup(const Category& c,
                               std::size_t guard = kSliceGuard,
                               bool force = false);

// The unary semigroup generated on an explicit closed family of slices
// (products and stars must stay inside the family).
Semigroup semigroup_on_slices(const Category& c,
                              const std::vector<Slice>& family);

}  // namespace germwork

#endif  // GERMWORK_CATEGORY_HPP_
