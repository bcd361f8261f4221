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

#ifndef GERMWORK_ALGEBRA_HPP_
#define GERMWORK_ALGEBRA_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "germwork/category.hpp"
#include "germwork/error.hpp"
#include "germwork/germs.hpp"
#include "germwork/semigroup.hpp"

namespace germwork {

// Exact coefficient rings: arbitrary-precision rationals, integers, or
// integers mod a prime. No floating point anywhere.
struct Ring {
  enum class Kind { rationals, integers, mod };

  Kind kind = Kind::rationals;
  unsigned modulus = 0;

  static Ring q() { return {Kind::rationals, 0}; }
  static Ring z() { return {Kind::integers, 0}; }
  static Ring zp(unsigned p);

  bool operator==(const Ring&) const = default;
  std::string name() const;
  mpq_class normalize(const mpq_class& v) const;
};

Ring ring_from_string(const std::string& s);

// A finitely supported coefficient vector over a fixed basis. Zero
// coefficients are never stored.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(Ring ring, std::size_t dim) : ring_(ring), dim_(dim) {}

  static AlgebraElement basis(Ring ring, std::size_t dim, Elem i) {
    AlgebraElement a(ring, dim);
    a.add(i, 1);
    return a;
  }

  const Ring& ring() const { return ring_; }
  std::size_t dim() const { return dim_; }
  const std::map<Elem, mpq_class>& coeffs() const { return c_; }
  mpq_class at(Elem i) const {
    auto it = c_.find(i);
    return it == c_.end() ? mpq_class(0) : it->second;
  }

  void add(Elem i, const mpq_class& v);
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement scaled(const mpq_class& v) const;
  bool operator==(const AlgebraElement& o) const = default;
  bool is_zero() const { return c_.empty(); }

 private:
  Ring ring_;
  std::size_t dim_ = 0;
  std::map<Elem, mpq_class> c_;
};

// Bilinear extension of the semigroup product.
AlgebraElement semigroup_product(const Semigroup& s, const AlgebraElement& a,
                                 const AlgebraElement& b);

// Convolution over a finite category: (f * g)(x) = sum over factorizations
// x = u v of f(u) g(v).
AlgebraElement convolution(const Category& c, const AlgebraElement& f,
                           const AlgebraElement& g);

// chi_U and delta_x over the arrow basis of a category.
AlgebraElement indicator(Ring ring, const Slice& u);
AlgebraElement delta(Ring ring, std::size_t dim, Elem x);

// The isomorphism F : KS -> KC(S), s -> chi_{iota(s)}, checked exhaustively:
// multiplicativity on all basis pairs, the delta-expansion
// chi_{iota(s)} = sum over t <= s of delta_{[t,(t*)^]}, strict
// unitriangularity of the change-of-basis matrix under a topological order
// of <=, and invertibility over the ring via back substitution.
struct FIsoResult {
  bool multiplicative = false;
  bool unitriangular = false;
  bool invertible = false;
  std::size_t dim_semigroup = 0;
  std::size_t dim_category = 0;
  std::vector<Elem> topo;                    // topological order of S by <=
  std::vector<std::vector<mpq_class>> matrix;  // rows/cols in topo order
};

FIsoResult f_iso(const Semigroup& s, const UniversalCategory& u, Ring ring);

// For a finite germ groupoid: the span of bislice indicators equals the span
// of slice indicators, and the inclusion-exclusion expansion of chi_U over a
// bislice cover of each slice U holds.
bool groupoid_span_check(const Category& c, std::size_t guard = kSliceGuard);

// Rank of a family of vectors over the rationals (exact Gaussian
// elimination).
std::size_t rational_rank(std::vector<std::vector<mpq_class>> rows);

}  // namespace germwork

#endif  // GERMWORK_ALGEBRA_HPP_
