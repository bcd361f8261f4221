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

#ifndef GERMWORK_CATALOG_HPP_
#define GERMWORK_CATALOG_HPP_

#include <string>
#include <vector>

#include "germwork/json_io.hpp"

namespace germwork {

// Built-in example catalog. Known names:
//   trivial            the one-element restriction monoid
//   pt:N               partial self-maps of an N-set, 1 <= N <= 4
//   i:N                partial bijections of an N-set, 1 <= N <= 4
//   r:2                binary relations on two points
//   paper-4            the submonoid {0, f, g, 1} of PT({a, b})
//   exg:KxM            K-chain x cyclic group of order M
//   group:M            the cyclic group of order M as a reduced monoid
//   psemigroup:3       a 3-element E-unitary inverse monoid (P-triple built)
//   nonf:6             a proper restriction monoid that is not F-restriction
//   chain:K            the K-element chain semilattice, 1 <= K <= 6
//   antichain-bottom:K K atoms over a bottom, 1 <= K <= 4
//   free-meet:2        the free meet-semilattice on two generators
//   pair-groupoid:N    the pair groupoid on N points, 1 <= N <= 3
Document catalog(const std::string& name);

// The catalog entries that the test and acceptance suites sweep; pt:4 and
// i:4 stay out of the sweep (they remain available by name) to keep the
// exhaustive suites inside their time budgets.
std::vector<std::string> acceptance_catalog();

// Test scaffolding: the inverse semigroup of a McAlister-style triple. The
// group acts on a poset (given by its order matrix) by order automorphisms;
// y_set picks the sub-semilattice order ideal. Verifies the triple
// conditions and that the result is an E-unitary inverse semigroup.
Semigroup p_semigroup(const Semigroup& group,
                      const std::vector<std::vector<bool>>& poset_leq,
                      const std::vector<std::vector<Elem>>& group_action,
                      const std::vector<Elem>& y_set);

}  // namespace germwork

#endif  // GERMWORK_CATALOG_HPP_
