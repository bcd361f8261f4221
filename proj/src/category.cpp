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

#include "germwork/category.hpp"

#include <algorithm>
#include <map>

namespace germwork {

Category Category::from_tables(std::size_t arrows, std::vector<Elem> dom,
                               std::vector<Elem> ran,
                               std::vector<Elem> compose,
                               std::vector<std::string> labels) {
  if (arrows == 0) {
    fail("SizeMismatch", "a category needs at least one arrow");
  }
  if (dom.size() != arrows || ran.size() != arrows ||
      compose.size() != arrows * arrows) {
    fail("SizeMismatch", "category tables have inconsistent sizes");
  }
  if (!labels.empty() && labels.size() != arrows) {
    fail("SizeMismatch", "label list has wrong length");
  }
  for (Elem x = 0; x < arrows; ++x) {
    if (dom[x] >= arrows || ran[x] >= arrows) {
      fail("SizeMismatch", "dom/ran entry out of range");
    }
  }
  Category c;
  c.n_ = arrows;
  c.dom_ = std::move(dom);
  c.ran_ = std::move(ran);
  c.compose_ = std::move(compose);
  c.labels_ = std::move(labels);

  // dom and ran must share their image, the unit set.
  Bitset dom_img(arrows), ran_img(arrows);
  for (Elem x = 0; x < arrows; ++x) {
    dom_img.set(c.dom_[x]);
    ran_img.set(c.ran_[x]);
  }
  if (dom_img != ran_img) {
    fail("NotCategory", "dom and ran have different images");
  }
  dom_img.for_each([&](std::size_t u) { c.units_.push_back(u); });

  // (1) units are their own dom and ran.
  for (Elem u : c.units_) {
    if (c.dom_[u] != u || c.ran_[u] != u) {
      fail("NotCategory",
           "unit " + std::to_string(u) + " is not its own dom/ran");
    }
  }
  // Composition is defined exactly on composable pairs.
  for (Elem x = 0; x < arrows; ++x) {
    for (Elem y = 0; y < arrows; ++y) {
      const Elem z = c.compose_[x * arrows + y];
      if (c.composable(x, y)) {
        if (z >= arrows) {
          fail("NotCategory", "missing composite of a composable pair");
        }
        // (2), (3) dom/ran of a product.
        if (c.dom_[z] != c.dom_[y] || c.ran_[z] != c.ran_[x]) {
          fail("NotCategory", "composite has wrong dom/ran at (" +
                                  std::to_string(x) + ", " +
                                  std::to_string(y) + ")");
        }
      } else if (z != knone) {
        fail("NotCategory", "composite defined on a non-composable pair");
      }
    }
  }
  // (4) associativity on composable triples.
  for (Elem x = 0; x < arrows; ++x) {
    for (Elem y = 0; y < arrows; ++y) {
      if (!c.composable(x, y)) {
        continue;
      }
      const Elem xy = c.compose(x, y);
      for (Elem z = 0; z < arrows; ++z) {
        if (!c.composable(y, z)) {
          continue;
        }
        if (c.compose(xy, z) != c.compose(x, c.compose(y, z))) {
          fail("NotCategory", "composition is not associative");
        }
      }
    }
  }
  // (5) unit laws.
  for (Elem x = 0; x < arrows; ++x) {
    if (c.compose(c.ran_[x], x) != x || c.compose(x, c.dom_[x]) != x) {
      fail("NotCategory", "unit laws fail at " + std::to_string(x));
    }
  }
  return c;
}

bool Category::is_groupoid() const {
  for (Elem x = 0; x < n_; ++x) {
    bool has_inverse = false;
    for (Elem y = 0; y < n_; ++y) {
      if (ran_[y] == dom_[x] && dom_[y] == ran_[x] &&
          compose(y, x) == dom_[x] && compose(x, y) == ran_[x]) {
        has_inverse = true;
        break;
      }
    }
    if (!has_inverse) {
      return false;
    }
  }
  return true;
}

std::vector<Elem> Category::inverse_arrows() const {
  std::vector<Elem> inv(n_, knone);
  for (Elem x = 0; x < n_; ++x) {
    for (Elem y = 0; y < n_; ++y) {
      if (ran_[y] == dom_[x] && dom_[y] == ran_[x] &&
          compose(y, x) == dom_[x] && compose(x, y) == ran_[x]) {
        inv[x] = y;
        break;
      }
    }
    if (inv[x] == knone) {
      fail("NotGroupoid", "arrow " + std::to_string(x) + " has no inverse");
    }
  }
  return inv;
}

Category pair_groupoid(std::size_t points) {
  if (points == 0) {
    fail("SizeMismatch", "pair groupoid needs at least one point");
  }
  const std::size_t n = points * points;
  auto id = [&](std::size_t a, std::size_t b) { return a * points + b; };
  std::vector<Elem> dom(n), ran(n), compose(n * n, knone);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < points; ++a) {
    for (std::size_t b = 0; b < points; ++b) {
      dom[id(a, b)] = id(b, b);
      ran[id(a, b)] = id(a, a);
      labels[id(a, b)] =
          "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
  }
  for (std::size_t a = 0; a < points; ++a) {
    for (std::size_t b = 0; b < points; ++b) {
      for (std::size_t c = 0; c < points; ++c) {
        compose[id(a, b) * n + id(b, c)] = id(a, c);
      }
    }
  }
  return Category::from_tables(n, std::move(dom), std::move(ran),
                               std::move(compose), std::move(labels));
}

bool is_slice(const Category& c, const Slice& u) {
  if (u.universe() != c.arrows()) {
    return false;
  }
  Bitset seen(c.arrows());
  bool ok = true;
  u.for_each([&](std::size_t x) {
    if (seen.test(c.dom(x))) {
      ok = false;
    }
    seen.set(c.dom(x));
  });
  return ok;
}

bool is_bislice(const Category& c, const Slice& u) {
  if (!is_slice(c, u)) {
    return false;
  }
  Bitset seen(c.arrows());
  bool ok = true;
  u.for_each([&](std::size_t x) {
    if (seen.test(c.ran(x))) {
      ok = false;
    }
    seen.set(c.ran(x));
  });
  return ok;
}

Slice slice_product(const Category& c, const Slice& u, const Slice& v) {
  if (!is_slice(c, u) || !is_slice(c, v)) {
    fail("NotASlice", "slice product on a non-slice");
  }
  Slice out(c.arrows());
  std::vector<Elem> factor_u(c.arrows(), knone);
  std::vector<Elem> factor_v(c.arrows(), knone);
  u.for_each([&](std::size_t x) {
    v.for_each([&](std::size_t y) {
      if (!c.composable(x, y)) {
        return;
      }
      const Elem z = c.compose(x, y);
      if (out.test(z) && (factor_u[z] != x || factor_v[z] != y)) {
        // Slices factor uniquely; two factorizations contradict that.
        fail("InternalError", "slice product lost unique factorization");
      }
      out.set(z);
      factor_u[z] = x;
      factor_v[z] = y;
    });
  });
  if (!is_slice(c, out)) {
    fail("InternalError", "product of slices is not a slice");
  }
  return out;
}

Slice slice_star(const Category& c, const Slice& u) {
  Slice out(c.arrows());
  u.for_each([&](std::size_t x) { out.set(c.dom(x)); });
  return out;
}

Bitset slice_ran(const Category& c, const Slice& u) {
  Bitset out(c.arrows());
  u.for_each([&](std::size_t x) { out.set(c.ran(x)); });
  return out;
}

namespace {

std::vector<Slice> enumerate_with(const Category& c, bool bislice,
                                  std::size_t guard, bool force) {
  // Bucket the arrows by their dom unit: a slice picks at most one arrow
  // from each bucket.
  std::vector<std::vector<Elem>> bucket;
  std::map<Elem, std::size_t> bucket_of;
  for (Elem u : c.units()) {
    bucket_of[u] = bucket.size();
    bucket.emplace_back();
  }
  for (Elem x = 0; x < c.arrows(); ++x) {
    bucket[bucket_of[c.dom(x)]].push_back(x);
  }
  double estimate = 1.0;
  for (const auto& b : bucket) {
    estimate *= static_cast<double>(b.size() + 1);
  }
  if (!force && estimate > static_cast<double>(guard)) {
    fail("TooLarge", "slice count estimate exceeds the guard");
  }
  std::vector<Slice> out;
  std::vector<std::size_t> pick(bucket.size(), 0);  // 0 = none, i+1 = arrow i
  while (true) {
    Slice s(c.arrows());
    for (std::size_t i = 0; i < bucket.size(); ++i) {
      if (pick[i] > 0) {
        s.set(bucket[i][pick[i] - 1]);
      }
    }
    if (!bislice || is_bislice(c, s)) {
      out.push_back(std::move(s));
    }
    std::size_t pos = bucket.size();
    bool done = true;
    while (pos > 0) {
      --pos;
      if (pick[pos] < bucket[pos].size()) {
        ++pick[pos];
        done = false;
        break;
      }
      pick[pos] = 0;
    }
    if (done) {
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Slice> enumerate_slices(const Category& c, std::size_t guard,
                                    bool force) {
  return enumerate_with(c, /*bislice=*/false, guard, force);
}

std::vector<Slice> enumerate_bislices(const Category& c, std::size_t guard,
                                      bool force) {
  return enumerate_with(c, /*bislice=*/true, guard, force);
}

Elem SliceSemigroup::index_of(const Slice& u) const {
  auto it = std::lower_bound(slices.begin(), slices.end(), u);
  if (it == slices.end() || !(*it == u)) {
    fail("InternalError", "slice not found in the slice semigroup");
  }
  return static_cast<Elem>(it - slices.begin());
}

Semigroup semigroup_on_slices(const Category& c,
                              const std::vector<Slice>& family) {
  const std::size_t n = family.size();
  if (n == 0) {
    fail("SizeMismatch", "empty slice family");
  }
  auto index = [&](const Slice& u) -> Elem {
    for (std::size_t i = 0; i < n; ++i) {
      if (family[i] == u) {
        return i;
      }
    }
    fail("NotASlice", "family is not closed under the operations");
  };
  std::vector<Elem> mul(n * n);
  std::vector<Elem> star(n);
  for (std::size_t i = 0; i < n; ++i) {
    star[i] = index(slice_star(c, family[i]));
    for (std::size_t j = 0; j < n; ++j) {
      mul[i * n + j] = index(slice_product(c, family[i], family[j]));
    }
  }
  return Semigroup::from_tables(n, std::move(mul), std::move(star));
}

SliceSemigroup slice_semigroup(const Category& c, std::size_t guard,
                               bool force) {
  std::vector<Slice> slices = enumerate_slices(c, guard, force);
  const std::size_t n = slices.size();
  std::vector<Elem> mul(n * n);
  std::vector<Elem> star(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Slice si = slice_star(c, slices[i]);
    star[i] = static_cast<Elem>(
        std::lower_bound(slices.begin(), slices.end(), si) - slices.begin());
    for (std::size_t j = 0; j < n; ++j) {
      const Slice p = slice_product(c, slices[i], slices[j]);
      auto it = std::lower_bound(slices.begin(), slices.end(), p);
      if (it == slices.end() || !(*it == p)) {
        fail("InternalError", "slices are not closed under products");
      }
      mul[i * n + j] = static_cast<Elem>(it - slices.begin());
    }
  }
  SliceSemigroup out;
  out.sg = Semigroup::from_tables(n, std::move(mul), std::move(star));
  out.slices = std::move(slices);
  out.zero = out.index_of(Slice(c.arrows()));
  expect_pass(check_boolean_restriction(out.sg),
              "Boolean restriction axioms of a slice semigroup");
  return out;
}

}  // namespace germwork
