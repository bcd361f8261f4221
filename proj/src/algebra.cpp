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

#include "germwork/algebra.hpp"

#include <algorithm>

namespace germwork {

Ring Ring::zp(unsigned p) {
  if (p < 2) {
    fail("SchemaError", "modulus must be at least 2");
  }
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      fail("SchemaError", "modulus must be prime");
    }
  }
  return {Kind::mod, p};
}

std::string Ring::name() const {
  switch (kind) {
    case Kind::rationals:
      return "Q";
    case Kind::integers:
      return "Z";
    case Kind::mod:
      return "Z/" + std::to_string(modulus);
  }
  return "?";
}

mpq_class Ring::normalize(const mpq_class& v) const {
  mpq_class w = v;
  w.canonicalize();
  if (kind == Kind::rationals) {
    return w;
  }
  if (w.get_den() != 1) {
    fail("RingMismatch", "non-integer scalar in an integral ring");
  }
  if (kind == Kind::integers) {
    return w;
  }
  mpz_class r = w.get_num() % modulus;
  if (r < 0) {
    r += modulus;
  }
  return mpq_class(r);
}

Ring ring_from_string(const std::string& s) {
  if (s == "q" || s == "Q") {
    return Ring::q();
  }
  if (s == "z" || s == "Z") {
    return Ring::z();
  }
  if (s.rfind("zp:", 0) == 0) {
    return Ring::zp(static_cast<unsigned>(std::stoul(s.substr(3))));
  }
  fail("SchemaError", "unknown ring: " + s + " (expected q, z or zp:<p>)");
}

void AlgebraElement::add(Elem i, const mpq_class& v) {
  if (i >= dim_) {
    fail("SizeMismatch", "coefficient index out of range");
  }
  mpq_class w = ring_.normalize(c_[i] + ring_.normalize(v));
  if (w == 0) {
    c_.erase(i);
  } else {
    c_[i] = w;
  }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  if (!(ring_ == o.ring_) || dim_ != o.dim_) {
    fail("RingMismatch", "adding elements over different rings or bases");
  }
  AlgebraElement r = *this;
  for (const auto& [i, v] : o.c_) {
    r.add(i, v);
  }
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  return *this + o.scaled(-1);
}

AlgebraElement AlgebraElement::scaled(const mpq_class& v) const {
  AlgebraElement r(ring_, dim_);
  for (const auto& [i, w] : c_) {
    r.add(i, w * v);
  }
  return r;
}

AlgebraElement semigroup_product(const Semigroup& s, const AlgebraElement& a,
                                 const AlgebraElement& b) {
  if (!(a.ring() == b.ring())) {
    fail("RingMismatch", "product over different rings");
  }
  if (a.dim() != s.size() || b.dim() != s.size()) {
    fail("SizeMismatch", "element basis does not match the semigroup");
  }
  AlgebraElement r(a.ring(), s.size());
  for (const auto& [x, cx] : a.coeffs()) {
    for (const auto& [y, cy] : b.coeffs()) {
      r.add(s.mul(x, y), cx * cy);
    }
  }
  return r;
}

AlgebraElement convolution(const Category& c, const AlgebraElement& f,
                           const AlgebraElement& g) {
  if (!(f.ring() == g.ring())) {
    fail("RingMismatch", "convolution over different rings");
  }
  if (f.dim() != c.arrows() || g.dim() != c.arrows()) {
    fail("CategoryMismatch", "element basis does not match the category");
  }
  AlgebraElement r(f.ring(), c.arrows());
  for (const auto& [u, cu] : f.coeffs()) {
    for (const auto& [v, cv] : g.coeffs()) {
      if (c.composable(u, v)) {
        r.add(c.compose(u, v), cu * cv);
      }
    }
  }
  return r;
}

AlgebraElement indicator(Ring ring, const Slice& u) {
  AlgebraElement r(ring, u.universe());
  u.for_each([&](std::size_t x) { r.add(x, 1); });
  return r;
}

AlgebraElement delta(Ring ring, std::size_t dim, Elem x) {
  return AlgebraElement::basis(ring, dim, x);
}

FIsoResult f_iso(const Semigroup& s, const UniversalCategory& u, Ring ring) {
  const std::size_t n = s.size();
  FIsoResult out;
  out.dim_semigroup = n;
  out.dim_category = u.germs.cat.arrows();

  const Relation leq = natural_order(s);
  // Topological order of <= (smaller elements first), index tie-break.
  {
    std::vector<std::size_t> indegree(n, 0);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (a != b && leq.has(b, a)) {
          ++indegree[a];
        }
      }
    }
    std::vector<bool> placed(n, false);
    while (out.topo.size() < n) {
      Elem next = knone;
      for (Elem a = 0; a < n; ++a) {
        if (!placed[a] && indegree[a] == 0) {
          next = a;
          break;
        }
      }
      if (next == knone) {
        fail("InternalError", "natural order has a cycle");
      }
      placed[next] = true;
      out.topo.push_back(next);
      for (Elem a = 0; a < n; ++a) {
        if (!placed[a] && a != next && leq.has(next, a)) {
          --indegree[a];
        }
      }
    }
  }

  const ThetaEmbedding iota = theta_embedding(u.beta.action, u.germs);
  std::vector<AlgebraElement> f_of(n);
  for (Elem t = 0; t < n; ++t) {
    f_of[t] = indicator(ring, iota.image[t]);
    // The finitary delta-expansion: chi_{iota(t)} = sum_{v <= t} delta_v.
    AlgebraElement expansion(ring, out.dim_category);
    for (Elem v = 0; v < n; ++v) {
      if (leq.has(v, t)) {
        expansion.add(u.arrow_of_elem[v], 1);
      }
    }
    if (!(expansion == f_of[t])) {
      fail("InternalError", "delta expansion of chi_{iota(s)} fails");
    }
  }

  out.multiplicative = true;
  for (Elem a = 0; a < n && out.multiplicative; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (!(convolution(u.germs.cat, f_of[a], f_of[b]) == f_of[s.mul(a, b)])) {
        out.multiplicative = false;
        break;
      }
    }
  }

  // Change of basis from {delta_{[t,(t*)^]}} to {F(s)}, rows and columns in
  // topological order: unit diagonal, support strictly inside <=.
  std::vector<Elem> pos(n);
  for (std::size_t i = 0; i < n; ++i) {
    pos[out.topo[i]] = i;
  }
  std::vector<Elem> elem_of_arrow(out.dim_category, knone);
  for (Elem cand = 0; cand < n; ++cand) {
    elem_of_arrow[u.arrow_of_elem[cand]] = cand;
  }
  out.matrix.assign(n, std::vector<mpq_class>(n, mpq_class(0)));
  for (std::size_t i = 0; i < n; ++i) {
    const Elem t = out.topo[i];
    for (const auto& [arrow, v] : f_of[t].coeffs()) {
      out.matrix[i][pos[elem_of_arrow[arrow]]] = v;
    }
  }
  out.unitriangular = true;
  for (std::size_t i = 0; i < n && out.unitriangular; ++i) {
    if (out.matrix[i][i] != 1) {
      out.unitriangular = false;
      break;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (out.matrix[i][j] == 0) {
        continue;
      }
      if (j > i || !leq.has(out.topo[j], out.topo[i])) {
        out.unitriangular = false;
        break;
      }
    }
  }

  // Invert by back substitution (no division needed on a unitriangular
  // matrix) and verify M M^{-1} = I over the ring.
  if (out.unitriangular) {
    std::vector<std::vector<mpq_class>> inv(n,
                                            std::vector<mpq_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      inv[i][i] = 1;
      for (std::size_t j = 0; j < i; ++j) {
        // Solve row i of M * inv = I progressively.
        mpq_class acc(0);
        for (std::size_t k = j; k < i; ++k) {
          acc += out.matrix[i][k] * inv[k][j];
        }
        inv[i][j] = ring.normalize(-acc);
      }
    }
    out.invertible = true;
    for (std::size_t i = 0; i < n && out.invertible; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        mpq_class acc(0);
        for (std::size_t k = 0; k < n; ++k) {
          acc += out.matrix[i][k] * inv[k][j];
        }
        if (ring.normalize(acc) != (i == j ? 1 : 0)) {
          out.invertible = false;
          break;
        }
      }
    }
  }
  return out;
}

std::size_t rational_rank(std::vector<std::vector<mpq_class>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = knone;
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (rows[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == knone) {
      continue;
    }
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][c] != 0) {
        const mpq_class factor = rows[r][c] / rows[rank][c];
        for (std::size_t k = c; k < cols; ++k) {
          rows[r][k] -= factor * rows[rank][k];
        }
      }
    }
    ++rank;
  }
  return rank;
}

bool groupoid_span_check(const Category& c, std::size_t guard) {
  if (!c.is_groupoid()) {
    fail("NotGroupoid", "span comparison needs a groupoid");
  }
  const std::vector<Slice> slices = enumerate_slices(c, guard);
  const std::vector<Slice> bislices = enumerate_bislices(c, guard);

  auto rows_of = [&](const std::vector<Slice>& family) {
    std::vector<std::vector<mpq_class>> rows;
    rows.reserve(family.size());
    for (const auto& u : family) {
      std::vector<mpq_class> row(c.arrows(), mpq_class(0));
      u.for_each([&](std::size_t x) { row[x] = 1; });
      rows.push_back(std::move(row));
    }
    return rows;
  };
  const std::size_t slice_rank = rational_rank(rows_of(slices));
  const std::size_t bislice_rank = rational_rank(rows_of(bislices));
  if (slice_rank != bislice_rank) {
    return false;
  }

  // Inclusion-exclusion: cover each slice U by bislices U_1, ..., U_k (one
  // arrow per repeated range unit) and expand chi_U over intersections.
  const Ring ring = Ring::q();
  for (const auto& u : slices) {
    std::vector<Slice> cover;
    {
      std::vector<std::size_t> seen(c.arrows(), 0);
      std::vector<std::vector<Elem>> layer;
      u.for_each([&](std::size_t x) {
        const std::size_t k = seen[c.ran(x)]++;
        if (layer.size() <= k) {
          layer.emplace_back();
        }
        layer[k].push_back(x);
      });
      for (const auto& arrows : layer) {
        Slice b(c.arrows());
        for (Elem x : arrows) {
          b.set(x);
        }
        if (!is_bislice(c, b)) {
          fail("InternalError", "cover layer is not a bislice");
        }
        cover.push_back(std::move(b));
      }
    }
    AlgebraElement sum(ring, c.arrows());
    const std::size_t k = cover.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
      Slice inter = Bitset::full(c.arrows());
      int bits = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if ((mask >> i) & 1) {
          inter &= cover[i];
          ++bits;
        }
      }
      if (!is_bislice(c, inter)) {
        fail("InternalError", "intersection of cover bislices is not one");
      }
      sum = sum + indicator(ring, inter).scaled(bits % 2 == 1 ? 1 : -1);
    }
    if (!(sum == indicator(ring, u))) {
      return false;
    }
  }
  return true;
}

}  // namespace germwork
