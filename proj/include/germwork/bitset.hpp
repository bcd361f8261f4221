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

#ifndef GERMWORK_BITSET_HPP_
#define GERMWORK_BITSET_HPP_

#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace germwork {

// Fixed-universe dynamic bitset. All binary operations require operands over
// the same universe size.
class Bitset {
 public:
  Bitset() = default;

  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  static Bitset full(std::size_t n) {
    Bitset b(n);
    for (std::size_t i = 0; i < b.w_.size(); ++i) {
      b.w_[i] = ~std::uint64_t{0};
    }
    b.trim();
    return b;
  }

  std::size_t universe() const { return n_; }

  bool test(std::size_t i) const {
    assert(i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }

  void set(std::size_t i, bool v = true) {
    assert(i < n_);
    if (v) {
      w_[i >> 6] |= std::uint64_t{1} << (i & 63);
    } else {
      w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) {
      c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
  }

  bool any() const {
    for (auto w : w_) {
      if (w != 0) {
        return true;
      }
    }
    return false;
  }

  bool none() const { return !any(); }

  bool subset_of(const Bitset& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (w_[i] & ~o.w_[i]) {
        return false;
      }
    }
    return true;
  }

  bool intersects(const Bitset& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (w_[i] & o.w_[i]) {
        return true;
      }
    }
    return false;
  }

  Bitset operator&(const Bitset& o) const {
    assert(n_ == o.n_);
    Bitset r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) {
      r.w_[i] = w_[i] & o.w_[i];
    }
    return r;
  }

  Bitset operator|(const Bitset& o) const {
    assert(n_ == o.n_);
    Bitset r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) {
      r.w_[i] = w_[i] | o.w_[i];
    }
    return r;
  }

  // Relative complement: elements of *this not in o.
  Bitset operator-(const Bitset& o) const {
    assert(n_ == o.n_);
    Bitset r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) {
      r.w_[i] = w_[i] & ~o.w_[i];
    }
    return r;
  }

  Bitset& operator|=(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) {
      w_[i] |= o.w_[i];
    }
    return *this;
  }

  Bitset& operator&=(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) {
      w_[i] &= o.w_[i];
    }
    return *this;
  }

  bool operator==(const Bitset& o) const = default;

  // Numeric order (the set read as a binary integer, bit i = member i).
  // Used for canonical sorts; the empty set comes first.
  std::strong_ordering operator<=>(const Bitset& o) const {
    if (auto c = n_ <=> o.n_; c != 0) {
      return c;
    }
    for (std::size_t i = w_.size(); i-- > 0;) {
      if (auto c = w_[i] <=> o.w_[i]; c != 0) {
        return c;
      }
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = n_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : w_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        unsigned b = std::countr_zero(w);
        out.push_back((wi << 6) + b);
        w &= w - 1;
      }
    }
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        unsigned b = std::countr_zero(w);
        f((wi << 6) + b);
        w &= w - 1;
      }
    }
  }

 private:
  void trim() {
    if (n_ % 64 != 0 && !w_.empty()) {
      w_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace germwork

#endif  // GERMWORK_BITSET_HPP_
