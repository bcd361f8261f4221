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

#ifndef GERMWORK_PARTIAL_MAP_HPP_
#define GERMWORK_PARTIAL_MAP_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "germwork/bitset.hpp"
#include "germwork/error.hpp"

namespace germwork {

// A partial self-map of the set {0, ..., ground-1}. The composition
// convention throughout is "right factor acts first": (s∘t)(x) = s(t(x)),
// so that the identity on the domain of f satisfies f∘(f-domain identity) = f.
class PartialMap {
 public:
  static constexpr int kUndef = -1;

  PartialMap() = default;

  PartialMap(std::size_t ground, std::vector<int> img)
      : ground_(ground), img_(std::move(img)) {
    if (img_.size() != ground_) {
      fail("SizeMismatch", "partial map image table has wrong length");
    }
    for (int v : img_) {
      if (v != kUndef && (v < 0 || static_cast<std::size_t>(v) >= ground_)) {
        fail("SizeMismatch", "partial map image out of range");
      }
    }
  }

  static PartialMap identity(std::size_t ground) {
    std::vector<int> img(ground);
    for (std::size_t i = 0; i < ground; ++i) {
      img[i] = static_cast<int>(i);
    }
    return PartialMap(ground, std::move(img));
  }

  static PartialMap empty(std::size_t ground) {
    return PartialMap(ground, std::vector<int>(ground, kUndef));
  }

  std::size_t ground() const { return ground_; }

  bool defined(std::size_t x) const { return img_[x] != kUndef; }

  std::size_t operator()(std::size_t x) const {
    return static_cast<std::size_t>(img_[x]);
  }

  const std::vector<int>& image_table() const { return img_; }

  Bitset domain() const {
    Bitset d(ground_);
    for (std::size_t x = 0; x < ground_; ++x) {
      if (defined(x)) {
        d.set(x);
      }
    }
    return d;
  }

  Bitset range() const {
    Bitset r(ground_);
    for (std::size_t x = 0; x < ground_; ++x) {
      if (defined(x)) {
        r.set((*this)(x));
      }
    }
    return r;
  }

  // this ∘ inner, right factor acts first.
  PartialMap compose(const PartialMap& inner) const {
    if (ground_ != inner.ground_) {
      fail("SizeMismatch", "composing maps over different ground sets");
    }
    std::vector<int> img(ground_, kUndef);
    for (std::size_t x = 0; x < ground_; ++x) {
      if (inner.defined(x) && defined(inner(x))) {
        img[x] = static_cast<int>((*this)(inner(x)));
      }
    }
    return PartialMap(ground_, std::move(img));
  }

  // Identity on the domain.
  PartialMap star() const {
    std::vector<int> img(ground_, kUndef);
    for (std::size_t x = 0; x < ground_; ++x) {
      if (defined(x)) {
        img[x] = static_cast<int>(x);
      }
    }
    return PartialMap(ground_, std::move(img));
  }

  // Identity on the range.
  PartialMap plus() const {
    std::vector<int> img(ground_, kUndef);
    for (std::size_t x = 0; x < ground_; ++x) {
      if (defined(x)) {
        img[(*this)(x)] = static_cast<int>((*this)(x));
      }
    }
    return PartialMap(ground_, std::move(img));
  }

  bool injective() const {
    Bitset seen(ground_);
    for (std::size_t x = 0; x < ground_; ++x) {
      if (defined(x)) {
        if (seen.test((*this)(x))) {
          return false;
        }
        seen.set((*this)(x));
      }
    }
    return true;
  }

  PartialMap inverse() const {
    std::vector<int> img(ground_, kUndef);
    for (std::size_t x = 0; x < ground_; ++x) {
      if (defined(x)) {
        img[(*this)(x)] = static_cast<int>(x);
      }
    }
    return PartialMap(ground_, std::move(img));
  }

  // True when this map is the restriction of g to the domain of this map.
  bool restriction_of(const PartialMap& g) const {
    for (std::size_t x = 0; x < ground_; ++x) {
      if (defined(x) && (!g.defined(x) || g(x) != (*this)(x))) {
        return false;
      }
    }
    return true;
  }

  bool operator==(const PartialMap&) const = default;
  auto operator<=>(const PartialMap&) const = default;

  std::string label() const {
    bool is_id = true;
    bool is_empty = true;
    for (std::size_t x = 0; x < ground_; ++x) {
      if (defined(x)) {
        is_empty = false;
        if ((*this)(x) != x) {
          is_id = false;
        }
      } else {
        is_id = false;
      }
    }
    if (is_empty) {
      return "0";
    }
    if (is_id) {
      return "1";
    }
    std::string s = "[";
    bool first = true;
    for (std::size_t x = 0; x < ground_; ++x) {
      if (defined(x)) {
        if (!first) {
          s += " ";
        }
        first = false;
        s += std::to_string(x) + ">" + std::to_string((*this)(x));
      }
    }
    s += "]";
    return s;
  }

 private:
  std::size_t ground_ = 0;
  std::vector<int> img_;
};

}  // namespace germwork

#endif  // GERMWORK_PARTIAL_MAP_HPP_
