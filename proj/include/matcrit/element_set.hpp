// Copyright 2025 The Authors.
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

#ifndef MATCRIT_ELEMENT_SET_H_
#define MATCRIT_ELEMENT_SET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace matcrit {

// Subset of a ground set {0, ..., n-1}, packed into a 32-bit word.
// Ground sets are capped at kMaxElements; matroid constructors enforce the
// cap and reject anything larger with an explicit size error.
class ElementSet {
 public:
  static constexpr int kMaxElements = 31;

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr ElementSet of(std::initializer_list<int> elements) {
    std::uint32_t b = 0;
    for (int e : elements) b |= std::uint32_t{1} << e;
    return ElementSet(b);
  }
  static constexpr ElementSet single(int e) { return ElementSet(std::uint32_t{1} << e); }
  static constexpr ElementSet full(int n) {
    return ElementSet(n == 0 ? 0u : (std::uint32_t{1} << n) - 1u);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
  constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(ElementSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr int lowest() const { return std::countr_zero(bits_); }

  constexpr ElementSet with(int e) const { return ElementSet(bits_ | (std::uint32_t{1} << e)); }
  constexpr ElementSet without(int e) const { return ElementSet(bits_ & ~(std::uint32_t{1} << e)); }

  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & b.bits_);
  }
  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(ElementSet a, ElementSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(ElementSet a, ElementSet b) { return a.bits_ != b.bits_; }
  friend constexpr bool operator<(ElementSet a, ElementSet b) { return a.bits_ < b.bits_; }

  // Iterates over set bits in ascending order.
  class Iterator {
   public:
    constexpr explicit Iterator(std::uint32_t bits) : bits_(bits) {}
    constexpr int operator*() const { return std::countr_zero(bits_); }
    constexpr Iterator& operator++() {
      bits_ &= bits_ - 1;
      return *this;
    }
    constexpr bool operator!=(const Iterator& o) const { return bits_ != o.bits_; }

   private:
    std::uint32_t bits_;
  };
  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (int e : *this) out.push_back(e);
    return out;
  }

  // "{0,2,5}"; "{}" for the empty set.
  std::string str() const {
    std::string out = "{";
    bool first = true;
    for (int e : *this) {
      if (!first) out += ",";
      out += std::to_string(e);
      first = false;
    }
    out += "}";
    return out;
  }

 private:
  std::uint32_t bits_ = 0;
};

}  // namespace matcrit

#endif  // MATCRIT_ELEMENT_SET_H_
