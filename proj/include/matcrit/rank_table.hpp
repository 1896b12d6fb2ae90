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

#ifndef MATCRIT_RANK_TABLE_H_
#define MATCRIT_RANK_TABLE_H_

#include <cstdint>
#include <vector>

#include "matcrit/element_set.hpp"

namespace matcrit {

class Matroid;

// Rank of every subset of the ground set, tabulated in O(n * 2^n).
//
// Built in two passes: the independence indicator is the downward closure of
// the basis family (a set is independent iff it lies inside some basis), and
// ranks follow by the recurrence r(S) = |S| for independent S, else
// max over e in S of r(S - e). Desk-scale only; construction throws when
// n exceeds kMaxTableElements.
class RankTable {
 public:
  static constexpr int kMaxTableElements = 20;

  explicit RankTable(const Matroid& m);

  int n() const { return n_; }
  int rank(std::uint32_t subset) const { return rank_[subset]; }
  int rank(ElementSet s) const { return rank_[s.bits()]; }
  bool independent(std::uint32_t subset) const {
    return rank_[subset] == std::popcount(subset);
  }
  bool independent(ElementSet s) const { return independent(s.bits()); }

  std::uint32_t closure(std::uint32_t subset) const;

  // All flats (closed sets) of ranks min_rank..max_rank, ascending by rank
  // then by mask. Includes the closure of the empty set when min_rank is 0.
  std::vector<std::uint32_t> flats(int min_rank, int max_rank) const;

 private:
  int n_;
  int full_rank_;
  std::vector<std::uint8_t> rank_;
};

}  // namespace matcrit

#endif  // MATCRIT_RANK_TABLE_H_
