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

#include "matcrit/rank_table.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "matcrit/matroid.hpp"

namespace matcrit {

RankTable::RankTable(const Matroid& m) : n_(m.num_elements()), full_rank_(m.rank()) {
  if (n_ > kMaxTableElements) {
    throw std::invalid_argument("RankTable: size cap exceeded (n = " + std::to_string(n_) +
                                " > " + std::to_string(kMaxTableElements) + ")");
  }
  const std::size_t size = std::size_t{1} << n_;
  std::vector<std::uint8_t> indep(size, 0);
  for (std::uint32_t b : m.basis_masks()) indep[b] = 1;
  // Downward closure: S independent iff S is contained in some basis.
  for (int i = 0; i < n_; ++i) {
    const std::uint32_t bit = std::uint32_t{1} << i;
    for (std::uint32_t s = 0; s < size; ++s) {
      if (!(s & bit)) indep[s] |= indep[s | bit];
    }
  }
  rank_.assign(size, 0);
  for (std::uint32_t s = 1; s < size; ++s) {
    if (indep[s]) {
      rank_[s] = static_cast<std::uint8_t>(std::popcount(s));
    } else {
      std::uint8_t best = 0;
      std::uint32_t rest = s;
      while (rest) {
        const std::uint32_t bit = rest & (0u - rest);
        best = std::max(best, rank_[s ^ bit]);
        rest ^= bit;
      }
      rank_[s] = best;
    }
  }
}

std::uint32_t RankTable::closure(std::uint32_t subset) const {
  const int r = rank_[subset];
  std::uint32_t out = subset;
  for (int e = 0; e < n_; ++e) {
    const std::uint32_t bit = std::uint32_t{1} << e;
    if (!(subset & bit) && rank_[subset | bit] == r) out |= bit;
  }
  return out;
}

std::vector<std::uint32_t> RankTable::flats(int min_rank, int max_rank) const {
  max_rank = std::min(max_rank, full_rank_);
  std::vector<std::vector<std::uint32_t>> by_rank(full_rank_ + 1);
  by_rank[0].push_back(closure(0));
  for (int r = 0; r < max_rank; ++r) {
    for (std::uint32_t f : by_rank[r]) {
      for (int e = 0; e < n_; ++e) {
        if (f & (std::uint32_t{1} << e)) continue;
        const std::uint32_t g = closure(f | (std::uint32_t{1} << e));
        auto& level = by_rank[rank_[g]];
        if (std::find(level.begin(), level.end(), g) == level.end()) level.push_back(g);
      }
    }
  }
  std::vector<std::uint32_t> out;
  for (int r = std::max(0, min_rank); r <= max_rank; ++r) {
    std::sort(by_rank[r].begin(), by_rank[r].end());
    out.insert(out.end(), by_rank[r].begin(), by_rank[r].end());
  }
  return out;
}

}  // namespace matcrit
