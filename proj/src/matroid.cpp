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

#include "matcrit/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "matcrit/rank_table.hpp"

namespace matcrit {
namespace {

// Remaps the bits of `mask` onto compacted indices after dropping `removed`:
// surviving elements keep their relative order.
std::uint32_t compact_bits(std::uint32_t mask, std::uint32_t removed) {
  std::uint32_t out = 0;
  int pos = 0;
  for (int e = 0; e < 32; ++e) {
    const std::uint32_t bit = std::uint32_t{1} << e;
    if (removed & bit) continue;
    if (mask & bit) out |= std::uint32_t{1} << pos;
    ++pos;
  }
  return out;
}

std::vector<int> survivor_map(int n, ElementSet removed) {
  std::vector<int> to_parent;
  for (int e = 0; e < n; ++e) {
    if (!removed.contains(e)) to_parent.push_back(e);
  }
  return to_parent;
}

void sort_unique(std::vector<std::uint32_t>& masks) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
}

}  // namespace

std::optional<std::string> check_basis_exchange(int n, const std::vector<std::uint32_t>& bases) {
  if (n < 0 || n > Matroid::kMaxElements) {
    return "element count out of range (0 <= n <= " + std::to_string(Matroid::kMaxElements) + ")";
  }
  if (bases.empty()) return "basis family is empty";
  const std::uint32_t ground = ElementSet::full(n).bits();
  const int r = std::popcount(bases.front());
  for (std::uint32_t b : bases) {
    if (b & ~ground) return "basis " + ElementSet(b).str() + " uses elements >= " + std::to_string(n);
    if (std::popcount(b) != r) {
      return "mixed basis cardinalities: " + ElementSet(bases.front()).str() + " vs " +
             ElementSet(b).str();
    }
  }
  std::vector<std::uint32_t> sorted = bases;
  sort_unique(sorted);
  const auto is_basis = [&sorted](std::uint32_t b) {
    return std::binary_search(sorted.begin(), sorted.end(), b);
  };
  // For all bases B1, B2 and x in B1 - B2 there must be y in B2 - B1 with
  // B1 - x + y again a basis.
  for (std::uint32_t b1 : sorted) {
    for (std::uint32_t b2 : sorted) {
      if (b1 == b2) continue;
      for (ElementSet diff1(b1 & ~b2); int x : diff1) {
        bool exchanged = false;
        const std::uint32_t without_x = b1 ^ (std::uint32_t{1} << x);
        for (ElementSet diff2(b2 & ~b1); int y : diff2) {
          if (is_basis(without_x | (std::uint32_t{1} << y))) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) {
          return "exchange fails for bases " + ElementSet(b1).str() + ", " + ElementSet(b2).str() +
                 " at element " + std::to_string(x);
        }
      }
    }
  }
  return std::nullopt;
}

Matroid Matroid::from_bases(int n, const std::vector<ElementSet>& bases) {
  std::vector<std::uint32_t> masks;
  masks.reserve(bases.size());
  for (ElementSet b : bases) masks.push_back(b.bits());
  return from_basis_masks(n, std::move(masks));
}

Matroid Matroid::from_basis_masks(int n, std::vector<std::uint32_t> bases) {
  if (auto problem = check_basis_exchange(n, bases)) {
    throw std::invalid_argument("invalid basis family: " + *problem);
  }
  sort_unique(bases);
  const int r = std::popcount(bases.front());
  return Matroid(n, r, std::move(bases));
}

Matroid Matroid::from_construction(int n, std::vector<std::uint32_t> bases) {
  if (n < 0 || n > kMaxElements) throw std::invalid_argument("matroid size cap exceeded");
  if (bases.empty()) throw std::invalid_argument("empty basis family");
  sort_unique(bases);
  const int r = std::popcount(bases.front());
  for (std::uint32_t b : bases) {
    if (std::popcount(b) != r || (b & ~ElementSet::full(n).bits())) {
      throw std::invalid_argument("malformed basis family");
    }
  }
  return Matroid(n, r, std::move(bases));
}

std::vector<ElementSet> Matroid::bases() const {
  std::vector<ElementSet> out;
  out.reserve(bases_.size());
  for (std::uint32_t b : bases_) out.emplace_back(b);
  return out;
}

bool Matroid::is_basis(ElementSet b) const {
  return std::binary_search(bases_.begin(), bases_.end(), b.bits());
}

void Matroid::check_subset(ElementSet a) const {
  if (a.bits() & ~ground_set().bits()) {
    throw std::invalid_argument("subset " + a.str() + " not within ground set of size " +
                                std::to_string(n_));
  }
}

int Matroid::rank(ElementSet a) const {
  check_subset(a);
  const int cap = std::min(rank_, a.size());
  int best = 0;
  for (std::uint32_t b : bases_) {
    best = std::max(best, std::popcount(a.bits() & b));
    if (best == cap) break;
  }
  return best;
}

ElementSet Matroid::closure(ElementSet a) const {
  const int r = rank(a);
  ElementSet out = a;
  for (int e = 0; e < n_; ++e) {
    if (!a.contains(e) && rank(a.with(e)) == r) out = out.with(e);
  }
  return out;
}

ElementSet Matroid::loops() const {
  std::uint32_t in_some = 0;
  for (std::uint32_t b : bases_) in_some |= b;
  return ElementSet(~in_some & ground_set().bits());
}

ElementSet Matroid::coloops() const {
  std::uint32_t in_all = ground_set().bits();
  for (std::uint32_t b : bases_) in_all &= b;
  return ElementSet(in_all);
}

bool Matroid::is_simple() const {
  if (!loops().empty()) return false;
  for (int e = 0; e < n_; ++e) {
    for (int f = e + 1; f < n_; ++f) {
      if (rank(ElementSet::of({e, f})) < 2) return false;
    }
  }
  return true;
}

std::vector<ElementSet> Matroid::circuits() const {
  const RankTable table(*this);
  std::vector<ElementSet> out;
  const std::uint32_t size = std::uint32_t{1} << n_;
  for (std::uint32_t s = 1; s < size; ++s) {
    if (table.independent(s)) continue;
    bool minimal = true;
    std::uint32_t rest = s;
    while (rest) {
      const std::uint32_t bit = rest & (0u - rest);
      if (!table.independent(s ^ bit)) {
        minimal = false;
        break;
      }
      rest ^= bit;
    }
    if (minimal) out.emplace_back(s);
  }
  return out;
}

std::vector<ElementSet> Matroid::triangles() const {
  std::vector<ElementSet> out;
  for (int e = 0; e < n_; ++e) {
    for (int f = e + 1; f < n_; ++f) {
      if (rank(ElementSet::of({e, f})) != 2) continue;
      for (int g = f + 1; g < n_; ++g) {
        const ElementSet t = ElementSet::of({e, f, g});
        if (rank(t.without(e)) != 2 || rank(t.without(f)) != 2) continue;
        if (rank(t) == 2) out.push_back(t);
      }
    }
  }
  return out;
}

std::vector<ElementSet> Matroid::triangles_containing(int e) const {
  std::vector<ElementSet> out;
  for (ElementSet t : triangles()) {
    if (t.contains(e)) out.push_back(t);
  }
  return out;
}

bool Matroid::is_circuit(ElementSet c) const {
  check_subset(c);
  if (c.empty()) return false;
  if (rank(c) != c.size() - 1) return false;
  for (int e : c) {
    if (rank(c.without(e)) != c.size() - 1) return false;
  }
  return true;
}

Minor Matroid::deleted(ElementSet d) const {
  check_subset(d);
  const ElementSet keep = ground_set() - d;
  const int new_rank = rank(keep);
  std::vector<std::uint32_t> masks;
  for (std::uint32_t b : bases_) {
    const std::uint32_t kept = b & keep.bits();
    if (std::popcount(kept) == new_rank) masks.push_back(compact_bits(kept, d.bits()));
  }
  sort_unique(masks);
  return Minor{Matroid(n_ - d.size(), new_rank, std::move(masks)), survivor_map(n_, d)};
}

Minor Matroid::contracted(ElementSet c) const {
  check_subset(c);
  // Greedy maximal independent subset of c; every basis that meets c in
  // rank(c) elements induces a basis of the contraction.
  const int rank_c = rank(c);
  std::vector<std::uint32_t> masks;
  for (std::uint32_t b : bases_) {
    if (std::popcount(b & c.bits()) == rank_c) {
      masks.push_back(compact_bits(b & ~c.bits(), c.bits()));
    }
  }
  sort_unique(masks);
  return Minor{Matroid(n_ - c.size(), rank_ - rank_c, std::move(masks)), survivor_map(n_, c)};
}

Minor Matroid::simplified() const {
  ElementSet removed = loops();
  std::uint32_t assigned = removed.bits();
  for (int e = 0; e < n_; ++e) {
    if (assigned & (std::uint32_t{1} << e)) continue;
    for (int f = e + 1; f < n_; ++f) {
      if (assigned & (std::uint32_t{1} << f)) continue;
      if (rank(ElementSet::of({e, f})) == 1) {
        removed = removed.with(f);
        assigned |= std::uint32_t{1} << f;
      }
    }
    assigned |= std::uint32_t{1} << e;
  }
  return deleted(removed);
}

Matroid Matroid::dual() const {
  const std::uint32_t ground = ground_set().bits();
  std::vector<std::uint32_t> masks;
  masks.reserve(bases_.size());
  for (std::uint32_t b : bases_) masks.push_back(~b & ground);
  sort_unique(masks);
  return Matroid(n_, n_ - rank_, std::move(masks));
}

Matroid Matroid::relaxed(ElementSet x) const {
  check_subset(x);
  if (!is_circuit(x)) {
    throw std::invalid_argument("relaxation: " + x.str() + " is not a circuit");
  }
  if (rank(x) != rank_ - 1 || closure(x) != x) {
    throw std::invalid_argument("relaxation: " + x.str() + " is not a hyperplane");
  }
  std::vector<std::uint32_t> masks = bases_;
  masks.push_back(x.bits());
  sort_unique(masks);
  return Matroid(n_, rank_, std::move(masks));
}

int Matroid::epsilon() const {
  if (rank_ == 0) return 0;
  int count = 0;
  std::uint32_t seen = loops().bits();
  for (int e = 0; e < n_; ++e) {
    if (seen & (std::uint32_t{1} << e)) continue;
    ++count;
    // Swallow the rest of e's parallel class.
    for (int f = e + 1; f < n_; ++f) {
      if (!(seen & (std::uint32_t{1} << f)) && rank(ElementSet::of({e, f})) == 1) {
        seen |= std::uint32_t{1} << f;
      }
    }
    seen |= std::uint32_t{1} << e;
  }
  return count;
}

Rational Matroid::density() const {
  if (rank_ == 0) return Rational(0);
  return Rational(epsilon(), rank_);
}

bool Matroid::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&parent](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = n_;
  for (ElementSet c : circuits()) {
    const int head = find(c.lowest());
    for (int e : c) {
      const int root = find(e);
      if (root != head) {
        parent[root] = head;
        --components;
      }
    }
    if (components == 1) return true;
  }
  return components == 1;
}

Matroid replay_minor(const Matroid& m, ElementSet del, ElementSet con) {
  if (del.intersects(con)) {
    throw std::invalid_argument("replay_minor: delete and contract sets overlap");
  }
  Minor after_contract = m.contracted(con);
  ElementSet remapped_del;
  for (int i = 0; i < after_contract.matroid.num_elements(); ++i) {
    if (del.contains(after_contract.to_parent[i])) remapped_del = remapped_del.with(i);
  }
  return after_contract.matroid.deleted(remapped_del).matroid;
}

}  // namespace matcrit
