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

#ifndef MATCRIT_MATROID_H_
#define MATCRIT_MATROID_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matcrit/element_set.hpp"
#include "matcrit/rational.hpp"

namespace matcrit {

struct Minor;

// A matroid on ground set {0, ..., n-1}, represented by the explicit family
// of its bases. The basis family is the single source of truth: the rank of
// a subset A is max |A ∩ B| over all bases B, which is exact because every
// maximal independent subset of A extends to a basis.
//
// Values are immutable after construction and safe to share across threads.
class Matroid {
 public:
  static constexpr int kMaxElements = ElementSet::kMaxElements;

  // The empty matroid (no elements, rank 0).
  Matroid() : n_(0), rank_(0), bases_{0u} {}

  // Builds a matroid after running the basis-exchange validator; throws
  // std::invalid_argument on an empty family, mixed cardinalities, out of
  // range elements, or an exchange violation.
  static Matroid from_bases(int n, const std::vector<ElementSet>& bases);
  static Matroid from_basis_masks(int n, std::vector<std::uint32_t> bases);

  // Fast path for internal construction where validity follows from the
  // construction itself (minors, duals, catalog builders). Only shape checks
  // are performed; tests exercise the full validator on these outputs.
  static Matroid from_construction(int n, std::vector<std::uint32_t> bases);

  int num_elements() const { return n_; }
  int rank() const { return rank_; }
  ElementSet ground_set() const { return ElementSet::full(n_); }
  const std::vector<std::uint32_t>& basis_masks() const { return bases_; }
  std::vector<ElementSet> bases() const;
  bool is_basis(ElementSet b) const;

  // Rank oracle: max over bases B of |A ∩ B|.
  int rank(ElementSet a) const;
  bool is_independent(ElementSet a) const { return rank(a) == a.size(); }

  // {e : r(A ∪ e) = r(A)}.
  ElementSet closure(ElementSet a) const;

  ElementSet loops() const;    // elements in no basis
  ElementSet coloops() const;  // elements in every basis
  bool is_simple() const;

  // Minimal dependent sets. Requires n <= RankTable::kMaxTableElements.
  std::vector<ElementSet> circuits() const;
  // 3-element circuits; available for every representable size.
  std::vector<ElementSet> triangles() const;
  std::vector<ElementSet> triangles_containing(int e) const;
  bool is_circuit(ElementSet c) const;

  // Minors. The whole ground set may be deleted or contracted; the result is
  // then the empty matroid, which is a legal value so that the minor poset
  // is closed.
  Minor deleted(ElementSet d) const;
  Minor contracted(ElementSet c) const;

  // Removes loops and all but the lowest-indexed element of every parallel
  // class.
  Minor simplified() const;

  Matroid dual() const;

  // Turns a circuit-hyperplane into a basis; rejects sets that are not
  // simultaneously a circuit and a hyperplane.
  Matroid relaxed(ElementSet circuit_hyperplane) const;

  int epsilon() const;  // number of rank-one flats, |E(si(M))|
  Rational density() const;

  // True iff every pair of elements lies in a common circuit (matroids with
  // at most one element count as connected).
  bool is_connected() const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.rank_ == b.rank_ && a.bases_ == b.bases_;
  }

 private:
  Matroid(int n, int rank, std::vector<std::uint32_t> bases)
      : n_(n), rank_(rank), bases_(std::move(bases)) {}

  void check_subset(ElementSet a) const;

  int n_;
  int rank_;
  std::vector<std::uint32_t> bases_;  // sorted ascending, unique
};

// Result of taking a minor. Element indices of the minor are compacted to
// 0..n'-1; to_parent[i] is the index the i-th element had in the parent.
// Callers that need element identity across several steps compose the maps.
struct Minor {
  Matroid matroid;
  std::vector<int> to_parent;
};

// Explicit basis-exchange validator. Returns std::nullopt when the family is
// a valid basis family, otherwise a human-readable description of the first
// violation found. Invoked by from_bases, on file ingestion, and in tests.
std::optional<std::string> check_basis_exchange(int n, const std::vector<std::uint32_t>& bases);

// Replays a witness pair on m: deletes `del`, contracts `con` (disjoint sets,
// indices of m) and returns the resulting minor.
Matroid replay_minor(const Matroid& m, ElementSet del, ElementSet con);

}  // namespace matcrit

#endif  // MATCRIT_MATROID_H_
