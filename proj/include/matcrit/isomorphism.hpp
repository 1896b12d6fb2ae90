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

#ifndef MATCRIT_ISOMORPHISM_H_
#define MATCRIT_ISOMORPHISM_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "matcrit/matroid.hpp"

namespace matcrit {

// Isomorphism-invariant fingerprint. Equal fingerprints are necessary but
// not sufficient for isomorphism; the minor search uses them to bucket
// candidate states before exact checks.
struct MatroidInvariants {
  int n = 0;
  int rank = 0;
  int num_bases = 0;
  std::vector<int> circuit_histogram;  // [s] = number of circuits of size s
  // Multiset of element colors after pairwise refinement, as (hash, count).
  std::vector<std::pair<std::uint64_t, int>> color_classes;

  std::string key() const;

  friend bool operator==(const MatroidInvariants&, const MatroidInvariants&) = default;

  static MatroidInvariants of(const Matroid& m);
};

// Canonical form of a matroid: an invariant prefix (circuit-size histogram,
// element color classes) followed by the canonically relabelled basis list.
// Two matroids have equal certificates iff they are isomorphic, which makes
// certificates usable as memoization keys.
class IsoCertificate {
 public:
  IsoCertificate() = default;

  const std::string& bytes() const { return bytes_; }

  friend bool operator==(const IsoCertificate&, const IsoCertificate&) = default;
  friend bool operator<(const IsoCertificate& a, const IsoCertificate& b) {
    return a.bytes_ < b.bytes_;
  }

 private:
  explicit IsoCertificate(std::string bytes) : bytes_(std::move(bytes)) {}
  std::string bytes_;

  friend IsoCertificate certificate(const Matroid&);
};

IsoCertificate certificate(const Matroid& m);

// True iff some bijection of the ground sets maps the basis family of a onto
// the basis family of b. Backtracking matcher with per-element invariant
// pruning; falls back to certificate comparison if the search degenerates.
bool is_isomorphic(const Matroid& a, const Matroid& b);

}  // namespace matcrit

#endif  // MATCRIT_ISOMORPHISM_H_
