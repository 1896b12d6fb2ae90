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

#ifndef MATCRIT_CONSTRUCTIONS_H_
#define MATCRIT_CONSTRUCTIONS_H_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matcrit/matroid.hpp"

namespace matcrit {

// U_{m,n}: bases are all m-subsets of an n-set.
Matroid uniform(int rank, int size);

// Cycle matroid of a multigraph. Elements are the edges in the given order;
// a self-loop edge becomes a matroid loop, parallel edges become parallel
// elements. Bases are the spanning forests of maximum size.
struct GraphEdge {
  int u = 0;
  int v = 0;
};
Matroid graphic(int num_vertices, const std::vector<GraphEdge>& edges);

// Cycle matroid of the r-spoke wheel graph W_r (2r elements: spokes
// 0..r-1, rim r..2r-1), and the whirl obtained by relaxing the rim.
// Both require r >= 2.
Matroid wheel(int rank);
Matroid whirl(int rank);

// Parallel connection P(M1, M2) glued at p1 = p2 (both must be non-loops).
// Elements of M1 keep their indices, the identified point keeps index p1,
// and the remaining elements of M2 follow in ascending order. Circuits are
// the circuits of M1, those of M2, and the mixed sets
// (C1 - p1) u (C2 - p2) over circuits through the basepoints; bases are the
// maximal circuit-free sets, of size r1 + r2 - 1.
Matroid parallel_connection(const Matroid& m1, int p1, const Matroid& m2, int p2);

Matroid direct_sum(const Matroid& m1, const Matroid& m2);

// Rank-3 geometry from its dependent lines: bases are the 3-subsets not
// contained in any listed line. Lines must pairwise meet in at most one
// point and have at least three points each.
Matroid rank3_from_lines(int n, const std::vector<ElementSet>& lines);

Matroid fano();            // F_7, the seven-line rank-3 geometry
Matroid non_fano();        // F_7^- via relaxation of one line
Matroid o7();
Matroid p7();

// Chain of n triangles glued by parallel connections. The default plan is
// the path: each new triangle attaches at the lowest element added by the
// previous step. An explicit plan gives the basepoint of each of the n-1
// connections (an element index of the partial matroid at that step).
Matroid p_chain(int n);
Matroid p_chain(int n, const std::vector<int>& basepoints);
// The second choice of P_3: the third triangle re-uses the shared basepoint.
Matroid p3_alternate();

// A copy of M(K_4) attached by parallel connection at each element of a
// triangle: 18 elements, rank 8, density 9/4.
Matroid m18();

// A named catalog entry with its expected statistics. Builders throw on any
// internal inconsistency; catalog() additionally checks the expectations.
struct NamedMatroid {
  std::string name;
  std::function<Matroid()> build;
  int expected_rank = 0;
  int expected_size = 0;
  Rational expected_density;
};

// Every matroid named in the classification theorems, keyed by the stable
// CLI identifiers ("U_2_5", "F7", "F7-", "O7", "P7", "MK4", "MK5-e",
// "Mstar_K33", "P_U24_U24", "P_U24_MK4", "P_MK4_MK4", "P_chain_n2".."n6",
// "P3_alt", "M18", "wheel2".."wheel4", "whirl2".."whirl4", plus the small
// uniform matroids).
const std::vector<NamedMatroid>& catalog();

std::optional<Matroid> build_named(std::string_view name);

}  // namespace matcrit

#endif  // MATCRIT_CONSTRUCTIONS_H_
