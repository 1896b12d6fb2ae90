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

#include "matcrit/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>

namespace matcrit {
namespace {

std::uint64_t hash_string(const std::string& s) {
  // FNV-1a; stable across runs, unlike std::hash.
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Per-matroid structure shared by the matcher and the canonical search:
// circuit-derived element/pair statistics and a stable color refinement.
// Color ids are assigned by sorting signature strings, so corresponding
// elements of isomorphic matroids receive identical colors.
struct IsoContext {
  int n = 0;
  std::vector<std::uint32_t> bases;
  std::vector<int> circuit_histogram;
  std::vector<int> colors;                   // per element, dense ids
  std::vector<std::string> color_keys;       // per color id, signature string
  std::vector<std::array<int, 3>> pair_counts;  // [e * n + f]: circuits of size 2,3,4 through {e,f}
  std::vector<int> column_ids;               // elements with equal columns are interchangeable

  explicit IsoContext(const Matroid& m);

  const std::array<int, 3>& pairs(int e, int f) const { return pair_counts[e * n + f]; }
};

IsoContext::IsoContext(const Matroid& m) : n(m.num_elements()), bases(m.basis_masks()) {
  circuit_histogram.assign(n + 1, 0);
  std::vector<std::vector<int>> by_size_per_element(n);
  pair_counts.assign(static_cast<std::size_t>(n) * std::max(n, 1), {0, 0, 0});
  for (auto& v : by_size_per_element) v.assign(n + 1, 0);
  for (ElementSet c : m.circuits()) {
    const int size = c.size();
    ++circuit_histogram[size];
    for (int e : c) {
      ++by_size_per_element[e][size];
      if (size >= 2 && size <= 4) {
        for (int f : c) {
          if (f != e) ++pair_counts[e * n + f][size - 2];
        }
      }
    }
  }
  std::vector<int> degree(n, 0);
  for (std::uint32_t b : bases) {
    for (ElementSet s(b); int e : s) ++degree[e];
  }

  // Initial signatures: basis degree plus the per-element circuit profile.
  std::vector<std::string> sig(n);
  for (int e = 0; e < n; ++e) {
    sig[e] = "d" + std::to_string(degree[e]);
    for (int s = 1; s <= n; ++s) {
      if (by_size_per_element[e][s]) {
        sig[e] += ";" + std::to_string(s) + ":" + std::to_string(by_size_per_element[e][s]);
      }
    }
  }
  const auto assign_colors = [&]() {
    std::map<std::string, int> ids;
    for (int e = 0; e < n; ++e) ids.emplace(sig[e], 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    colors.assign(n, 0);
    for (int e = 0; e < n; ++e) colors[e] = ids.at(sig[e]);
    color_keys.assign(next, "");
    for (int e = 0; e < n; ++e) color_keys[colors[e]] = sig[e];
    return next;
  };
  int num_colors = assign_colors();

  // Refine by pairwise circuit counts until stable.
  while (num_colors < n) {
    std::vector<std::string> next(n);
    for (int e = 0; e < n; ++e) {
      std::vector<std::array<int, 4>> row;
      row.reserve(n - 1);
      for (int f = 0; f < n; ++f) {
        if (f == e) continue;
        const auto& pc = pairs(e, f);
        row.push_back({colors[f], pc[0], pc[1], pc[2]});
      }
      std::sort(row.begin(), row.end());
      next[e] = std::to_string(colors[e]);
      for (const auto& r : row) {
        next[e] += "|" + std::to_string(r[0]) + "," + std::to_string(r[1]) + "," +
                   std::to_string(r[2]) + "," + std::to_string(r[3]);
      }
    }
    sig = std::move(next);
    const int refined = assign_colors();
    if (refined == num_colors) break;
    num_colors = refined;
  }

  // Elements whose basis-membership columns are identical (loops, coloops,
  // clones) can be assigned in any order; the searches try only one of them
  // per branch point.
  column_ids.assign(n, 0);
  std::vector<std::vector<std::uint32_t>> columns(n);
  for (int e = 0; e < n; ++e) {
    auto& col = columns[e];
    col.reserve(bases.size() / 16 + 1);
    std::uint32_t word = 0;
    int filled = 0;
    for (std::uint32_t b : bases) {
      word = (word << 1) | ((b >> e) & 1u);
      if (++filled == 32) {
        col.push_back(word);
        word = 0;
        filled = 0;
      }
    }
    if (filled) col.push_back(word << (32 - filled));
  }
  std::map<std::vector<std::uint32_t>, int> column_map;
  for (int e = 0; e < n; ++e) {
    auto [it, inserted] = column_map.emplace(columns[e], static_cast<int>(column_map.size()));
    column_ids[e] = it->second;
  }
}

// ---------------------------------------------------------------------------
// Canonical form.
//
// The canonical basis list is the minimum, over all relabellings compatible
// with the color classes, of the basis family written as sorted index tuples
// and compared layer by layer: after placing element t, every run of bases
// with equal membership pattern on 0..t splits into (closed by t, continuing
// with t, without t), and runs that close or contain t sort first. The layer
// descriptors are compared lexicographically, which makes prefix pruning
// sound; the fully refined order at depth n is the canonical list itself.
// ---------------------------------------------------------------------------
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const IsoContext& ctx) : ctx_(ctx), n_(ctx.n), nb_(ctx.bases.size()) {
    // Class schedule: color classes in signature order, members contiguous.
    std::vector<std::vector<int>> members(ctx_.color_keys.size());
    for (int e = 0; e < n_; ++e) members[ctx_.colors[e]].push_back(e);
    std::vector<int> order(ctx_.color_keys.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return ctx_.color_keys[a] < ctx_.color_keys[b]; });
    for (int color : order) {
      for (int e : members[color]) class_of_depth_.push_back(color);
    }
    class_members_ = std::move(members);

    order_.assign(n_ + 1, std::vector<int>(nb_));
    bounds_.assign(n_ + 1, {});
    layers_.assign(n_, {});
    for (int i = 0; i < nb_; ++i) order_[0][i] = i;
    bounds_[0] = {0, nb_};
    used_.assign(n_, 0);
    assigned_old_.assign(n_, -1);
  }

  std::vector<std::uint32_t> run() {
    recurse(0, /*already_less=*/true, /*assigned_mask=*/0);
    return best_masks_;
  }

 private:
  enum Cmp { kLess, kEqual, kGreater };

  static Cmp compare_layers(const std::vector<int>& a, const std::vector<int>& b) {
    // Larger entries sort earlier in the final tuple order.
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? kLess : kGreater;
    }
    return kEqual;
  }

  // Returns true when the best leaf was replaced somewhere in this subtree.
  bool recurse(int depth, bool already_less, std::uint32_t assigned_mask) {
    if (depth == n_) {
      if (!have_best_ || already_less) {
        best_layers_ = layers_;
        record_best_masks();
        have_best_ = true;
        return true;
      }
      return false;
    }
    bool replaced_any = false;
    std::vector<int> tried_columns;
    for (int e : class_members_[class_of_depth_[depth]]) {
      if (used_[e]) continue;
      if (std::find(tried_columns.begin(), tried_columns.end(), ctx_.column_ids[e]) !=
          tried_columns.end()) {
        continue;
      }
      tried_columns.push_back(ctx_.column_ids[e]);

      const std::uint32_t mask_with_e = assigned_mask | (std::uint32_t{1} << e);
      split(depth, e, mask_with_e);
      bool child_less = already_less;
      if (!child_less) {
        const Cmp c = compare_layers(layers_[depth], best_layers_[depth]);
        if (c == kGreater) continue;
        child_less = (c == kLess);
      }
      used_[e] = 1;
      assigned_old_[depth] = e;
      if (recurse(depth + 1, child_less, mask_with_e)) {
        replaced_any = true;
        already_less = false;  // current prefix now coincides with the best
      }
      used_[e] = 0;
    }
    return replaced_any;
  }

  // Splits every run of order_[depth] by membership of `e`, writing
  // order_[depth + 1], bounds_[depth + 1] and the layer descriptor.
  void split(int depth, int e, std::uint32_t mask_with_e) {
    const auto& cur = order_[depth];
    const auto& cuts = bounds_[depth];
    auto& next = order_[depth + 1];
    auto& next_cuts = bounds_[depth + 1];
    auto& layer = layers_[depth];
    next_cuts.clear();
    layer.clear();
    const std::uint32_t ebit = std::uint32_t{1} << e;
    int out = 0;
    for (std::size_t g = 0; g + 1 < cuts.size(); ++g) {
      const int begin = cuts[g], end = cuts[g + 1];
      int n_closing = 0, n_with = 0, n_without = 0;
      for (int i = begin; i < end; ++i) {
        const std::uint32_t b = ctx_.bases[cur[i]];
        if (!(b & ebit)) {
          ++n_without;
        } else if (b & ~mask_with_e) {
          ++n_with;
        } else {
          ++n_closing;
        }
      }
      layer.push_back(n_closing);
      layer.push_back(n_with);
      int at_closing = out, at_with = out + n_closing, at_without = out + n_closing + n_with;
      for (int i = begin; i < end; ++i) {
        const int idx = cur[i];
        const std::uint32_t b = ctx_.bases[idx];
        if (!(b & ebit)) {
          next[at_without++] = idx;
        } else if (b & ~mask_with_e) {
          next[at_with++] = idx;
        } else {
          next[at_closing++] = idx;
        }
      }
      next_cuts.push_back(out);
      if (n_closing && (n_with || n_without)) next_cuts.push_back(out + n_closing);
      if (n_with && n_without) next_cuts.push_back(out + n_closing + n_with);
      out = at_without;
    }
    next_cuts.push_back(out);
  }

  void record_best_masks() {
    std::vector<int> new_of_old(n_, 0);
    for (int d = 0; d < n_; ++d) new_of_old[assigned_old_[d]] = d;
    best_masks_.assign(nb_, 0);
    for (int i = 0; i < nb_; ++i) {
      std::uint32_t out = 0;
      for (ElementSet s(ctx_.bases[order_[n_][i]]); int e : s) {
        out |= std::uint32_t{1} << new_of_old[e];
      }
      best_masks_[i] = out;
    }
  }

  const IsoContext& ctx_;
  const int n_;
  const int nb_;
  std::vector<int> class_of_depth_;
  std::vector<std::vector<int>> class_members_;
  std::vector<std::vector<int>> order_;
  std::vector<std::vector<int>> bounds_;
  std::vector<std::vector<int>> layers_;
  std::vector<std::uint8_t> used_;
  std::vector<int> assigned_old_;
  bool have_best_ = false;
  std::vector<std::vector<int>> best_layers_;
  std::vector<std::uint32_t> best_masks_;
};

// Backtracking matcher. Tries to extend a color- and pair-count-consistent
// partial bijection; verifies the full basis family at the leaves.
class Matcher {
 public:
  Matcher(const IsoContext& a, const IsoContext& b) : a_(a), b_(b), n_(a.n) {
    sigma_.assign(n_, -1);
    used_.assign(n_, 0);
    sorted_b_ = b_.bases;
    std::sort(sorted_b_.begin(), sorted_b_.end());
    // Most constrained classes first.
    std::vector<int> class_size(a_.color_keys.size(), 0);
    for (int e = 0; e < n_; ++e) ++class_size[a_.colors[e]];
    order_.resize(n_);
    for (int e = 0; e < n_; ++e) order_[e] = e;
    std::sort(order_.begin(), order_.end(), [&](int x, int y) {
      const int cx = a_.colors[x], cy = a_.colors[y];
      if (class_size[cx] != class_size[cy]) return class_size[cx] < class_size[cy];
      if (cx != cy) return cx < cy;
      return x < y;
    });
  }

  // Node budget, to bound degenerate searches; std::nullopt when exhausted.
  std::optional<bool> find(std::uint64_t budget) {
    budget_ = budget;
    exhausted_ = false;
    const bool found = extend(0);
    if (exhausted_ && !found) return std::nullopt;
    return found;
  }

 private:
  bool extend(int pos) {
    if (pos == n_) return verify();
    if (budget_-- == 0) {
      exhausted_ = true;
      return false;
    }
    const int e = order_[pos];
    std::vector<int> tried_columns;
    for (int f = 0; f < n_; ++f) {
      if (used_[f] || b_.colors[f] != a_.colors[e]) continue;
      if (std::find(tried_columns.begin(), tried_columns.end(), b_.column_ids[f]) !=
          tried_columns.end()) {
        continue;
      }
      bool ok = true;
      for (int q = 0; q < pos; ++q) {
        const int e2 = order_[q];
        if (a_.pairs(e, e2) != b_.pairs(f, sigma_[e2])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      tried_columns.push_back(b_.column_ids[f]);
      sigma_[e] = f;
      used_[f] = 1;
      if (extend(pos + 1)) return true;
      used_[f] = 0;
      sigma_[e] = -1;
      if (exhausted_) return false;
    }
    return false;
  }

  bool verify() const {
    std::vector<std::uint32_t> mapped;
    mapped.reserve(a_.bases.size());
    for (std::uint32_t b : a_.bases) {
      std::uint32_t out = 0;
      for (ElementSet s(b); int e : s) out |= std::uint32_t{1} << sigma_[e];
      mapped.push_back(out);
    }
    std::sort(mapped.begin(), mapped.end());
    return mapped == sorted_b_;
  }

  const IsoContext& a_;
  const IsoContext& b_;
  const int n_;
  std::vector<int> order_;
  std::vector<int> sigma_;
  std::vector<std::uint8_t> used_;
  std::vector<std::uint32_t> sorted_b_;
  std::uint64_t budget_ = 0;
  bool exhausted_ = false;
};

MatroidInvariants invariants_from_context(const Matroid& m, const IsoContext& ctx) {
  MatroidInvariants inv;
  inv.n = m.num_elements();
  inv.rank = m.rank();
  inv.num_bases = static_cast<int>(m.basis_masks().size());
  inv.circuit_histogram = ctx.circuit_histogram;
  std::map<std::uint64_t, int> classes;
  for (int c = 0; c < static_cast<int>(ctx.color_keys.size()); ++c) {
    int count = 0;
    for (int e = 0; e < ctx.n; ++e) count += ctx.colors[e] == c;
    classes[hash_string(ctx.color_keys[c])] += count;
  }
  inv.color_classes.assign(classes.begin(), classes.end());
  return inv;
}

std::string certificate_bytes(const Matroid& m, const IsoContext& ctx) {
  std::string out = invariants_from_context(m, ctx).key();
  out += "#";
  for (std::uint32_t mask : CanonicalSearch(ctx).run()) {
    out += std::to_string(mask) + ",";
  }
  return out;
}

}  // namespace

std::string MatroidInvariants::key() const {
  std::string out = std::to_string(n) + "." + std::to_string(rank) + "." + std::to_string(num_bases);
  out += "|c";
  for (std::size_t s = 0; s < circuit_histogram.size(); ++s) {
    if (circuit_histogram[s]) {
      out += std::to_string(s) + ":" + std::to_string(circuit_histogram[s]) + ";";
    }
  }
  out += "|e";
  for (const auto& [hash, count] : color_classes) {
    out += std::to_string(hash) + "x" + std::to_string(count) + ";";
  }
  return out;
}

MatroidInvariants MatroidInvariants::of(const Matroid& m) {
  return invariants_from_context(m, IsoContext(m));
}

IsoCertificate certificate(const Matroid& m) {
  return IsoCertificate(certificate_bytes(m, IsoContext(m)));
}

bool is_isomorphic(const Matroid& a, const Matroid& b) {
  if (a.num_elements() != b.num_elements() || a.rank() != b.rank() ||
      a.basis_masks().size() != b.basis_masks().size()) {
    return false;
  }
  const IsoContext ca(a);
  const IsoContext cb(b);
  if (invariants_from_context(a, ca) != invariants_from_context(b, cb)) return false;
  if (a.num_elements() == 0) return true;
  const auto result = Matcher(ca, cb).find(/*budget=*/std::uint64_t{1} << 22);
  if (result.has_value()) return *result;
  // Degenerate search; decide via canonical forms instead.
  return certificate_bytes(a, ca) == certificate_bytes(b, cb);
}

}  // namespace matcrit
