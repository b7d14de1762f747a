#pragma once

// Maximum sub-barcode matchings and the distances built on them.
//
// A sub-barcode matching from a to b injectively sends bars of a to bars of
// b of the same dimension whose intervals contain them. The greedy sweep
// below computes a maximum one in O(n log n): per dimension, process a-bars
// by (birth asc, death desc) and give each the best-fitting b-bar already
// born, i.e. the one with the smallest death >= the a-bar's death (largest
// birth among equal deaths). A bipartite augmenting-path search over the
// explicit containment graph serves as the independent oracle on small
// inputs.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "subbar/barcode.hpp"
#include "subbar/matching.hpp"

namespace subbar {

inline matching max_subbarcode_matching(const barcode& a, const barcode& b) {
  std::map<int, std::vector<const bar*>> a_dim, b_dim;
  for (const bar& x : a.bars()) a_dim[x.dim].push_back(&x);
  for (const bar& x : b.bars()) b_dim[x.dim].push_back(&x);

  std::vector<id_pair> pairs;
  for (auto& [dim, av] : a_dim) {
    auto bit = b_dim.find(dim);
    if (bit == b_dim.end()) continue;
    auto& bv = bit->second;
    std::sort(av.begin(), av.end(), [](const bar* x, const bar* y) {
      return std::tie(x->iv.birth, y->iv.death, x->id) < std::tie(y->iv.birth, x->iv.death, y->id);
    });
    std::sort(bv.begin(), bv.end(), [](const bar* x, const bar* y) {
      return std::tie(x->iv.birth, x->id) < std::tie(y->iv.birth, y->id);
    });
    // Pool of born b-bars keyed by (death, birth, id).
    std::set<std::tuple<value_t, value_t, bar_id>> pool;
    std::size_t next = 0;
    for (const bar* ab : av) {
      while (next < bv.size() && bv[next]->iv.birth <= ab->iv.birth) {
        pool.emplace(bv[next]->iv.death, bv[next]->iv.birth, bv[next]->id);
        ++next;
      }
      auto it = pool.lower_bound({ab->iv.death, -infinite_death, 0});
      if (it == pool.end()) continue;
      // Among bars sharing the smallest admissible death, take the largest birth.
      auto jt = pool.upper_bound({std::get<0>(*it), infinite_death, 0});
      --jt;
      pairs.emplace_back(ab->id, std::get<2>(*jt));
      pool.erase(jt);
    }
  }
  return matching(a, b, std::move(pairs));
}

// Independent maximum-matching oracle: explicit containment graph plus
// augmenting paths. Guarded to tiny instances so it stays an oracle.
inline matching brute_force_max_matching(const barcode& a, const barcode& b) {
  if (a.size() + b.size() > 20)
    throw std::invalid_argument("brute_force_max_matching: more than 20 bars in total");
  const auto& ab = a.bars();
  const auto& bb = b.bars();
  std::vector<std::vector<int>> adj(ab.size());
  for (std::size_t i = 0; i < ab.size(); ++i)
    for (std::size_t j = 0; j < bb.size(); ++j)
      if (ab[i].dim == bb[j].dim && contains(bb[j].iv, ab[i].iv))
        adj[i].push_back(static_cast<int>(j));

  std::vector<int> match_right(bb.size(), -1);
  std::vector<char> seen;
  auto augment = [&](auto&& self, int u) -> bool {
    for (int v : adj[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      if (match_right[v] < 0 || self(self, match_right[v])) {
        match_right[v] = u;
        return true;
      }
    }
    return false;
  };
  for (std::size_t u = 0; u < ab.size(); ++u) {
    seen.assign(bb.size(), 0);
    augment(augment, static_cast<int>(u));
  }
  std::vector<id_pair> pairs;
  for (std::size_t v = 0; v < bb.size(); ++v)
    if (match_right[v] >= 0) pairs.emplace_back(ab[match_right[v]].id, bb[v].id);
  return matching(a, b, std::move(pairs));
}

// a is a sub-barcode of b: some injective containment matching covers all of a.
inline bool is_subbarcode(const barcode& a, const barcode& b) {
  return max_subbarcode_matching(a, b).total_on_left();
}

// Shrink every bar symmetrically by delta, dropping bars that become empty.
// Ids survive, so shrunk bars stay traceable to their originals.
inline barcode shrink(const barcode& a, value_t delta) {
  if (!(delta >= 0))
    throw std::invalid_argument("shrink: delta must be non-negative");
  std::vector<bar> out;
  for (const bar& x : a.bars()) {
    value_t b = x.iv.birth + delta;
    value_t d = x.iv.has_infinite_death() ? infinite_death : x.iv.death - delta;
    if (b < d) out.push_back(bar{x.id, x.dim, interval(b, d)});
  }
  return barcode(std::move(out));
}

struct distance_result {
  value_t value;
  matching witness;  // realizes the value; empty when the distance is infinite
};

namespace detail {

// Distinct candidate shifts at which sub-barcode feasibility can flip:
// per-pair birth deficits, per-pair death excesses, half-lengths (a bar
// vanishes there), and zero.
inline std::vector<value_t> subbarcode_candidates(const barcode& a, const barcode& b) {
  std::vector<value_t> c = {0};
  for (const bar& x : a.bars()) {
    if (!x.iv.has_infinite_death()) c.push_back(x.iv.half_length());
    for (const bar& y : b.bars()) {
      if (y.dim != x.dim) continue;
      value_t db = y.iv.birth - x.iv.birth;
      if (db > 0) c.push_back(db);
      if (!x.iv.has_infinite_death() && !y.iv.has_infinite_death()) {
        value_t dd = x.iv.death - y.iv.death;
        if (dd > 0) c.push_back(dd);
      }
    }
  }
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

inline bool infinite_counts_fit(const barcode& a, const barcode& b) {
  std::map<int, long> need;
  for (const bar& x : a.bars())
    if (x.iv.has_infinite_death()) ++need[x.dim];
  for (const bar& y : b.bars())
    if (y.iv.has_infinite_death()) --need[y.dim];
  for (const auto& [dim, n] : need)
    if (n > 0) return false;
  return true;
}

}  // namespace detail

// Smallest shift delta with shrink(a, delta) a sub-barcode of b. Feasibility
// is monotone in delta, so the minimum over the candidate set is found by
// binary search. Infinite exactly when some dimension of a carries more
// infinite bars than the same dimension of b.
inline distance_result subbarcode_distance(const barcode& a, const barcode& b) {
  if (!detail::infinite_counts_fit(a, b))
    return distance_result{infinite_death, matching(a, b, {})};
  auto feasible = [&](value_t delta) { return is_subbarcode(shrink(a, delta), b); };
  std::vector<value_t> cands = detail::subbarcode_candidates(a, b);
  std::size_t lo = 0, hi = cands.size() - 1;
  if (!feasible(cands[hi])) {
    // Exceedingly rare rounding slack; step upward until feasible.
    value_t delta = cands[hi];
    do {
      delta = std::nextafter(delta, infinite_death);
    } while (!feasible(delta));
    return distance_result{delta, max_subbarcode_matching(shrink(a, delta), b)};
  }
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (feasible(cands[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  value_t delta = cands[lo];
  return distance_result{delta, max_subbarcode_matching(shrink(a, delta), b)};
}

namespace detail {

// Perfect matching in the diagonal-padded bipartite graph: bar-to-bar edges
// need sup-distance <= delta, bar-to-diagonal edges need half-length <=
// delta, diagonal-to-diagonal edges are free.
inline bool bottleneck_feasible_dim(const std::vector<const bar*>& av,
                                    const std::vector<const bar*>& bv, value_t delta,
                                    std::vector<id_pair>* out_pairs) {
  std::size_t na = av.size(), nb = bv.size();
  std::size_t nl = na + nb, nr = nb + na;  // left: a-bars then b-diagonals
  auto edge = [&](std::size_t u, std::size_t v) -> bool {
    bool u_real = u < na, v_real = v < nb;
    if (u_real && v_real) {
      const interval& x = av[u]->iv;
      const interval& y = bv[v]->iv;
      if (x.has_infinite_death() != y.has_infinite_death()) return false;
      value_t d = std::abs(x.birth - y.birth);
      if (!x.has_infinite_death()) d = std::max(d, std::abs(x.death - y.death));
      return d <= delta;
    }
    if (u_real && !v_real) return av[u]->iv.half_length() <= delta && v - nb == u;
    if (!u_real && v_real) return bv[v]->iv.half_length() <= delta && u - na == v;
    return true;  // both diagonal
  };
  std::vector<int> match_right(nr, -1);
  std::vector<char> seen;
  auto augment = [&](auto&& self, std::size_t u) -> bool {
    for (std::size_t v = 0; v < nr; ++v) {
      if (seen[v] || !edge(u, v)) continue;
      seen[v] = 1;
      if (match_right[v] < 0 || self(self, static_cast<std::size_t>(match_right[v]))) {
        match_right[v] = static_cast<int>(u);
        return true;
      }
    }
    return false;
  };
  std::size_t matched = 0;
  for (std::size_t u = 0; u < nl; ++u) {
    seen.assign(nr, 0);
    if (augment(augment, u)) ++matched;
  }
  if (matched != nl) return false;
  if (out_pairs) {
    for (std::size_t v = 0; v < nb; ++v)
      if (match_right[v] >= 0 && static_cast<std::size_t>(match_right[v]) < na) {
        const bar* x = av[match_right[v]];
        const bar* y = bv[v];
        // A pair of disjoint intervals is never needed: both ends fit the
        // diagonal at any delta admitting the pair.
        if (intersects(x->iv, y->iv)) out_pairs->emplace_back(x->id, y->id);
      }
  }
  return true;
}

}  // namespace detail

// Classical bottleneck distance with the diagonal: bars may match bars of
// the same dimension within sup-distance delta, or vanish into the diagonal
// at their half-length. Infinite bars match only infinite bars, so the
// distance is infinite when the per-dimension counts of infinite bars
// differ.
inline distance_result bottleneck_distance(const barcode& a, const barcode& b) {
  std::map<int, std::pair<long, long>> inf_counts;
  for (const bar& x : a.bars())
    if (x.iv.has_infinite_death()) ++inf_counts[x.dim].first;
  for (const bar& y : b.bars())
    if (y.iv.has_infinite_death()) ++inf_counts[y.dim].second;
  for (const auto& [dim, c] : inf_counts)
    if (c.first != c.second) return distance_result{infinite_death, matching(a, b, {})};

  std::map<int, std::vector<const bar*>> a_dim, b_dim;
  for (const bar& x : a.bars()) a_dim[x.dim].push_back(&x);
  for (const bar& y : b.bars()) b_dim[y.dim].push_back(&y);
  std::set<int> dims;
  for (const auto& [d, v] : a_dim) dims.insert(d);
  for (const auto& [d, v] : b_dim) dims.insert(d);

  std::vector<value_t> cands = {0};
  for (int d : dims) {
    for (const bar* x : a_dim[d]) {
      if (!x->iv.has_infinite_death()) cands.push_back(x->iv.half_length());
      for (const bar* y : b_dim[d]) {
        cands.push_back(std::abs(x->iv.birth - y->iv.birth));
        if (!x->iv.has_infinite_death() && !y->iv.has_infinite_death())
          cands.push_back(std::abs(x->iv.death - y->iv.death));
      }
    }
    for (const bar* y : b_dim[d])
      if (!y->iv.has_infinite_death()) cands.push_back(y->iv.half_length());
  }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

  auto feasible = [&](value_t delta, std::vector<id_pair>* out) -> bool {
    for (int d : dims)
      if (!detail::bottleneck_feasible_dim(a_dim[d], b_dim[d], delta, out)) return false;
    return true;
  };
  std::size_t lo = 0, hi = cands.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (feasible(cands[mid], nullptr))
      hi = mid;
    else
      lo = mid + 1;
  }
  std::vector<id_pair> pairs;
  feasible(cands[lo], &pairs);
  return distance_result{cands[lo], matching(a, b, std::move(pairs))};
}

}  // namespace subbar
