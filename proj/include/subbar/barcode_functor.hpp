#pragma once

// Finite slice of the barcode functor: restrict a barcode to the bars whose
// interval contains a query interval, restrict matchings componentwise, and
// decide the sub-barcode relation through those components. The grid of all
// intervals spanned by the endpoint values of two barcodes is a faithful
// test surface: it contains every bar interval, and component behavior is
// constant between consecutive endpoints.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "subbar/barcode.hpp"
#include "subbar/matching.hpp"
#include "subbar/subbarcode.hpp"

namespace subbar {

struct interval_grid {
  std::vector<interval> intervals;  // sorted by (birth, death), distinct
};

// All non-empty intervals [s, t) and [s, inf) with s, t endpoint values of
// the two barcodes.
inline interval_grid generate_grid(const barcode& a, const barcode& b) {
  if (a.empty() && b.empty())
    throw std::invalid_argument("generate_grid: both barcodes are empty");
  std::vector<value_t> ends;
  for (const barcode* c : {&a, &b})
    for (const bar& x : c->bars()) {
      ends.push_back(x.iv.birth);
      if (!x.iv.has_infinite_death()) ends.push_back(x.iv.death);
    }
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  interval_grid grid;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    for (std::size_t j = i + 1; j < ends.size(); ++j)
      grid.intervals.emplace_back(ends[i], ends[j]);
    grid.intervals.emplace_back(ends[i], infinite_death);
  }
  std::sort(grid.intervals.begin(), grid.intervals.end(),
            [](const interval& x, const interval& y) {
              return std::tie(x.birth, x.death) < std::tie(y.birth, y.death);
            });
  return grid;
}

// The restriction of a barcode to an interval: ids of bars whose
// interval contains i, ascending.
inline std::vector<bar_id> restrict(const barcode& b, const interval& i) {
  std::vector<bar_id> out;
  for (const bar& x : b.bars())
    if (contains(x.iv, i)) out.push_back(x.id);
  return out;
}

// Pairs of m with both endpoints surviving restriction to i.
inline std::vector<id_pair> matching_component(const matching& m, const interval& i) {
  std::vector<id_pair> out;
  for (const auto& [l, r] : m.pairs())
    if (contains(m.left().at(l).iv, i) && contains(m.right().at(r).iv, i))
      out.emplace_back(l, r);
  return out;
}

// A barcode evaluated on every grid interval; restriction along inclusions
// of intervals is contravariant, which check_contravariance verifies
// explicitly.
class functor_slice {
 public:
  functor_slice(const barcode& b, interval_grid grid) : grid_(std::move(grid)) {
    sets_.reserve(grid_.intervals.size());
    for (const interval& i : grid_.intervals) {
      auto ids = restrict(b, i);
      sets_.emplace_back(ids.begin(), ids.end());
    }
  }

  const interval_grid& grid() const { return grid_; }

  const std::set<bar_id>& at(std::size_t grid_index) const { return sets_.at(grid_index); }

  bool check_contravariance() const {
    // For each inclusion intervals[i] into intervals[j], every bar alive
    // over the larger interval must stay alive over the smaller one.
    for (std::size_t i = 0; i < grid_.intervals.size(); ++i)
      for (std::size_t j = 0; j < grid_.intervals.size(); ++j) {
        if (!contains(grid_.intervals[j], grid_.intervals[i])) continue;
        for (bar_id id : sets_[j])
          if (!sets_[i].count(id)) return false;
      }
    return true;
  }

 private:
  interval_grid grid_;
  std::vector<std::set<bar_id>> sets_;
};

// a is a sub-barcode of b, decided through the grid components of the
// maximum containment matching: the matching must be total on a and its
// component at every grid interval must be total and injective on the
// restriction of a.
inline bool is_subbarcode_via_functor(const barcode& a, const barcode& b) {
  if (a.empty()) return true;
  interval_grid grid = generate_grid(a, b);
  matching m = max_subbarcode_matching(a, b);
  if (!m.total_on_left()) return false;
  for (const interval& i : grid.intervals) {
    auto comp = matching_component(m, i);
    if (comp.size() != restrict(a, i).size()) return false;
  }
  return true;
}

// Componentwise validity and naturality of an arbitrary family of
// matchings indexed by grid intervals. The family is given as a callback
// from a grid interval to its component pairs. Checks, for every grid
// interval: pairs lie inside the two restrictions, are injective, and
// cover the restriction of a; and for every grid inclusion I of J, the
// component at J equals the component at I restricted to bars alive on J,
// with targets alive on J.
inline bool is_natural_injection_family(
    const barcode& a, const barcode& b, const interval_grid& grid,
    const std::function<std::vector<id_pair>(const interval&)>& component) {
  std::vector<std::vector<id_pair>> comps;
  comps.reserve(grid.intervals.size());
  for (const interval& i : grid.intervals) {
    auto pairs = component(i);
    std::sort(pairs.begin(), pairs.end());
    auto alive_a = restrict(a, i);
    auto alive_b = restrict(b, i);
    std::set<bar_id> sa(alive_a.begin(), alive_a.end()), sb(alive_b.begin(), alive_b.end());
    std::set<bar_id> used_l, used_r;
    for (const auto& [l, r] : pairs) {
      if (!sa.count(l) || !sb.count(r)) return false;
      if (!used_l.insert(l).second || !used_r.insert(r).second) return false;
    }
    if (pairs.size() != sa.size()) return false;  // not total on the restriction
    comps.push_back(std::move(pairs));
  }
  for (std::size_t i = 0; i < grid.intervals.size(); ++i)
    for (std::size_t j = 0; j < grid.intervals.size(); ++j) {
      if (i == j || !contains(grid.intervals[j], grid.intervals[i])) continue;
      // intervals[i] is included in intervals[j] as a subset of the line.
      std::vector<id_pair> expect;
      for (const auto& [l, r] : comps[i])
        if (contains(a.at(l).iv, grid.intervals[j])) {
          if (!contains(b.at(r).iv, grid.intervals[j])) return false;
          expect.emplace_back(l, r);
        }
      if (expect != comps[j]) return false;
    }
  return true;
}

// Exhaustive search for a family of componentwise total injective natural
// matchings that glue to a single matching a -> b. Such a family exists
// exactly when some injective matching total on a sends every bar to a bar
// whose interval contains it, so candidates come from the restrictions and
// the search is a depth-first assignment. Intended for tiny inputs.
inline bool natural_family_exists(const barcode& a, const barcode& b) {
  std::vector<std::vector<bar_id>> cands;
  cands.reserve(a.size());
  for (const bar& x : a.bars()) {
    std::vector<bar_id> c;
    for (const bar& y : b.bars())
      if (y.dim == x.dim && contains(y.iv, x.iv)) c.push_back(y.id);
    cands.push_back(std::move(c));
  }
  std::set<bar_id> used;
  auto dfs = [&](auto&& self, std::size_t k) -> bool {
    if (k == cands.size()) return true;
    for (bar_id c : cands[k]) {
      if (used.count(c)) continue;
      used.insert(c);
      if (self(self, k + 1)) return true;
      used.erase(c);
    }
    return false;
  };
  return dfs(dfs, 0);
}

// Components commute with composition: the component of the composite at
// every grid interval equals the relational composition of the components.
inline bool components_commute(const matching& m, const matching& n, const interval_grid& grid) {
  matching nm = compose(m, n);
  for (const interval& i : grid.intervals) {
    std::vector<id_pair> lhs = matching_component(nm, i);
    std::vector<id_pair> rhs;
    std::map<bar_id, bar_id> mid_to_right;
    for (const auto& [mid, r] : matching_component(n, i)) mid_to_right[mid] = r;
    for (const auto& [l, mid] : matching_component(m, i)) {
      auto it = mid_to_right.find(mid);
      if (it != mid_to_right.end()) rhs.emplace_back(l, it->second);
    }
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs != rhs) return false;
  }
  return true;
}

// Functoriality check restricted to the composable kinds that guarantee
// it: both matchings sub-barcode matchings, or both overlap matchings.
// Mixed kinds are rejected; components_commute exercises those directly.
inline bool check_functoriality(const matching& m, const matching& n, const interval_grid& grid) {
  bool both_sub = is_subbarcode_matching(m) && is_subbarcode_matching(n);
  bool both_overlap = is_overlap_matching(m) && is_overlap_matching(n);
  if (!both_sub && !both_overlap)
    throw std::invalid_argument(
        "check_functoriality: matchings must both be sub-barcode or both be overlap matchings");
  return components_commute(m, n, grid);
}

}  // namespace subbar
