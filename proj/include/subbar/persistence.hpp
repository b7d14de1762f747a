#pragma once

// Persistent homology over GF(2) by left-to-right column reduction, for a
// single sublevel filtration and for the image of one sublevel filtration
// in another (rows ordered by the upper filtration, columns by the lower).
// A slow rank-invariant computation over explicit cycle and boundary
// spaces serves as an independent ground truth for both.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "subbar/barcode.hpp"
#include "subbar/induced.hpp"
#include "subbar/interval.hpp"
#include "subbar/simplicial.hpp"

namespace subbar {
namespace detail {

// A GF(2) column as its sorted set of nonzero row indices.
using gf2_column = std::vector<std::uint32_t>;

inline gf2_column symmetric_difference(const gf2_column& x, const gf2_column& y) {
  gf2_column out;
  out.reserve(x.size() + y.size());
  std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

struct reduction_result {
  std::vector<gf2_column> reduced;
  std::unordered_map<std::uint32_t, std::size_t> pivot_owner;  // row -> column
};

// Standard reduction: eliminate each column's largest row index against
// the column that already owns it, left to right.
inline reduction_result reduce_columns(std::vector<gf2_column> cols) {
  reduction_result r;
  r.reduced.resize(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    gf2_column col = std::move(cols[j]);
    while (!col.empty()) {
      auto it = r.pivot_owner.find(col.back());
      if (it == r.pivot_owner.end()) break;
      col = symmetric_difference(col, r.reduced[it->second]);
    }
    if (!col.empty()) r.pivot_owner.emplace(col.back(), j);
    r.reduced[j] = std::move(col);
  }
  return r;
}

inline gf2_column boundary_rows(const simplex& s, const std::map<simplex, std::size_t>& index) {
  gf2_column rows;
  if (s.size() == 1) return rows;
  simplex face;
  face.reserve(s.size() - 1);
  for (std::size_t skip = 0; skip < s.size(); ++skip) {
    face.clear();
    for (std::size_t i = 0; i < s.size(); ++i)
      if (i != skip) face.push_back(s[i]);
    rows.push_back(std::uint32_t(index.at(face)));
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

// Deterministic dense ids: sort by (dim, birth, death) with infinite
// deaths last, then number in order.
inline barcode canonicalize(std::vector<std::pair<int, interval>> items) {
  std::sort(items.begin(), items.end(),
            [](const std::pair<int, interval>& x, const std::pair<int, interval>& y) {
              return std::tie(x.first, x.second.birth, x.second.death) <
                     std::tie(y.first, y.second.birth, y.second.death);
            });
  return barcode::from_intervals(std::move(items));
}

}  // namespace detail

// Barcode of a single filtration. A column reducing to zero marks a
// positive simplex; a pivot (row r, column c) pairs positive r with
// negative c into the bar [value(r), value(c)), dropped when empty;
// positive simplices never used as a pivot row give [value, inf).
inline barcode persistence(const filtration& f, int max_dim = -1) {
  const std::size_t n = f.size();
  std::vector<detail::gf2_column> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = detail::boundary_rows(f.entries[j].s, f.index);
  detail::reduction_result red = detail::reduce_columns(std::move(cols));

  std::vector<char> used_row(n, 0);
  std::vector<std::pair<int, interval>> items;
  for (const auto& [row, col] : red.pivot_owner) {
    used_row[row] = 1;
    const value_t b = f.entries[row].value;
    const value_t d = f.entries[col].value;
    const int dim = int(f.entries[row].s.size()) - 1;
    if (b < d && (max_dim < 0 || dim <= max_dim)) items.emplace_back(dim, interval(b, d));
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!red.reduced[j].empty() || used_row[j]) continue;
    const int dim = int(f.entries[j].s.size()) - 1;
    if (max_dim < 0 || dim <= max_dim)
      items.emplace_back(dim, interval(f.entries[j].value, infinite_death));
  }
  return detail::canonicalize(std::move(items));
}

inline barcode persistence(const simplicial_complex& k, const vertex_values& values,
                           int max_dim = -1, simplex_order order = simplex_order::lex) {
  return persistence(build_filtration(k, values, order), max_dim);
}

// Barcode of the image of the upper sublevel filtration inside the lower
// one, for upper >= lower pointwise. Rows are indexed by the upper
// filtration order, columns by the lower; a pivot (r, c) gives
// [upper(r), lower(c)) when non-empty, and upper-positive simplices never
// used as a pivot row give [upper(r), inf).
inline barcode image_persistence(const simplicial_complex& k, const vertex_values& upper,
                                 const vertex_values& lower, int max_dim = -1) {
  require_dominates(k, upper, lower);
  const filtration fg = build_filtration(k, upper);
  const filtration fl = build_filtration(k, lower);
  const std::size_t n = fg.size();

  std::vector<detail::gf2_column> gcols(n);
  for (std::size_t j = 0; j < n; ++j) gcols[j] = detail::boundary_rows(fg.entries[j].s, fg.index);
  detail::reduction_result red_g = detail::reduce_columns(std::move(gcols));

  std::vector<detail::gf2_column> icols(n);
  for (std::size_t j = 0; j < n; ++j) icols[j] = detail::boundary_rows(fl.entries[j].s, fg.index);
  detail::reduction_result red_i = detail::reduce_columns(std::move(icols));

  std::vector<char> used_row(n, 0);
  std::vector<std::pair<int, interval>> items;
  for (const auto& [row, col] : red_i.pivot_owner) {
    used_row[row] = 1;
    const value_t b = fg.entries[row].value;
    const value_t d = fl.entries[col].value;
    const int dim = int(fg.entries[row].s.size()) - 1;
    if (b < d && (max_dim < 0 || dim <= max_dim)) items.emplace_back(dim, interval(b, d));
  }
  for (std::size_t r = 0; r < n; ++r) {
    if (used_row[r] || !red_g.reduced[r].empty()) continue;
    const int dim = int(fg.entries[r].s.size()) - 1;
    if (max_dim < 0 || dim <= max_dim)
      items.emplace_back(dim, interval(fg.entries[r].value, infinite_death));
  }
  return detail::canonicalize(std::move(items));
}

// Ground-truth image barcode from ranks of H_k(G(t_i)) -> H_k(L(t_j)),
// computed as dim(Z_k(G(t_i)) + B_k(L(t_j))) - dim B_k(L(t_j)) over
// explicit GF(2) spans inside the chain group of the full complex. Bar
// multiplicities come from inclusion-exclusion over the value grid.
// Deliberately direct and O(grid^2 * complex^2); capped at 200 simplices.
inline barcode rank_invariant_oracle(const simplicial_complex& k, const vertex_values& upper,
                                     const vertex_values& lower, int max_dim = -1) {
  if (k.size() > 200)
    throw std::invalid_argument("rank_invariant_oracle: complex exceeds 200 simplices");
  require_dominates(k, upper, lower);
  const filtration fg = build_filtration(k, upper);
  const filtration fl = build_filtration(k, lower);

  std::vector<value_t> grid;
  grid.reserve(2 * k.size());
  for (const filtration_entry& e : fg.entries) grid.push_back(e.value);
  for (const filtration_entry& e : fl.entries) grid.push_back(e.value);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  const std::size_t m = grid.size();

  int kmax = k.max_dim();
  if (max_dim >= 0) kmax = std::min(kmax, max_dim);

  std::vector<std::pair<int, interval>> items;
  for (int dim = 0; dim <= kmax; ++dim) {
    // k-simplices indexed by their position in the upper filtration order;
    // (k-1)-simplices indexed by order of appearance.
    std::map<simplex, std::size_t> k_index, face_index;
    std::vector<value_t> k_values;  // upper values, ascending
    std::vector<const simplex*> k_simplices;
    for (const filtration_entry& e : fg.entries) {
      if (int(e.s.size()) - 1 != dim) continue;
      k_index.emplace(e.s, k_simplices.size());
      k_simplices.push_back(&e.s);
      k_values.push_back(e.value);
    }
    if (dim > 0)
      for (const filtration_entry& e : fg.entries)
        if (int(e.s.size()) - 1 == dim - 1) face_index.emplace(e.s, face_index.size());

    // Cycle space sweep in upper order: reduce boundary columns while
    // carrying the combination of k-simplices each column stands for; a
    // column that cancels to zero hands over its combination as a cycle.
    // Each cycle's largest k-index is its own column, so the cycle list is
    // already in echelon form.
    std::vector<detail::gf2_column> red_cols, combos;
    std::unordered_map<std::uint32_t, std::size_t> owner;
    std::vector<detail::gf2_column> cycles;       // ascending own-pivot order
    std::vector<value_t> cycle_values;            // ascending upper values
    for (std::size_t j = 0; j < k_simplices.size(); ++j) {
      detail::gf2_column col =
          dim == 0 ? detail::gf2_column{} : detail::boundary_rows(*k_simplices[j], face_index);
      detail::gf2_column combo{std::uint32_t(j)};
      while (!col.empty()) {
        auto it = owner.find(col.back());
        if (it == owner.end()) break;
        col = detail::symmetric_difference(col, red_cols[it->second]);
        combo = detail::symmetric_difference(combo, combos[it->second]);
      }
      if (col.empty()) {
        cycles.push_back(combo);
        cycle_values.push_back(k_values[j]);
      } else {
        owner.emplace(col.back(), red_cols.size());
      }
      red_cols.push_back(std::move(col));
      combos.push_back(std::move(combo));
    }

    // Boundary space sweep in lower order: independent boundary columns of
    // (k+1)-simplices with their lower values, ascending.
    std::vector<detail::gf2_column> bcols;
    std::vector<value_t> bvalues;
    {
      std::unordered_map<std::uint32_t, std::size_t> bowner;
      std::vector<detail::gf2_column> bred;
      for (const filtration_entry& e : fl.entries) {
        if (int(e.s.size()) - 1 != dim + 1) continue;
        detail::gf2_column col = detail::boundary_rows(e.s, k_index);
        while (!col.empty()) {
          auto it = bowner.find(col.back());
          if (it == bowner.end()) break;
          col = detail::symmetric_difference(col, bred[it->second]);
        }
        if (!col.empty()) {
          bowner.emplace(col.back(), bred.size());
          bcols.push_back(col);
          bvalues.push_back(e.value);
        }
        bred.push_back(std::move(col));
      }
    }

    // r[i][j] = rank of H_dim(G(t_i)) -> H_dim(L(t_j)), 1-based grid
    // indices, zero row and column for the empty stages.
    std::vector<std::vector<long long>> r(m + 1, std::vector<long long>(m + 1, 0));
    std::size_t zcount = 0;
    for (std::size_t i = 1; i <= m; ++i) {
      while (zcount < cycles.size() && cycle_values[zcount] <= grid[i - 1]) ++zcount;
      std::unordered_map<std::uint32_t, detail::gf2_column> ech;
      for (std::size_t c = 0; c < zcount; ++c) ech.emplace(cycles[c].back(), cycles[c]);
      long long span = (long long)zcount;
      std::size_t bt = 0;
      long long dim_b = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        while (bt < bcols.size() && bvalues[bt] <= grid[j - 1]) {
          detail::gf2_column col = bcols[bt];
          while (!col.empty()) {
            auto it = ech.find(col.back());
            if (it == ech.end()) break;
            col = detail::symmetric_difference(col, it->second);
          }
          if (!col.empty()) {
            std::uint32_t p = col.back();
            ech.emplace(p, std::move(col));
            ++span;
          }
          ++dim_b;
          ++bt;
        }
        r[i][j] = span - dim_b;
      }
    }

    for (std::size_t i = 1; i <= m; ++i) {
      for (std::size_t j = i + 1; j <= m; ++j) {
        long long mult = r[i][j - 1] - r[i - 1][j - 1] - r[i][j] + r[i - 1][j];
        if (mult < 0) throw std::logic_error("rank_invariant_oracle: negative multiplicity");
        for (long long c = 0; c < mult; ++c)
          items.emplace_back(dim, interval(grid[i - 1], grid[j - 1]));
      }
      long long mult = r[i][m] - r[i - 1][m];
      if (mult < 0) throw std::logic_error("rank_invariant_oracle: negative multiplicity");
      for (long long c = 0; c < mult; ++c)
        items.emplace_back(dim, interval(grid[i - 1], infinite_death));
    }
  }
  return detail::canonicalize(std::move(items));
}

// GF(2) Betti numbers of the whole complex: beta_k = #k-simplices
// - rank(boundary_k) - rank(boundary_{k+1}).
inline std::vector<std::size_t> betti_numbers(const simplicial_complex& k) {
  const int kd = k.max_dim();
  if (kd < 0) return {};
  std::vector<std::map<simplex, std::size_t>> index(kd + 1);
  for (const simplex& s : k.simplices()) {
    auto& m = index[s.size() - 1];
    m.emplace(s, m.size());
  }
  std::vector<std::size_t> rank(kd + 2, 0);
  for (int d = 1; d <= kd; ++d) {
    std::vector<detail::gf2_column> cols;
    cols.reserve(index[d].size());
    for (const auto& [s, i] : index[d]) cols.push_back(detail::boundary_rows(s, index[d - 1]));
    rank[d] = detail::reduce_columns(std::move(cols)).pivot_owner.size();
  }
  std::vector<std::size_t> beta(kd + 1);
  for (int d = 0; d <= kd; ++d) beta[d] = index[d].size() - rank[d] - rank[d + 1];
  return beta;
}

// The four barcodes of a three-level tower upper >= middle >= lower: the
// middle filtration's own barcode and the three image barcodes between
// the levels.
inline factorization_barcodes factorization_bundle(const simplicial_complex& k,
                                                   const vertex_values& upper_values,
                                                   const vertex_values& middle_values,
                                                   const vertex_values& lower_values,
                                                   int max_dim = -1) {
  require_dominates(k, upper_values, middle_values);
  require_dominates(k, middle_values, lower_values);
  return factorization_barcodes{
      persistence(k, middle_values, max_dim),
      image_persistence(k, upper_values, middle_values, max_dim),
      image_persistence(k, middle_values, lower_values, max_dim),
      image_persistence(k, upper_values, lower_values, max_dim),
  };
}

}  // namespace subbar
