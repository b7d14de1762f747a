#pragma once

// Matchings between barcodes: partial injective maps from bars of a left
// barcode to bars of a right barcode. Every matched pair must join bars of
// equal dimension whose intervals intersect. Composition is relational
// composition followed by discarding pairs whose outer intervals no longer
// intersect; reversal transposes the pairs.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "subbar/barcode.hpp"
#include "subbar/interval.hpp"

namespace subbar {

using id_pair = std::pair<bar_id, bar_id>;

class matching {
 public:
  matching(barcode left, barcode right, std::vector<id_pair> pairs)
      : left_(std::move(left)), right_(std::move(right)), pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end());
    std::unordered_set<bar_id> used_right;
    used_right.reserve(pairs_.size());
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      const auto& [l, r] = pairs_[k];
      if (k > 0 && pairs_[k - 1].first == l)
        throw std::invalid_argument("matching: left bar " + std::to_string(l) + " matched twice");
      if (!used_right.insert(r).second)
        throw std::invalid_argument("matching: right bar " + std::to_string(r) + " matched twice");
      const bar* lb = left_.find(l);
      const bar* rb = right_.find(r);
      if (!lb || !rb)
        throw std::invalid_argument("matching: pair references a missing bar id");
      if (lb->dim != rb->dim)
        throw std::invalid_argument("matching: bars of unequal dimension matched");
      if (!intersects(lb->iv, rb->iv))
        throw std::invalid_argument("matching: matched intervals do not intersect");
    }
  }

  static matching identity(const barcode& b) {
    std::vector<id_pair> pairs;
    pairs.reserve(b.size());
    for (const bar& x : b.bars()) pairs.emplace_back(x.id, x.id);
    return matching(b, b, std::move(pairs));
  }

  const barcode& left() const { return left_; }
  const barcode& right() const { return right_; }
  const std::vector<id_pair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }

  std::optional<bar_id> image_of(bar_id left_id) const {
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), id_pair{left_id, 0},
                               [](const id_pair& a, const id_pair& b) { return a.first < b.first; });
    if (it != pairs_.end() && it->first == left_id) return it->second;
    return std::nullopt;
  }

  bool total_on_left() const { return pairs_.size() == left_.size(); }
  bool total_on_right() const { return pairs_.size() == right_.size(); }

  // Left bar ids not matched by any pair, ascending.
  std::vector<bar_id> unmatched_left() const {
    std::vector<bar_id> out;
    for (const bar& x : left_.bars())
      if (!image_of(x.id)) out.push_back(x.id);
    return out;
  }

  friend bool operator==(const matching& a, const matching& b) {
    return a.left_ == b.left_ && a.right_ == b.right_ && a.pairs_ == b.pairs_;
  }
  friend bool operator!=(const matching& a, const matching& b) { return !(a == b); }

 private:
  barcode left_;
  barcode right_;
  std::vector<id_pair> pairs_;  // sorted by left id
};

inline matching reverse(const matching& m) {
  std::vector<id_pair> rev;
  rev.reserve(m.size());
  for (const auto& [l, r] : m.pairs()) rev.emplace_back(r, l);
  return matching(m.right(), m.left(), std::move(rev));
}

struct composition {
  matching composite;
  std::size_t discarded;  // pairs dropped because the outer intervals are disjoint
};

// Relational composition of m and n through the shared middle barcode,
// keeping a pair (alpha, gamma) only when the outer intervals intersect.
inline composition compose_counted(const matching& m, const matching& n) {
  if (m.right() != n.left())
    throw std::invalid_argument("compose: middle barcodes differ");
  std::vector<id_pair> pairs;
  std::size_t discarded = 0;
  for (const auto& [l, mid] : m.pairs()) {
    auto r = n.image_of(mid);
    if (!r) continue;
    if (intersects(m.left().at(l).iv, n.right().at(*r).iv))
      pairs.emplace_back(l, *r);
    else
      ++discarded;
  }
  return composition{matching(m.left(), n.right(), std::move(pairs)), discarded};
}

inline matching compose(const matching& m, const matching& n) {
  return compose_counted(m, n).composite;
}

// Every pair's left interval overlaps its right interval above.
inline bool is_overlap_matching(const matching& m) {
  for (const auto& [l, r] : m.pairs())
    if (!overlaps_above(m.left().at(l).iv, m.right().at(r).iv)) return false;
  return true;
}

// Every pair's left interval is contained in its right interval.
inline bool is_subbarcode_matching(const matching& m) {
  for (const auto& [l, r] : m.pairs())
    if (!contains(m.right().at(r).iv, m.left().at(l).iv)) return false;
  return true;
}

}  // namespace subbar
