#pragma once

// A barcode is a finite multiset of bars; each bar carries a homological
// dimension, a half-open interval, and a dense integer id. Bar order
// carries no meaning; barcodes are stored sorted by id and compared as
// id-keyed sets.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "subbar/interval.hpp"

namespace subbar {

using bar_id = std::uint32_t;

struct bar {
  bar_id id;
  int dim;
  interval iv;

  friend bool operator==(const bar& a, const bar& b) {
    return a.id == b.id && a.dim == b.dim && a.iv == b.iv;
  }
  friend bool operator!=(const bar& a, const bar& b) { return !(a == b); }
};

class barcode {
 public:
  barcode() = default;

  explicit barcode(std::vector<bar> bars) : bars_(std::move(bars)) {
    std::sort(bars_.begin(), bars_.end(),
              [](const bar& a, const bar& b) { return a.id < b.id; });
    for (std::size_t k = 0; k < bars_.size(); ++k) {
      if (bars_[k].dim < 0)
        throw std::invalid_argument("barcode: negative dimension");
      if (k > 0 && bars_[k].id == bars_[k - 1].id)
        throw std::invalid_argument("barcode: duplicate bar id " + std::to_string(bars_[k].id));
      index_.emplace(bars_[k].id, k);
    }
  }

  // Bars listed as (dim, interval); ids are assigned densely in list order.
  static barcode from_intervals(const std::vector<std::pair<int, interval>>& items) {
    std::vector<bar> bars;
    bars.reserve(items.size());
    for (std::size_t k = 0; k < items.size(); ++k)
      bars.push_back(bar{static_cast<bar_id>(k), items[k].first, items[k].second});
    return barcode(std::move(bars));
  }

  std::size_t size() const { return bars_.size(); }
  bool empty() const { return bars_.empty(); }
  const std::vector<bar>& bars() const { return bars_; }

  const bar* find(bar_id id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &bars_[it->second];
  }

  const bar& at(bar_id id) const {
    const bar* p = find(id);
    if (!p) throw std::invalid_argument("barcode: no bar with id " + std::to_string(id));
    return *p;
  }

  int max_dim() const {
    int d = -1;
    for (const bar& b : bars_) d = std::max(d, b.dim);
    return d;
  }

  friend bool operator==(const barcode& a, const barcode& b) { return a.bars_ == b.bars_; }
  friend bool operator!=(const barcode& a, const barcode& b) { return !(a == b); }

 private:
  std::vector<bar> bars_;  // sorted by id
  std::unordered_map<bar_id, std::size_t> index_;
};

// Multiset of (dim, birth, death), ignoring ids. Two barcodes computed by
// different pipelines agree when these multisets are equal.
inline bool same_bars(const barcode& a, const barcode& b) {
  auto key = [](const barcode& c) {
    std::vector<std::tuple<int, value_t, value_t>> v;
    v.reserve(c.size());
    for (const bar& x : c.bars()) v.emplace_back(x.dim, x.iv.birth, x.iv.death);
    std::sort(v.begin(), v.end());
    return v;
  };
  return key(a) == key(b);
}

}  // namespace subbar
