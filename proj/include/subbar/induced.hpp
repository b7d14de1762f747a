#pragma once

// Canonical matchings induced by monomorphisms and epimorphisms of
// persistence modules, realized purely on barcodes, and the two induced
// matchings of a factorization. A monomorphism forces each bar of the
// source to sit inside a bar of the target with the same death; an
// epimorphism forces each bar of the target to sit inside a bar of the
// source with the same birth. The canonical choice pairs bars groupwise,
// longest to longest, ties resolved by ascending id.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "subbar/barcode.hpp"
#include "subbar/matching.hpp"

namespace subbar {

struct no_canonical_injection : std::runtime_error {
  value_t death;  // death value of the group that cannot be embedded
  explicit no_canonical_injection(value_t d)
      : std::runtime_error("no canonical injection: death group cannot be embedded"), death(d) {}
};

struct no_canonical_coinjection : std::runtime_error {
  value_t birth;  // birth value of the group that cannot be covered
  explicit no_canonical_coinjection(value_t b)
      : std::runtime_error("no canonical coinjection: birth group cannot be covered"), birth(b) {}
};

// Matching from a into b, total on a: per (dim, death) group, the k-th
// longest bar of a pairs with the k-th longest bar of b. Fails when a group
// of a outnumbers or outgrows the matching group of b.
inline matching canonical_injection(const barcode& a, const barcode& b) {
  std::map<std::pair<int, value_t>, std::vector<const bar*>> ga, gb;
  for (const bar& x : a.bars()) ga[{x.dim, x.iv.death}].push_back(&x);
  for (const bar& y : b.bars()) gb[{y.dim, y.iv.death}].push_back(&y);
  auto by_birth = [](const bar* x, const bar* y) {
    return std::tie(x->iv.birth, x->id) < std::tie(y->iv.birth, y->id);
  };
  std::vector<id_pair> pairs;
  for (auto& [key, av] : ga) {
    auto it = gb.find(key);
    if (it == gb.end() || it->second.size() < av.size())
      throw no_canonical_injection(key.second);
    auto& bv = it->second;
    std::sort(av.begin(), av.end(), by_birth);
    std::sort(bv.begin(), bv.end(), by_birth);
    for (std::size_t k = 0; k < av.size(); ++k) {
      if (!(bv[k]->iv.birth <= av[k]->iv.birth)) throw no_canonical_injection(key.second);
      pairs.emplace_back(av[k]->id, bv[k]->id);
    }
  }
  return matching(a, b, std::move(pairs));
}

// Matching from a onto b, total on b: per (dim, birth) group, the k-th
// longest bar of b pairs with the k-th longest bar of a. Fails when a group
// of b outnumbers or outgrows the matching group of a.
inline matching canonical_coinjection(const barcode& a, const barcode& b) {
  std::map<std::pair<int, value_t>, std::vector<const bar*>> ga, gb;
  for (const bar& x : a.bars()) ga[{x.dim, x.iv.birth}].push_back(&x);
  for (const bar& y : b.bars()) gb[{y.dim, y.iv.birth}].push_back(&y);
  auto by_death_desc = [](const bar* x, const bar* y) {
    return std::tie(y->iv.death, x->id) < std::tie(x->iv.death, y->id);
  };
  std::vector<id_pair> pairs;
  for (auto& [key, bv] : gb) {
    auto it = ga.find(key);
    if (it == ga.end() || it->second.size() < bv.size())
      throw no_canonical_coinjection(key.second);
    auto& av = it->second;
    std::sort(av.begin(), av.end(), by_death_desc);
    std::sort(bv.begin(), bv.end(), by_death_desc);
    for (std::size_t k = 0; k < bv.size(); ++k) {
      if (!(bv[k]->iv.death <= av[k]->iv.death)) throw no_canonical_coinjection(key.second);
      pairs.emplace_back(av[k]->id, bv[k]->id);
    }
  }
  return matching(a, b, std::move(pairs));
}

// The four barcodes of a factorization upper >= middle >= lower: the middle
// module's own barcode and the images along each inclusion of sublevel
// filtrations. Construction performs no algebraic checks; the induced-
// matching operations surface any inconsistency.
struct factorization_barcodes {
  barcode middle;           // persistence of the middle filtration
  barcode upper_to_middle;  // image of the upper filtration in the middle
  barcode middle_to_lower;  // image of the middle filtration in the lower
  barcode upper_to_lower;   // image of the upper filtration in the lower
};

// Sub-barcode matching upper_to_lower -> middle, total on upper_to_lower:
// route each image bar backwards through the coinjection onto it, then
// forwards through the injection into the middle barcode. The intersection
// filter of the composition never fires here, because both legs keep a
// common sub-interval of every bar they carry.
inline matching induced_sub_matching(const factorization_barcodes& f) {
  return compose(reverse(canonical_coinjection(f.upper_to_middle, f.upper_to_lower)),
                 canonical_injection(f.upper_to_middle, f.middle));
}

// Matching middle -> upper_to_lower, total on upper_to_lower, whose
// reverse is a sub-barcode matching: the dual route through the lower
// image.
inline matching induced_super_matching(const factorization_barcodes& f) {
  return compose(canonical_coinjection(f.middle, f.middle_to_lower),
                 reverse(canonical_injection(f.upper_to_lower, f.middle_to_lower)));
}

}  // namespace subbar
