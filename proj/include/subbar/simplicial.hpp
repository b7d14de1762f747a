#pragma once

// Simplicial complexes with vertex-indexed values and the sublevel
// (lower-star) filtrations they induce. A simplex enters at the maximum
// value of its vertices; simplices are ordered by value, then dimension,
// then a vertex-list tie-break, so every face precedes its cofaces.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "subbar/interval.hpp"

namespace subbar {

using simplex = std::vector<int>;  // strictly increasing vertex ids

using vertex_values = std::map<int, value_t>;

class simplicial_complex {
 public:
  // Adding a simplex adds every face of it as well.
  void add_simplex(simplex s) {
    if (s.empty()) throw std::invalid_argument("add_simplex: empty simplex");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::invalid_argument("add_simplex: repeated vertex");
    add_closed(s);
  }

  bool contains(const simplex& s) const { return simplices_.count(s) != 0; }
  std::size_t size() const { return simplices_.size(); }
  bool empty() const { return simplices_.empty(); }

  int max_dim() const {
    int d = -1;
    for (const simplex& s : simplices_) d = std::max(d, int(s.size()) - 1);
    return d;
  }

  std::vector<int> vertices() const {
    std::vector<int> vs;
    for (const simplex& s : simplices_)
      if (s.size() == 1) vs.push_back(s[0]);
    return vs;
  }

  std::size_t count_dim(int k) const {
    std::size_t n = 0;
    for (const simplex& s : simplices_)
      if (int(s.size()) - 1 == k) ++n;
    return n;
  }

  const std::set<simplex>& simplices() const { return simplices_; }

 private:
  void add_closed(const simplex& s) {
    if (!simplices_.insert(s).second) return;
    if (s.size() == 1) return;
    simplex face;
    face.reserve(s.size() - 1);
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
      face.clear();
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != skip) face.push_back(s[i]);
      add_closed(face);
    }
  }

  std::set<simplex> simplices_;
};

// The value a simplex enters the sublevel filtration at.
inline value_t simplex_value(const vertex_values& values, const simplex& s) {
  value_t v = -infinite_death;
  for (int vertex : s) {
    auto it = values.find(vertex);
    if (it == values.end())
      throw std::invalid_argument("no value for vertex " + std::to_string(vertex));
    if (!std::isfinite(it->second))
      throw std::invalid_argument("non-finite value for vertex " + std::to_string(vertex));
    v = std::max(v, it->second);
  }
  return v;
}

// Thrown when a pointwise bound between two vertex-value assignments fails
// where one filtration must dominate another.
struct value_bound_violation : std::runtime_error {
  explicit value_bound_violation(std::vector<int> vs)
      : std::runtime_error(make_message(vs)), vertices(std::move(vs)) {}

  std::vector<int> vertices;

 private:
  static std::string make_message(const std::vector<int>& vs) {
    std::ostringstream os;
    os << "upper values fall below lower values at vertices:";
    for (int v : vs) os << ' ' << v;
    return os.str();
  }
};

// Require upper(v) >= lower(v) for every vertex of the complex.
inline void require_dominates(const simplicial_complex& k, const vertex_values& upper,
                              const vertex_values& lower) {
  std::vector<int> bad;
  for (int v : k.vertices()) {
    if (simplex_value(upper, {v}) < simplex_value(lower, {v})) bad.push_back(v);
  }
  if (!bad.empty()) throw value_bound_violation(std::move(bad));
}

// Tie-break between simplices of equal value and dimension. Either policy
// yields the same barcode; having two makes that checkable.
enum class simplex_order { lex, reverse_lex };

struct filtration_entry {
  simplex s;
  value_t value;
};

struct filtration {
  std::vector<filtration_entry> entries;   // faces precede cofaces
  std::map<simplex, std::size_t> index;    // simplex -> position in entries

  std::size_t size() const { return entries.size(); }
};

inline filtration build_filtration(const simplicial_complex& k, const vertex_values& values,
                                   simplex_order order = simplex_order::lex) {
  filtration f;
  f.entries.reserve(k.size());
  for (const simplex& s : k.simplices()) f.entries.push_back({s, simplex_value(values, s)});
  std::sort(f.entries.begin(), f.entries.end(),
            [order](const filtration_entry& x, const filtration_entry& y) {
              if (x.value != y.value) return x.value < y.value;
              if (x.s.size() != y.s.size()) return x.s.size() < y.s.size();
              return order == simplex_order::lex ? x.s < y.s : y.s < x.s;
            });
  for (std::size_t i = 0; i < f.entries.size(); ++i) f.index.emplace(f.entries[i].s, i);
  return f;
}

// Subcomplex of simplices whose sublevel value is at most t. Downward
// closed because simplex values are monotone under faces.
inline simplicial_complex sublevel_complex(const simplicial_complex& k, const vertex_values& values,
                                           value_t t) {
  simplicial_complex sub;
  for (const simplex& s : k.simplices())
    if (simplex_value(values, s) <= t) sub.add_simplex(s);
  return sub;
}

inline long long euler_characteristic(const simplicial_complex& k) {
  long long chi = 0;
  for (const simplex& s : k.simplices()) chi += (s.size() % 2 == 1) ? 1 : -1;
  return chi;
}

}  // namespace subbar
