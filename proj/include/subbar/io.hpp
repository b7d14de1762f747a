#pragma once

// Text formats. Barcode: one bar per line, `<dim> <birth> <death>`, with
// `inf` for +infinity. Complex: one simplex per line as vertex indices
// (closed downward on read). Vertex values: `<vertex> <value>`. Matching:
// `<left-id> -> <right-id>`. `#` starts a comment anywhere; blank lines are
// skipped. Values print as the shortest decimal that reads back exactly.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <tuple>
#include <utility>
#include <vector>

#include "subbar/barcode.hpp"
#include "subbar/matching.hpp"
#include "subbar/simplicial.hpp"

namespace subbar {

struct parse_error : std::runtime_error {
  parse_error(std::size_t line_number, const std::string& what_happened)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + what_happened),
        line(line_number) {}

  std::size_t line;
};

inline std::string format_value(value_t v) {
  if (v == infinite_death) return "inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string format_interval(const interval& iv) {
  return "[" + format_value(iv.birth) + "," + format_value(iv.death) + ")";
}

inline value_t parse_value(std::string_view text, std::size_t line_number) {
  if (text == "inf" || text == "+inf") return infinite_death;
  value_t v{};
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw parse_error(line_number, "bad number '" + std::string(text) + "'");
  return v;
}

inline int parse_int(std::string_view text, std::size_t line_number) {
  int v{};
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw parse_error(line_number, "bad integer '" + std::string(text) + "'");
  return v;
}

namespace detail {

inline std::vector<std::string> content_tokens(const std::string& line) {
  std::istringstream ss(line.substr(0, line.find('#')));
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

// Bars ordered for output and for dense-id assignment on read.
inline std::vector<const bar*> display_order(const barcode& b) {
  std::vector<const bar*> out;
  out.reserve(b.size());
  for (const bar& x : b.bars()) out.push_back(&x);
  std::sort(out.begin(), out.end(), [](const bar* x, const bar* y) {
    return std::tie(x->dim, x->iv.birth, x->iv.death, x->id) <
           std::tie(y->dim, y->iv.birth, y->iv.death, y->id);
  });
  return out;
}

}  // namespace detail

// Ids are assigned by order of appearance in the stream.
inline barcode read_barcode(std::istream& in) {
  std::vector<std::pair<int, interval>> items;
  std::string line;
  std::size_t ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    auto toks = detail::content_tokens(line);
    if (toks.empty()) continue;
    if (toks.size() != 3) throw parse_error(ln, "expected '<dim> <birth> <death>'");
    int dim = parse_int(toks[0], ln);
    if (dim < 0) throw parse_error(ln, "negative dimension");
    value_t birth = parse_value(toks[1], ln);
    value_t death = parse_value(toks[2], ln);
    try {
      items.emplace_back(dim, interval(birth, death));
    } catch (const std::invalid_argument& e) {
      throw parse_error(ln, e.what());
    }
  }
  return barcode::from_intervals(std::move(items));
}

inline void write_barcode(std::ostream& out, const barcode& b) {
  for (const bar* x : detail::display_order(b))
    out << x->dim << ' ' << format_value(x->iv.birth) << ' ' << format_value(x->iv.death) << '\n';
}

inline simplicial_complex read_complex(std::istream& in) {
  simplicial_complex k;
  std::string line;
  std::size_t ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    auto toks = detail::content_tokens(line);
    if (toks.empty()) continue;
    simplex s;
    s.reserve(toks.size());
    for (const std::string& t : toks) {
      int v = parse_int(t, ln);
      if (v < 0) throw parse_error(ln, "negative vertex index");
      s.push_back(v);
    }
    try {
      k.add_simplex(std::move(s));
    } catch (const std::invalid_argument& e) {
      throw parse_error(ln, e.what());
    }
  }
  return k;
}

inline vertex_values read_vertex_values(std::istream& in) {
  vertex_values values;
  std::string line;
  std::size_t ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    auto toks = detail::content_tokens(line);
    if (toks.empty()) continue;
    if (toks.size() != 2) throw parse_error(ln, "expected '<vertex> <value>'");
    int v = parse_int(toks[0], ln);
    if (v < 0) throw parse_error(ln, "negative vertex index");
    value_t x = parse_value(toks[1], ln);
    if (!std::isfinite(x)) throw parse_error(ln, "vertex value must be finite");
    if (!values.emplace(v, x).second)
      throw parse_error(ln, "duplicate value for vertex " + std::to_string(v));
  }
  return values;
}

inline std::vector<id_pair> read_matching_pairs(std::istream& in) {
  std::vector<id_pair> pairs;
  std::string line;
  std::size_t ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    auto toks = detail::content_tokens(line);
    if (toks.empty()) continue;
    if (toks.size() != 3 || toks[1] != "->")
      throw parse_error(ln, "expected '<left-id> -> <right-id>'");
    int l = parse_int(toks[0], ln);
    int r = parse_int(toks[2], ln);
    if (l < 0 || r < 0) throw parse_error(ln, "negative bar id");
    pairs.emplace_back(bar_id(l), bar_id(r));
  }
  return pairs;
}

inline void write_matching_pairs(std::ostream& out, const matching& m) {
  for (const auto& [l, r] : m.pairs()) out << l << " -> " << r << '\n';
}

}  // namespace subbar
