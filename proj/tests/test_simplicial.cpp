#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <vector>

#include <subbar/subbar.hpp>

#include "generators.hpp"

using subbar::bar;
using subbar::barcode;
using subbar::build_filtration;
using subbar::image_persistence;
using subbar::infinite_death;
using subbar::interval;
using subbar::persistence;
using subbar::simplex;
using subbar::simplex_order;
using subbar::simplex_value;
using subbar::simplicial_complex;
using subbar::value_t;
using subbar::vertex_values;

namespace {

simplicial_complex triangle_boundary() {
  simplicial_complex k;
  k.add_simplex({0, 1});
  k.add_simplex({1, 2});
  k.add_simplex({0, 2});
  return k;
}

simplicial_complex full_triangle() {
  simplicial_complex k;
  k.add_simplex({0, 1, 2});
  return k;
}

vertex_values zeros(const simplicial_complex& k) {
  vertex_values v;
  for (int vertex : k.vertices()) v[vertex] = 0;
  return v;
}

// Count of bars alive at t per dimension: born at or before t, dead after t.
std::map<int, std::size_t> alive_at(const barcode& b, value_t t) {
  std::map<int, std::size_t> n;
  for (const bar& x : b.bars())
    if (x.iv.birth <= t && (x.iv.has_infinite_death() || x.iv.death > t)) ++n[x.dim];
  return n;
}

}  // namespace

TEST_CASE("complexes close downward", "[simplicial]") {
  simplicial_complex k;
  k.add_simplex({0, 1, 2});
  CHECK(k.size() == 7);
  CHECK(k.contains({0}));
  CHECK(k.contains({1, 2}));
  CHECK(k.contains({0, 1, 2}));
  CHECK(k.max_dim() == 2);
  CHECK(k.vertices() == std::vector<int>{0, 1, 2});
  CHECK(k.count_dim(1) == 3);

  CHECK_THROWS_AS(k.add_simplex({}), std::invalid_argument);
  CHECK_THROWS_AS(k.add_simplex({1, 1}), std::invalid_argument);

  // Unsorted input is accepted and normalized.
  simplicial_complex k2;
  k2.add_simplex({2, 0});
  CHECK(k2.contains({0, 2}));

  CHECK(simplicial_complex().empty());
  CHECK(simplicial_complex().max_dim() == -1);
}

TEST_CASE("simplex values take the maximum over vertices", "[simplicial]") {
  vertex_values v{{0, 0.0}, {1, 2.0}, {2, 1.0}};
  CHECK(simplex_value(v, {0}) == 0.0);
  CHECK(simplex_value(v, {0, 1}) == 2.0);
  CHECK(simplex_value(v, {0, 2}) == 1.0);
  CHECK(simplex_value(v, {0, 1, 2}) == 2.0);
  CHECK_THROWS_AS(simplex_value(v, {3}), std::invalid_argument);
  vertex_values bad{{0, infinite_death}};
  CHECK_THROWS_AS(simplex_value(bad, {0}), std::invalid_argument);
}

TEST_CASE("domination check reports offending vertices", "[simplicial]") {
  simplicial_complex k;
  k.add_simplex({0, 1});
  k.add_simplex({2});
  vertex_values lower{{0, 0.0}, {1, 1.0}, {2, 2.0}};
  vertex_values upper_ok{{0, 0.0}, {1, 1.0}, {2, 2.0}};
  CHECK_NOTHROW(subbar::require_dominates(k, upper_ok, lower));
  vertex_values upper_bad{{0, 0.0}, {1, 0.5}, {2, 1.0}};
  try {
    subbar::require_dominates(k, upper_bad, lower);
    FAIL("expected value_bound_violation");
  } catch (const subbar::value_bound_violation& e) {
    CHECK(e.vertices == std::vector<int>{1, 2});
  }
}

TEST_CASE("filtration order is by value, then dimension, then the tie-break",
          "[simplicial]") {
  simplicial_complex k;
  k.add_simplex({0, 1});
  k.add_simplex({1, 2});
  vertex_values v{{0, 0.0}, {1, 2.0}, {2, 1.0}};
  subbar::filtration f = build_filtration(k, v);
  std::vector<simplex> order;
  for (const auto& e : f.entries) order.push_back(e.s);
  CHECK(order == std::vector<simplex>{{0}, {2}, {1}, {0, 1}, {1, 2}});

  // Lexicographic vs reverse-lexicographic tie-break on equal (value, dim).
  simplicial_complex k2;
  k2.add_simplex({0, 3});
  k2.add_simplex({1, 2});
  vertex_values z{{0, 0.0}, {1, 0.0}, {2, 0.0}, {3, 0.0}};
  subbar::filtration lex = build_filtration(k2, z, simplex_order::lex);
  subbar::filtration rev = build_filtration(k2, z, simplex_order::reverse_lex);
  CHECK(lex.entries[4].s == simplex{0, 3});
  CHECK(lex.entries[5].s == simplex{1, 2});
  CHECK(rev.entries[4].s == simplex{1, 2});
  CHECK(rev.entries[5].s == simplex{0, 3});
}

TEST_CASE("sublevel complexes and Euler characteristic", "[simplicial]") {
  simplicial_complex k;
  k.add_simplex({0, 1});
  k.add_simplex({2});
  vertex_values v{{0, 0.0}, {1, 1.0}, {2, 2.0}};
  simplicial_complex at0 = subbar::sublevel_complex(k, v, 0);
  CHECK(at0.size() == 1);
  simplicial_complex at1 = subbar::sublevel_complex(k, v, 1);
  CHECK(at1.size() == 3);
  CHECK(subbar::sublevel_complex(k, v, 2).size() == 4);
  CHECK(subbar::sublevel_complex(k, v, -1).empty());

  CHECK(subbar::euler_characteristic(full_triangle()) == 1);
  CHECK(subbar::euler_characteristic(triangle_boundary()) == 0);
  CHECK(subbar::euler_characteristic(simplicial_complex()) == 0);
}

TEST_CASE("barcode of a three-vertex path", "[simplicial]") {
  simplicial_complex k;
  k.add_simplex({0, 1});
  k.add_simplex({1, 2});
  vertex_values v{{0, 0.0}, {1, 2.0}, {2, 1.0}};
  barcode b = persistence(k, v);
  CHECK(b == barcode::from_intervals(
                 {{0, interval(0, infinite_death)}, {0, interval(1, 2)}}));
}

TEST_CASE("barcode of the hollow and solid triangle", "[simplicial]") {
  simplicial_complex hollow = triangle_boundary();
  barcode bh = persistence(hollow, zeros(hollow));
  CHECK(bh == barcode::from_intervals({{0, interval(0, infinite_death)},
                                       {1, interval(0, infinite_death)}}));

  simplicial_complex solid = full_triangle();
  barcode bs = persistence(solid, zeros(solid));
  CHECK(bs == barcode::from_intervals({{0, interval(0, infinite_death)}}));
}

TEST_CASE("degenerate inputs produce empty or vertex-only barcodes", "[simplicial]") {
  CHECK(persistence(simplicial_complex(), vertex_values{}).empty());

  simplicial_complex points;
  points.add_simplex({0});
  points.add_simplex({1});
  points.add_simplex({2});
  vertex_values v{{0, 0.5}, {1, 0.0}, {2, 1.0}};
  barcode b = persistence(points, v);
  CHECK(b == barcode::from_intervals({{0, interval(0, infinite_death)},
                                      {0, interval(0.5, infinite_death)},
                                      {0, interval(1, infinite_death)}}));

  // Restricting the dimension below the complex dimension drops bars.
  simplicial_complex hollow = triangle_boundary();
  barcode b0 = persistence(hollow, zeros(hollow), 0);
  CHECK(b0 == barcode::from_intervals({{0, interval(0, infinite_death)}}));
  // Restricting above it changes nothing.
  CHECK(persistence(hollow, zeros(hollow), 5) ==
        persistence(hollow, zeros(hollow)));
}

TEST_CASE("betti numbers of fixed complexes", "[simplicial]") {
  CHECK(subbar::betti_numbers(triangle_boundary()) == std::vector<std::size_t>{1, 1});
  CHECK(subbar::betti_numbers(full_triangle()) == std::vector<std::size_t>{1, 0, 0});
  simplicial_complex points;
  points.add_simplex({0});
  points.add_simplex({1});
  CHECK(subbar::betti_numbers(points) == std::vector<std::size_t>{2});
  CHECK(subbar::betti_numbers(simplicial_complex()).empty());
}

TEST_CASE("bars alive at a value count the betti numbers there", "[simplicial]") {
  testgen::rng_t rng(99);
  for (int t = 0; t < 100; ++t) {
    simplicial_complex k = testgen::random_complex(rng, 8, 10);
    vertex_values v = testgen::random_values(rng, k, 0, 8);
    barcode b = persistence(k, v);
    std::set<value_t> criticals;
    for (const auto& entry : v) criticals.insert(entry.second);
    for (value_t t_val : criticals) {
      std::vector<std::size_t> betti =
          subbar::betti_numbers(subbar::sublevel_complex(k, v, t_val));
      std::map<int, std::size_t> alive = alive_at(b, t_val);
      for (std::size_t d = 0; d < betti.size(); ++d)
        CHECK(alive[static_cast<int>(d)] == betti[d]);
      std::size_t total_alive = 0;
      for (const auto& [dim, n] : alive) total_alive += n;
      std::size_t total_betti = 0;
      for (std::size_t n : betti) total_betti += n;
      CHECK(total_alive == total_betti);
    }
  }
}

TEST_CASE("both tie-break policies give the same barcode", "[simplicial]") {
  testgen::rng_t rng(123);
  for (int t = 0; t < 100; ++t) {
    simplicial_complex k = testgen::random_complex(rng, 8, 10);
    vertex_values v = testgen::random_values(rng, k, 0, 4);
    barcode lex = persistence(k, v, -1, simplex_order::lex);
    barcode rev = persistence(k, v, -1, simplex_order::reverse_lex);
    CHECK(same_bars(lex, rev));
  }
}

TEST_CASE("image barcode with equal bounds is the ordinary barcode", "[simplicial]") {
  testgen::rng_t rng(7);
  for (int t = 0; t < 50; ++t) {
    simplicial_complex k = testgen::random_complex(rng, 8, 10);
    vertex_values v = testgen::random_values(rng, k, 0, 8);
    CHECK(same_bars(image_persistence(k, v, v), persistence(k, v)));
  }
}

TEST_CASE("image barcode of the three-vertex path", "[simplicial]") {
  simplicial_complex k;
  k.add_simplex({0, 1});
  k.add_simplex({1, 2});
  vertex_values upper{{0, 0.0}, {1, 1.0}, {2, 0.0}};
  vertex_values lower{{0, 0.0}, {1, 0.0}, {2, 0.0}};
  barcode b = image_persistence(k, upper, lower);
  CHECK(b == barcode::from_intervals({{0, interval(0, infinite_death)}}));
}

TEST_CASE("image persistence rejects non-dominating bounds", "[simplicial]") {
  simplicial_complex k;
  k.add_simplex({0, 1});
  vertex_values upper{{0, 0.0}, {1, 0.0}};
  vertex_values lower{{0, 1.0}, {1, 0.0}};
  CHECK_THROWS_AS(image_persistence(k, upper, lower), subbar::value_bound_violation);
}

TEST_CASE("every image bar fits inside a bar of the lower barcode", "[simplicial]") {
  testgen::rng_t rng(808);
  for (int t = 0; t < 200; ++t) {
    simplicial_complex k = testgen::random_complex(rng, 8, 10);
    auto [upper, lower] = testgen::random_nested_pair(rng, k);
    CHECK(subbar::is_subbarcode(image_persistence(k, upper, lower),
                                persistence(k, lower)));
  }
}

TEST_CASE("image barcode matches the rank computation", "[simplicial]") {
  testgen::rng_t rng(660);
  for (int t = 0; t < 200; ++t) {
    simplicial_complex k = testgen::random_complex(rng, 8, 10);
    auto [upper, lower] = testgen::random_nested_pair(rng, k);
    CHECK(same_bars(image_persistence(k, upper, lower),
                    subbar::rank_invariant_oracle(k, upper, lower)));
  }
}

TEST_CASE("rank computation refuses oversized complexes", "[simplicial]") {
  simplicial_complex k;
  for (int i = 0; i < 51; ++i) k.add_simplex({3 * i, 3 * i + 1, 3 * i + 2});
  REQUIRE(k.size() == 51 * 7);
  vertex_values v = zeros(k);
  CHECK_THROWS_AS(subbar::rank_invariant_oracle(k, v, v), std::invalid_argument);
}

TEST_CASE("factorization bundles collect the four barcodes", "[simplicial]") {
  testgen::rng_t rng(515);
  for (int t = 0; t < 20; ++t) {
    simplicial_complex k = testgen::random_complex(rng, 8, 10);
    auto [upper, middle, lower] = testgen::random_nested_triple(rng, k);
    subbar::factorization_barcodes f =
        subbar::factorization_bundle(k, upper, middle, lower);
    CHECK(f.middle == persistence(k, middle));
    CHECK(f.upper_to_middle == image_persistence(k, upper, middle));
    CHECK(f.middle_to_lower == image_persistence(k, middle, lower));
    CHECK(f.upper_to_lower == image_persistence(k, upper, lower));
  }
}
