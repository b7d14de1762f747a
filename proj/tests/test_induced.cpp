#include <catch2/catch_amalgamated.hpp>

#include <subbar/subbar.hpp>

#include "generators.hpp"

using subbar::bar;
using subbar::bar_id;
using subbar::barcode;
using subbar::canonical_coinjection;
using subbar::canonical_injection;
using subbar::factorization_barcodes;
using subbar::id_pair;
using subbar::induced_sub_matching;
using subbar::induced_super_matching;
using subbar::infinite_death;
using subbar::interval;
using subbar::matching;

TEST_CASE("canonical injection pairs equal-death groups by birth", "[induced]") {
  barcode a = barcode::from_intervals({{0, interval(1, 5)}, {0, interval(2, 5)}});
  barcode b = barcode::from_intervals(
      {{0, interval(0, 5)}, {0, interval(1, 5)}, {0, interval(3, 5)}});
  matching m = canonical_injection(a, b);
  CHECK(m.pairs() == std::vector<id_pair>{{0, 0}, {1, 1}});
  CHECK(m.total_on_left());
  CHECK(subbar::is_subbarcode_matching(m));
  CHECK(subbar::is_overlap_matching(m));
}

TEST_CASE("canonical injection reports the blocking death group", "[induced]") {
  barcode a = barcode::from_intervals({{0, interval(0, 5)}});
  barcode b = barcode::from_intervals({{0, interval(1, 5)}});
  try {
    canonical_injection(a, b);
    FAIL("expected no_canonical_injection");
  } catch (const subbar::no_canonical_injection& e) {
    CHECK(e.death == 5.0);
  }

  // Too few bars in the target group.
  barcode a2 = barcode::from_intervals({{0, interval(0, 5)}, {0, interval(1, 5)}});
  barcode b2 = barcode::from_intervals({{0, interval(0, 5)}});
  CHECK_THROWS_AS(canonical_injection(a2, b2), subbar::no_canonical_injection);

  // Groups are per dimension.
  barcode a3 = barcode::from_intervals({{0, interval(1, 5)}});
  barcode b3 = barcode::from_intervals({{1, interval(0, 5)}});
  CHECK_THROWS_AS(canonical_injection(a3, b3), subbar::no_canonical_injection);
}

TEST_CASE("canonical coinjection pairs equal-birth groups by death", "[induced]") {
  barcode a = barcode::from_intervals({{0, interval(0, 5)}, {0, interval(0, 3)}});
  barcode b = barcode::from_intervals({{0, interval(0, 4)}, {0, interval(0, 2)}});
  matching m = canonical_coinjection(a, b);
  CHECK(m.pairs() == std::vector<id_pair>{{0, 0}, {1, 1}});
  CHECK(m.total_on_right());
  CHECK(subbar::is_overlap_matching(m));
  CHECK(subbar::is_subbarcode_matching(reverse(m)));
}

TEST_CASE("canonical coinjection reports the blocking birth group", "[induced]") {
  barcode a = barcode::from_intervals({{0, interval(0, 3)}});
  barcode b = barcode::from_intervals({{0, interval(0, 5)}});
  try {
    canonical_coinjection(a, b);
    FAIL("expected no_canonical_coinjection");
  } catch (const subbar::no_canonical_coinjection& e) {
    CHECK(e.birth == 0.0);
  }

  barcode b2 = barcode::from_intervals({{0, interval(0, 2)}, {0, interval(0, 1)}});
  CHECK_THROWS_AS(canonical_coinjection(a, b2), subbar::no_canonical_coinjection);
}

TEST_CASE("canonical matchings on randomized embeddable inputs", "[induced]") {
  testgen::rng_t rng(808);
  for (int t = 0; t < 1000; ++t) {
    // Injection: b extends a's bars downward in birth at equal death.
    barcode b = testgen::random_barcode(rng, 8);
    std::vector<std::pair<int, interval>> as;
    for (const bar& y : b.bars()) {
      if (testgen::chance(rng, 0.4)) continue;
      int b8 = static_cast<int>(y.iv.birth * 8);
      int up = testgen::rand_int(rng, 0, 4);
      if (!y.iv.has_infinite_death()) {
        int d8 = static_cast<int>(y.iv.death * 8);
        up = std::min(up, d8 - b8 - 1);
      }
      as.emplace_back(y.dim, interval((b8 + up) / 8.0, y.iv.death));
    }
    barcode a = barcode::from_intervals(as);
    matching m = canonical_injection(a, b);
    CHECK(m.total_on_left());
    for (const auto& [l, r] : m.pairs()) {
      const interval& x = a.at(l).iv;
      const interval& y = b.at(r).iv;
      CHECK(x.death == y.death);
      CHECK(y.birth <= x.birth);
    }
    CHECK(subbar::is_subbarcode_matching(m));
    CHECK(subbar::is_overlap_matching(m));

    // Coinjection: bsub trims a's bars upward in death at equal birth.
    std::vector<std::pair<int, interval>> bs;
    for (const bar& y : b.bars()) {
      if (testgen::chance(rng, 0.4)) continue;
      if (y.iv.has_infinite_death()) {
        bs.emplace_back(y.dim, interval(y.iv.birth,
                                        testgen::chance(rng, 0.5)
                                            ? infinite_death
                                            : y.iv.birth + testgen::rand_int(rng, 1, 8) / 8.0));
        continue;
      }
      int b8 = static_cast<int>(y.iv.birth * 8);
      int d8 = static_cast<int>(y.iv.death * 8);
      int down = std::min(testgen::rand_int(rng, 0, 4), d8 - b8 - 1);
      bs.emplace_back(y.dim, interval(y.iv.birth, (d8 - down) / 8.0));
    }
    barcode bsub = barcode::from_intervals(bs);
    matching c = canonical_coinjection(b, bsub);
    CHECK(c.total_on_right());
    for (const auto& [l, r] : c.pairs()) {
      const interval& x = b.at(l).iv;
      const interval& y = bsub.at(r).iv;
      CHECK(x.birth == y.birth);
      CHECK(y.death <= x.death);
    }
    CHECK(subbar::is_overlap_matching(c));
    CHECK(subbar::is_subbarcode_matching(reverse(c)));
  }
}

TEST_CASE("induced containment matching on a fixed factorization", "[induced]") {
  factorization_barcodes f{
      /*middle=*/barcode::from_intervals({{0, interval(0, 4)}}),
      /*upper_to_middle=*/barcode::from_intervals({{0, interval(1, 4)}}),
      /*middle_to_lower=*/barcode(),
      /*upper_to_lower=*/barcode::from_intervals({{0, interval(1, 3)}})};
  matching m = induced_sub_matching(f);
  CHECK(m.left() == f.upper_to_lower);
  CHECK(m.right() == f.middle);
  CHECK(m.pairs() == std::vector<id_pair>{{0, 0}});
  CHECK(m.total_on_left());
  CHECK(subbar::is_subbarcode_matching(m));
}

TEST_CASE("induced super matching on a fixed factorization", "[induced]") {
  factorization_barcodes f{
      /*middle=*/barcode::from_intervals({{0, interval(0, 4)}}),
      /*upper_to_middle=*/barcode(),
      /*middle_to_lower=*/barcode::from_intervals({{0, interval(0, 3)}}),
      /*upper_to_lower=*/barcode::from_intervals({{0, interval(1, 3)}})};
  matching e = induced_super_matching(f);
  CHECK(e.left() == f.middle);
  CHECK(e.right() == f.upper_to_lower);
  CHECK(e.pairs() == std::vector<id_pair>{{0, 0}});
  CHECK(e.total_on_right());
  CHECK(subbar::is_subbarcode_matching(reverse(e)));
}

TEST_CASE("super route rejects an image barcode born outside the middle",
          "[induced]") {
  // A lower image whose bar is born at 1 cannot be covered by a middle
  // barcode whose only bar is born at 0: the birth groups do not align.
  // The through-image leg embeds fine ([2,4) shares its death with [1,4)
  // at a later birth), so the failure is pinned to the coinjection side.
  factorization_barcodes f{
      /*middle=*/barcode::from_intervals({{0, interval(0, 4)}}),
      /*upper_to_middle=*/barcode(),
      /*middle_to_lower=*/barcode::from_intervals({{0, interval(1, 4)}}),
      /*upper_to_lower=*/barcode::from_intervals({{0, interval(2, 4)}})};
  try {
    induced_super_matching(f);
    FAIL("expected no_canonical_coinjection");
  } catch (const subbar::no_canonical_coinjection& e) {
    CHECK(e.birth == 1.0);
  }
}

TEST_CASE("the two induced routes can disagree", "[induced]") {
  factorization_barcodes f{
      /*middle=*/barcode::from_intervals({{0, interval(0, 3)}, {0, interval(1, 5)}}),
      /*upper_to_middle=*/barcode::from_intervals({{0, interval(1, 3)}}),
      /*middle_to_lower=*/barcode::from_intervals({{0, interval(1, 2)}}),
      /*upper_to_lower=*/barcode::from_intervals({{0, interval(1, 2)}})};
  matching m = induced_sub_matching(f);
  matching e = induced_super_matching(f);
  REQUIRE(m.total_on_left());
  REQUIRE(e.total_on_right());
  CHECK(m.pairs() == std::vector<id_pair>{{0, 0}});
  CHECK(reverse(e).pairs() == std::vector<id_pair>{{0, 1}});
  CHECK(m != reverse(e));
  // Both routes still produce containment matchings on the image barcode.
  CHECK(subbar::is_subbarcode_matching(m));
  CHECK(subbar::is_subbarcode_matching(reverse(e)));
}

TEST_CASE("induced matchings from random pipeline factorizations", "[induced]") {
  testgen::rng_t rng(616);
  for (int t = 0; t < 60; ++t) {
    subbar::simplicial_complex k = testgen::random_complex(rng, 8, 10);
    auto [upper, middle, lower] = testgen::random_nested_triple(rng, k);
    factorization_barcodes f = subbar::factorization_bundle(k, upper, middle, lower);

    matching m = induced_sub_matching(f);
    CHECK(m.total_on_left());
    CHECK(subbar::is_subbarcode_matching(m));

    matching e = induced_super_matching(f);
    CHECK(e.total_on_right());
    CHECK(subbar::is_subbarcode_matching(reverse(e)));

    // Neither composition loses pairs to the intersection filter.
    subbar::composition cm = compose_counted(
        reverse(canonical_coinjection(f.upper_to_middle, f.upper_to_lower)),
        canonical_injection(f.upper_to_middle, f.middle));
    CHECK(cm.discarded == 0);
    CHECK(cm.composite == m);
    subbar::composition ce = compose_counted(
        canonical_coinjection(f.middle, f.middle_to_lower),
        reverse(canonical_injection(f.upper_to_lower, f.middle_to_lower)));
    CHECK(ce.discarded == 0);
    CHECK(ce.composite == e);
  }
}
