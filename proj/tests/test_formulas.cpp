#include "bdom/error.hpp"
#include "bdom/families.hpp"
#include "bdom/formulas.hpp"
#include "bdom/graph.hpp"
#include "doctest.h"

using bdom::Cycle;
using bdom::Error;
using bdom::FamilyKind;
using bdom::FamilySpec;
using bdom::GeneralizedSunlet;
using bdom::Path;
using bdom::Sunlet;
using bdom::SunletDeg;
using bdom::VerifyRanges;

TEST_CASE("closed-form gamma_b values") {
  CHECK(*bdom::gamma_b_formula(Cycle{7}) == 3);
  CHECK(*bdom::gamma_b_formula(Sunlet{8}) == 5);
  CHECK(*bdom::gamma_b_formula(SunletDeg{3, 4}) == 5);  // branch 4 on cycle 3
  CHECK(*bdom::gamma_b_formula(Path{1}) == 1);
  CHECK(*bdom::gamma_b_formula(Path{8}) == 3);

  GeneralizedSunlet open_case;
  open_case.m = 4;
  open_case.lengths = {1, 0, 2, 1};
  CHECK(!bdom::gamma_b_formula(open_case).has_value());
}

TEST_CASE("closed-form radius values") {
  CHECK(*bdom::radius_formula(SunletDeg{6, 3}) == 6);
  CHECK(*bdom::radius_formula(Sunlet{9}) == 5);
  CHECK(*bdom::radius_formula(SunletDeg{3, 1}) == 2);

  CHECK(!bdom::radius_formula(Path{9}).has_value());
  CHECK(!bdom::radius_formula(Cycle{6}).has_value());

  // cross-check against breadth-first metrics
  CHECK(bdom::metrics(bdom::generate(Sunlet{9})).radius == 5);
}

TEST_CASE("sunlet formula is the branch-length-1 sunlet-deg formula") {
  for (int n = 3; n <= 100; ++n) {
    CHECK(*bdom::gamma_b_formula(Sunlet{n}) ==
          *bdom::gamma_b_formula(SunletDeg{n, 1}));
  }
}

TEST_CASE("cycle-3 sunlet-deg formula collapses to branch length plus one") {
  for (int branch = 1; branch <= 100; ++branch) {
    CHECK(*bdom::gamma_b_formula(SunletDeg{3, branch}) == branch + 1);
  }
}

TEST_CASE("gamma_b formula never exceeds the radius formula") {
  for (int n = 3; n <= 40; ++n) {
    CHECK(*bdom::gamma_b_formula(Sunlet{n}) <= *bdom::radius_formula(Sunlet{n}));
  }
  for (int m = 3; m <= 12; ++m) {
    for (int n = 1; n <= 6; ++n) {
      CHECK(*bdom::gamma_b_formula(SunletDeg{m, n}) <=
            *bdom::radius_formula(SunletDeg{m, n}));
    }
  }
}

TEST_CASE("formula validates parameters") {
  CHECK_THROWS_AS(bdom::gamma_b_formula(Cycle{2}), Error);
  CHECK_THROWS_AS(bdom::radius_formula(SunletDeg{3, 0}), Error);
}

TEST_CASE("verify_family sweeps cycles") {
  VerifyRanges ranges;
  ranges.min = 3;
  ranges.max = 12;
  const auto rows = bdom::verify_family(FamilyKind::Cycle, ranges);
  REQUIRE(rows.size() == 10);
  for (const auto& row : rows) {
    CHECK(row.all_match);
    CHECK(row.construction_dominates);
    CHECK(*row.formula_value == row.solver_value);
    CHECK(*row.construction_cost == row.solver_value);
  }
}

TEST_CASE("verify_family sweeps paths") {
  VerifyRanges ranges;
  ranges.min = 1;
  ranges.max = 12;
  const auto rows = bdom::verify_family(FamilyKind::Path, ranges);
  REQUIRE(rows.size() == 12);
  for (const auto& row : rows) CHECK(row.all_match);
}

TEST_CASE("verify_family sweeps the sunlet-deg grid") {
  VerifyRanges ranges;
  ranges.m_min = 3;
  ranges.m_max = 5;
  ranges.n_min = 1;
  ranges.n_max = 3;
  const auto rows = bdom::verify_family(FamilyKind::SunletDeg, ranges);
  REQUIRE(rows.size() == 9);
  for (const auto& row : rows) {
    CHECK(row.all_match);
    CHECK(row.construction_dominates);
  }
}

TEST_CASE("gen-sunlet rows are solver-only and match vacuously") {
  GeneralizedSunlet spec;
  spec.m = 4;
  spec.lengths = {1, 0, 2, 1};
  const auto row = bdom::verify_instance(spec);
  CHECK(!row.formula_value.has_value());
  CHECK(!row.construction_cost.has_value());
  CHECK(row.solver_value >= 1);
  CHECK(row.all_match);
  CHECK(row.construction_dominates);

  VerifyRanges unused;
  CHECK_THROWS_AS(bdom::verify_family(FamilyKind::GeneralizedSunlet, unused),
                  Error);
}

TEST_CASE("verify_family rejects malformed ranges") {
  VerifyRanges backwards;
  backwards.min = 5;
  backwards.max = 3;
  CHECK_THROWS_AS(bdom::verify_family(FamilyKind::Cycle, backwards), Error);
}
