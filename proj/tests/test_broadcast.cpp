#include <random>

#include "bdom/broadcast.hpp"
#include "bdom/error.hpp"
#include "bdom/families.hpp"
#include "doctest.h"
#include "support/random_graphs.hpp"

using bdom::BroadcastAssignment;
using bdom::BroadcastEntry;
using bdom::Cycle;
using bdom::Error;
using bdom::Graph;
using bdom::Path;

TEST_CASE("assignment stores positive strengths only") {
  BroadcastAssignment f;
  f.set(2, 1);
  f.set(5, 2);
  CHECK(f.cost() == 3);
  CHECK(f.strength_of(2) == 1);
  CHECK(!f.strength_of(3).has_value());

  f.set(2, 0);  // erase
  CHECK(f.size() == 1);
  CHECK(!f.strength_of(2).has_value());

  CHECK_THROWS_AS(f.set(1, -2), Error);
  CHECK_THROWS_AS(f.set(-1, 1), Error);
  CHECK_THROWS_AS(BroadcastAssignment::from_entries({{0, 1}, {0, 2}}), Error);
  CHECK_THROWS_AS(BroadcastAssignment::from_entries({{0, 0}}), Error);
}

TEST_CASE("cost examples") {
  CHECK(BroadcastAssignment::from_entries({{2, 1}, {5, 1}}).cost() == 2);
  CHECK(BroadcastAssignment{}.cost() == 0);
  CHECK(BroadcastAssignment::from_entries({{1, 2}, {6, 1}}).cost() == 3);
}

TEST_CASE("coverage of C_6 with the two-vertex pattern is efficient") {
  const Graph c6 = bdom::generate(Cycle{6});
  const auto f = BroadcastAssignment::from_entries({{2, 1}, {5, 1}});
  const auto report = bdom::coverage(c6, f);
  CHECK(report.coverage_count == std::vector<int>{1, 1, 1, 1, 1, 1});
  CHECK(report.is_dominating);
  CHECK(report.is_efficient);
  CHECK(report.uncovered.empty());
}

TEST_CASE("coverage of C_6 with a single strength-2 vertex misses v4") {
  const Graph c6 = bdom::generate(Cycle{6});
  const auto f = BroadcastAssignment::from_entries({{0, 2}});
  const auto report = bdom::coverage(c6, f);
  CHECK(report.coverage_count == std::vector<int>{1, 1, 1, 0, 1, 1});
  CHECK(!report.is_dominating);
  CHECK(!report.is_efficient);
  CHECK(report.uncovered == std::vector<int>{3});
}

TEST_CASE("empty assignment covers nothing") {
  const Graph c6 = bdom::generate(Cycle{6});
  const auto report = bdom::coverage(c6, BroadcastAssignment{});
  CHECK(report.uncovered.size() == 6);
  CHECK(!report.is_dominating);
  CHECK(!report.is_efficient);
}

TEST_CASE("a broadcast vertex covers itself; P_1 needs strength 1") {
  const Graph p1 = bdom::generate(Path{1});
  const auto covered =
      bdom::coverage(p1, BroadcastAssignment::from_entries({{0, 1}}));
  CHECK(covered.is_dominating);
  CHECK(covered.is_efficient);

  const auto bare = bdom::coverage(p1, BroadcastAssignment{});
  CHECK(!bare.is_dominating);
}

TEST_CASE("coverage rejects out-of-range broadcast vertices") {
  const Graph c6 = bdom::generate(Cycle{6});
  CHECK_THROWS_AS(
      bdom::coverage(c6, BroadcastAssignment::from_entries({{9, 1}})), Error);
}

TEST_CASE("raising one strength never lowers any coverage count") {
  std::mt19937 rng(0x5eedu);
  for (const auto& g : testsupport::seeded_random_graphs(10)) {
    const int n = g.vertex_count();
    std::uniform_int_distribution<int> pick_vertex(0, n - 1);
    std::uniform_int_distribution<int> pick_strength(1, 3);
    BroadcastAssignment f;
    for (int i = 0; i < 3; ++i) f.set(pick_vertex(rng), pick_strength(rng));
    const auto before = bdom::coverage(g, f).coverage_count;

    const int bumped = f.entries().front().vertex;
    BroadcastAssignment g2 = f;
    g2.set(bumped, *f.strength_of(bumped) + 1);
    const auto after = bdom::coverage(g, g2).coverage_count;
    for (int v = 0; v < n; ++v) {
      CHECK(after[static_cast<std::size_t>(v)] >=
            before[static_cast<std::size_t>(v)]);
    }
  }
}

TEST_CASE("coverage commutes with cycle rotation") {
  const int n = 9;
  const Graph cn = bdom::generate(Cycle{n});
  const auto f = BroadcastAssignment::from_entries({{1, 2}, {5, 1}});
  const auto base = bdom::coverage(cn, f).coverage_count;
  for (int shift = 1; shift < n; ++shift) {
    BroadcastAssignment rotated;
    for (const auto& e : f.entries()) {
      rotated.set((e.vertex + shift) % n, e.strength);
    }
    const auto counts = bdom::coverage(cn, rotated).coverage_count;
    for (int v = 0; v < n; ++v) {
      CHECK(counts[static_cast<std::size_t>((v + shift) % n)] ==
            base[static_cast<std::size_t>(v)]);
    }
  }
}
