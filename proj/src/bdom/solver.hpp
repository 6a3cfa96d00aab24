#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "bdom/broadcast.hpp"
#include "bdom/graph.hpp"

namespace bdom {

struct SolveOptions {
  // Highest total cost to search. nullopt selects the automatic bound
  // max(1, radius), which always contains an optimum: a center vertex
  // broadcasting at the radius dominates any connected graph.
  std::optional<int> max_cost;

  // Restrict the search to efficient assignments (every vertex covered
  // exactly once). The optimum value is unchanged by this restriction.
  bool require_efficient = false;

  // Worker threads per cost level; the result is independent of this.
  int threads = 1;
};

struct SolveResult {
  int gamma_b = 0;                       // minimum dominating broadcast cost
  BroadcastAssignment witness;           // canonical minimizer
  std::uint64_t candidates_checked = 0;  // assignments evaluated
  std::chrono::duration<double> elapsed{0};
};

// Exact broadcast domination number by iterative deepening on total cost.
//
// Cost levels c = 1..max_cost are searched in order; within a level, support
// sets are enumerated by size and the per-vertex strength never exceeds
// min(c, max(1, eccentricity)) — broadcasting past one's eccentricity buys
// nothing, so no optimum is lost. The witness is the canonical minimizer:
// smallest cost, then smallest support, then lexicographically smallest
// (vertex, strength) sequence. Candidate evaluation may fan out across
// threads; each level is reduced deterministically, so witness and
// candidates_checked are identical for every thread count.
//
// Throws UnreachableVertex for disconnected graphs and BudgetExhausted when
// no dominating assignment exists within an explicit max_cost.
SolveResult solve_exact(const Graph& g, const SolveOptions& opts = {});

// solve_exact restricted to efficient assignments; returns the same gamma_b.
SolveResult solve_exact_efficient(const Graph& g);

}  // namespace bdom
