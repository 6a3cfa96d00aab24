#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "bdom/graph.hpp"

namespace bdom {

struct BroadcastEntry {
  int vertex = 0;
  int strength = 0;
  friend auto operator<=>(const BroadcastEntry&, const BroadcastEntry&) = default;
};

// Partial map vertex -> positive signal strength (hop units). Vertices absent
// from the map broadcast nothing; strength 0 is represented by absence and is
// never stored, so cost() is always the plain sum of the stored strengths.
class BroadcastAssignment {
 public:
  BroadcastAssignment() = default;

  // Entries must have distinct non-negative vertices and strengths >= 1.
  static BroadcastAssignment from_entries(std::vector<BroadcastEntry> entries);

  // Inserts or replaces; strength 0 erases the vertex from the support.
  void set(int vertex, int strength);

  std::optional<int> strength_of(int vertex) const;

  // Vertex-ascending support.
  const std::vector<BroadcastEntry>& entries() const { return entries_; }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Total of the stored signal strengths; 0 for the empty assignment.
  int cost() const;

  bool operator==(const BroadcastAssignment&) const = default;

 private:
  std::vector<BroadcastEntry> entries_;
};

inline int cost(const BroadcastAssignment& f) { return f.cost(); }

struct CoverageReport {
  // Number of broadcast vertices v with d(u,v) <= f(v), per vertex u.
  std::vector<int> coverage_count;
  bool is_dominating = false;  // every count >= 1
  bool is_efficient = false;   // every count == 1
  std::vector<int> uncovered;  // vertices with count 0, ascending
};

// Evaluates f on g by truncated breadth-first search from each broadcast
// vertex (depth <= its strength). A broadcast vertex covers itself.
// Throws InvalidVertex if f names a vertex outside g.
CoverageReport coverage(const Graph& g, const BroadcastAssignment& f);

}  // namespace bdom
