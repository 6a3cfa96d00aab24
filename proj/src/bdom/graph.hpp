#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bdom/family_spec.hpp"

namespace bdom {

// Structural tag carried by family-generated vertices. A Leaf is the
// outermost vertex of a branch and counts as a pendant vertex too.
enum class Role : unsigned char { Plain, Base, Pendant, Leaf };

constexpr bool is_pendant(Role r) { return r == Role::Pendant || r == Role::Leaf; }

const char* role_name(Role r);

// Immutable simple undirected graph over 0-based vertex indices.
// Adjacency lists are kept sorted so iteration order, and everything derived
// from it (canonical witnesses, serialized documents), is deterministic.
// All user-facing renderings (documents, CLI output, error messages) label
// vertices 1-based.
class Graph {
 public:
  Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges,
        std::vector<Role> roles = {},
        std::optional<FamilySpec> family = std::nullopt);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  std::span<const int> neighbors(int v) const;
  int degree(int v) const;
  bool has_edge(int u, int v) const;
  std::size_t edge_count() const { return edge_count_; }

  // Edge list with u < v, sorted ascending.
  std::vector<std::pair<int, int>> edges() const;

  Role role(int v) const;
  bool has_role_tags() const;

  // Family provenance, echoed into serialized documents when present.
  const std::optional<FamilySpec>& family() const { return family_; }

  bool operator==(const Graph& other) const;

 private:
  void check_vertex(int v) const;

  std::vector<std::vector<int>> adjacency_;
  std::vector<Role> roles_;  // empty means every vertex is Plain
  std::optional<FamilySpec> family_;
  std::size_t edge_count_ = 0;
};

struct EccentricityProfile {
  std::vector<int> eccentricity;  // hop counts, one per vertex
  int radius = 0;                 // min eccentricity
  int diameter = 0;               // max eccentricity
  std::vector<int> center;        // vertices attaining the radius, ascending
};

// Hop distances from source to every vertex by breadth-first layering.
// Throws UnreachableVertex (naming the first unreached vertex) if the graph
// is disconnected, InvalidVertex if source is out of range.
std::vector<int> distances(const Graph& g, int source);

// Per-vertex eccentricities plus radius, diameter and center set.
// Requires a connected graph.
EccentricityProfile metrics(const Graph& g);

}  // namespace bdom
