#pragma once

#include <string>
#include <string_view>

#include "bdom/broadcast.hpp"
#include "bdom/graph.hpp"

namespace bdom {

// On-disk formats. Graph documents (.graph.json) and broadcast documents
// (.bcast.json) are canonical JSON: sorted keys, 1-based vertex labels,
// sorted deduplicated edge lists, two-space indentation, trailing newline.
// Rendering the result of a parse reproduces canonical input byte for byte.

// GraphDocument:
//   {"edges": [[1,2], ...], "family": {...}?, "n": 6, "roles": {...}?,
//    "version": "1"}
Graph read_graph(std::string_view text);
std::string write_graph(const Graph& g);

// BroadcastDocument:
//   {"assignments": {"3": 2, "7": 1}, "cost": 3, "version": "1"}
// The cost field is redundant and is validated against the strength sum.
BroadcastAssignment read_broadcast(std::string_view text);
std::string write_broadcast(const BroadcastAssignment& f);

// FamilySpec encoding used inside GraphDocument ("family" field), e.g.
//   {"kind": "sunlet-deg", "m": 6, "n": 3}
FamilySpec family_from_json_text(std::string_view text);
std::string family_to_json_text(const FamilySpec& spec);

// Undirected DOT rendering, deterministic byte for byte. When an assignment
// is given, broadcast vertices are filled and labeled beside the node with
// their strength, and covered non-broadcast vertices get a tinted outline.
std::string export_dot(const Graph& g, const BroadcastAssignment* f = nullptr);

}  // namespace bdom
