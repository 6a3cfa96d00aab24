#include "bdom/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "bdom/error.hpp"

namespace bdom {

const char* role_name(Role r) {
  switch (r) {
    case Role::Plain:
      return "plain";
    case Role::Base:
      return "base";
    case Role::Pendant:
      return "pendant";
    case Role::Leaf:
      return "leaf";
  }
  return "plain";
}

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges,
             std::vector<Role> roles, std::optional<FamilySpec> family)
    : roles_(std::move(roles)), family_(std::move(family)) {
  if (vertex_count < 1) {
    raise(ErrorCode::InvalidArgument, "graph requires at least one vertex");
  }
  if (!roles_.empty() && static_cast<int>(roles_.size()) != vertex_count) {
    raise(ErrorCode::InvalidArgument,
          "role list size must match the vertex count");
  }
  adjacency_.assign(static_cast<std::size_t>(vertex_count), {});

  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count) {
      std::ostringstream msg;
      msg << "edge (" << a + 1 << "," << b + 1 << ") out of range for a graph on "
          << vertex_count << " vertices";
      raise(ErrorCode::InvalidEdge, msg.str());
    }
    if (a == b) {
      std::ostringstream msg;
      msg << "self-loop at vertex " << a + 1;
      raise(ErrorCode::InvalidEdge, msg.str());
    }
    const auto key = std::minmax(a, b);
    if (!seen.insert(key).second) {
      std::ostringstream msg;
      msg << "duplicate edge (" << key.first + 1 << "," << key.second + 1 << ")";
      raise(ErrorCode::InvalidEdge, msg.str());
    }
    adjacency_[static_cast<std::size_t>(a)].push_back(b);
    adjacency_[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
  }
  edge_count_ = seen.size();
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count()) {
    std::ostringstream msg;
    msg << "vertex index " << v << " out of range for a graph on "
        << vertex_count() << " vertices";
    raise(ErrorCode::InvalidVertex, msg.str());
  }
}

std::span<const int> Graph::neighbors(int v) const {
  check_vertex(v);
  const auto& list = adjacency_[static_cast<std::size_t>(v)];
  return {list.data(), list.size()};
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size());
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& list = adjacency_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : adjacency_[static_cast<std::size_t>(u)]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;  // already sorted: u ascending, then v ascending
}

Role Graph::role(int v) const {
  check_vertex(v);
  if (roles_.empty()) return Role::Plain;
  return roles_[static_cast<std::size_t>(v)];
}

bool Graph::has_role_tags() const {
  return std::any_of(roles_.begin(), roles_.end(),
                     [](Role r) { return r != Role::Plain; });
}

bool Graph::operator==(const Graph& other) const {
  if (adjacency_ != other.adjacency_) return false;
  if (family_ != other.family_) return false;
  auto role_at = [](const std::vector<Role>& roles, std::size_t i) {
    return roles.empty() ? Role::Plain : roles[i];
  };
  for (std::size_t i = 0; i < adjacency_.size(); ++i) {
    if (role_at(roles_, i) != role_at(other.roles_, i)) return false;
  }
  return true;
}

std::vector<int> distances(const Graph& g, int source) {
  if (source < 0 || source >= g.vertex_count()) {
    std::ostringstream msg;
    msg << "source vertex index " << source << " out of range for a graph on "
        << g.vertex_count() << " vertices";
    raise(ErrorCode::InvalidVertex, msg.str());
  }
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> queue;
  queue.reserve(dist.size());
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    const int du = dist[static_cast<std::size_t>(u)];
    for (int w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = du + 1;
        queue.push_back(w);
      }
    }
  }
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (dist[v] < 0) {
      std::ostringstream msg;
      msg << "vertex " << v + 1 << " is unreachable from vertex " << source + 1
          << "; operations require a connected graph";
      raise(ErrorCode::UnreachableVertex, msg.str());
    }
  }
  return dist;
}

EccentricityProfile metrics(const Graph& g) {
  EccentricityProfile profile;
  profile.eccentricity.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto dist = distances(g, v);
    profile.eccentricity.push_back(*std::max_element(dist.begin(), dist.end()));
  }
  profile.radius = *std::min_element(profile.eccentricity.begin(),
                                     profile.eccentricity.end());
  profile.diameter = *std::max_element(profile.eccentricity.begin(),
                                       profile.eccentricity.end());
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (profile.eccentricity[static_cast<std::size_t>(v)] == profile.radius) {
      profile.center.push_back(v);
    }
  }
  return profile;
}

}  // namespace bdom
