#include "bdom/broadcast.hpp"

#include <algorithm>
#include <sstream>

#include "bdom/error.hpp"

namespace bdom {

namespace {

void check_strength(int vertex, int strength) {
  if (strength < 1) {
    std::ostringstream msg;
    msg << "broadcast strength for vertex " << vertex + 1
        << " must be >= 1 (got " << strength << ")";
    raise(ErrorCode::InvalidArgument, msg.str());
  }
  if (vertex < 0) {
    std::ostringstream msg;
    msg << "broadcast vertex index " << vertex << " is negative";
    raise(ErrorCode::InvalidVertex, msg.str());
  }
}

}  // namespace

BroadcastAssignment BroadcastAssignment::from_entries(
    std::vector<BroadcastEntry> entries) {
  std::sort(entries.begin(), entries.end());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    check_strength(entries[i].vertex, entries[i].strength);
    if (i > 0 && entries[i].vertex == entries[i - 1].vertex) {
      std::ostringstream msg;
      msg << "duplicate broadcast vertex " << entries[i].vertex + 1;
      raise(ErrorCode::InvalidVertex, msg.str());
    }
  }
  BroadcastAssignment f;
  f.entries_ = std::move(entries);
  return f;
}

void BroadcastAssignment::set(int vertex, int strength) {
  auto pos = std::lower_bound(
      entries_.begin(), entries_.end(), vertex,
      [](const BroadcastEntry& e, int v) { return e.vertex < v; });
  if (strength == 0) {
    if (pos != entries_.end() && pos->vertex == vertex) entries_.erase(pos);
    return;
  }
  check_strength(vertex, strength);
  if (pos != entries_.end() && pos->vertex == vertex) {
    pos->strength = strength;
  } else {
    entries_.insert(pos, BroadcastEntry{vertex, strength});
  }
}

std::optional<int> BroadcastAssignment::strength_of(int vertex) const {
  auto pos = std::lower_bound(
      entries_.begin(), entries_.end(), vertex,
      [](const BroadcastEntry& e, int v) { return e.vertex < v; });
  if (pos != entries_.end() && pos->vertex == vertex) return pos->strength;
  return std::nullopt;
}

int BroadcastAssignment::cost() const {
  int total = 0;
  for (const auto& e : entries_) total += e.strength;
  return total;
}

CoverageReport coverage(const Graph& g, const BroadcastAssignment& f) {
  const int n = g.vertex_count();
  for (const auto& e : f.entries()) {
    if (e.vertex >= n) {
      std::ostringstream msg;
      msg << "broadcast vertex " << e.vertex + 1
          << " does not exist in a graph on " << n << " vertices";
      raise(ErrorCode::InvalidVertex, msg.str());
    }
  }

  CoverageReport report;
  report.coverage_count.assign(static_cast<std::size_t>(n), 0);

  // Truncated BFS from each broadcast vertex, depth capped at its strength.
  std::vector<int> depth(static_cast<std::size_t>(n));
  std::vector<int> queue;
  std::vector<char> seen(static_cast<std::size_t>(n));
  for (const auto& e : f.entries()) {
    std::fill(seen.begin(), seen.end(), 0);
    queue.clear();
    queue.push_back(e.vertex);
    seen[static_cast<std::size_t>(e.vertex)] = 1;
    depth[static_cast<std::size_t>(e.vertex)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      ++report.coverage_count[static_cast<std::size_t>(u)];
      const int du = depth[static_cast<std::size_t>(u)];
      if (du == e.strength) continue;
      for (int w : g.neighbors(u)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          depth[static_cast<std::size_t>(w)] = du + 1;
          queue.push_back(w);
        }
      }
    }
  }

  report.is_dominating = true;
  report.is_efficient = true;
  for (int v = 0; v < n; ++v) {
    const int c = report.coverage_count[static_cast<std::size_t>(v)];
    if (c == 0) {
      report.uncovered.push_back(v);
      report.is_dominating = false;
    }
    if (c != 1) report.is_efficient = false;
  }
  return report;
}

}  // namespace bdom
