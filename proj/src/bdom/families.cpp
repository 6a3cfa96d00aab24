#include "bdom/families.hpp"

#include <numeric>
#include <sstream>

#include "bdom/error.hpp"

namespace bdom {

FamilyKind kind_of(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Path>) return FamilyKind::Path;
        if constexpr (std::is_same_v<T, Cycle>) return FamilyKind::Cycle;
        if constexpr (std::is_same_v<T, Sunlet>) return FamilyKind::Sunlet;
        if constexpr (std::is_same_v<T, SunletDeg>) return FamilyKind::SunletDeg;
        if constexpr (std::is_same_v<T, GeneralizedSunlet>)
          return FamilyKind::GeneralizedSunlet;
      },
      spec);
}

const char* kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Path:
      return "path";
    case FamilyKind::Cycle:
      return "cycle";
    case FamilyKind::Sunlet:
      return "sunlet";
    case FamilyKind::SunletDeg:
      return "sunlet-deg";
    case FamilyKind::GeneralizedSunlet:
      return "gen-sunlet";
  }
  return "?";
}

std::string family_label(const FamilySpec& spec) {
  std::ostringstream out;
  std::visit(
      [&out](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Path>) {
          out << "path n=" << s.n;
        } else if constexpr (std::is_same_v<T, Cycle>) {
          out << "cycle n=" << s.n;
        } else if constexpr (std::is_same_v<T, Sunlet>) {
          out << "sunlet n=" << s.n;
        } else if constexpr (std::is_same_v<T, SunletDeg>) {
          out << "sunlet-deg m=" << s.m << " n=" << s.n;
        } else {
          out << "gen-sunlet m=" << s.m << " lengths=";
          for (std::size_t i = 0; i < s.lengths.size(); ++i) {
            if (i) out << ",";
            out << s.lengths[i];
          }
        }
      },
      spec);
  return out.str();
}

namespace {

[[noreturn]] void bound_error(const std::string& what) {
  raise(ErrorCode::InvalidFamilyParameter, what);
}

}  // namespace

void validate(const FamilySpec& spec) {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        std::ostringstream msg;
        if constexpr (std::is_same_v<T, Path>) {
          if (s.n < 1) {
            msg << "path requires n >= 1 (got n=" << s.n << ")";
            bound_error(msg.str());
          }
        } else if constexpr (std::is_same_v<T, Cycle>) {
          if (s.n < 3) {
            msg << "cycle requires n >= 3 (got n=" << s.n << ")";
            bound_error(msg.str());
          }
        } else if constexpr (std::is_same_v<T, Sunlet>) {
          if (s.n < 3) {
            msg << "sunlet requires n >= 3 (got n=" << s.n << ")";
            bound_error(msg.str());
          }
        } else if constexpr (std::is_same_v<T, SunletDeg>) {
          if (s.m < 3) {
            msg << "sunlet-deg requires cycle size m >= 3 (got m=" << s.m << ")";
            bound_error(msg.str());
          }
          if (s.n < 1) {
            msg << "sunlet-deg requires branch length n >= 1 (got n=" << s.n
                << ")";
            bound_error(msg.str());
          }
        } else {
          if (s.m < 3) {
            msg << "gen-sunlet requires cycle size m >= 3 (got m=" << s.m << ")";
            bound_error(msg.str());
          }
          if (static_cast<int>(s.lengths.size()) != s.m) {
            msg << "gen-sunlet requires exactly m=" << s.m
                << " branch lengths (got " << s.lengths.size() << ")";
            bound_error(msg.str());
          }
          for (int len : s.lengths) {
            if (len < 0) {
              msg << "gen-sunlet branch lengths must be >= 0 (got " << len
                  << ")";
              bound_error(msg.str());
            }
          }
        }
      },
      spec);
}

namespace {

Graph build_path(const Path& s) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < s.n; ++i) edges.emplace_back(i, i + 1);
  return Graph(s.n, edges, {}, FamilySpec(s));
}

Graph build_cycle(const Cycle& s) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < s.n; ++i) edges.emplace_back(i, (i + 1) % s.n);
  return Graph(s.n, edges, {}, FamilySpec(s));
}

Graph build_sunlet(const Sunlet& s) {
  // Cycle on 0..n-1, pendant vertex n+i attached to base i.
  std::vector<std::pair<int, int>> edges;
  std::vector<Role> roles(static_cast<std::size_t>(2 * s.n), Role::Base);
  for (int i = 0; i < s.n; ++i) {
    edges.emplace_back(i, (i + 1) % s.n);
    edges.emplace_back(i, s.n + i);
    roles[static_cast<std::size_t>(s.n + i)] = Role::Leaf;
  }
  return Graph(2 * s.n, edges, std::move(roles), FamilySpec(s));
}

Graph build_sunlet_deg(const SunletDeg& s) {
  // Bases 0..m-1 in cycle order; branch i occupies m + i*n .. m + i*n + n-1,
  // listed base-outward.
  const int total = s.m * (s.n + 1);
  std::vector<std::pair<int, int>> edges;
  std::vector<Role> roles(static_cast<std::size_t>(total), Role::Base);
  for (int i = 0; i < s.m; ++i) {
    edges.emplace_back(i, (i + 1) % s.m);
    int prev = i;
    for (int p = 0; p < s.n; ++p) {
      const int v = s.m + i * s.n + p;
      edges.emplace_back(prev, v);
      roles[static_cast<std::size_t>(v)] =
          (p + 1 == s.n) ? Role::Leaf : Role::Pendant;
      prev = v;
    }
  }
  return Graph(total, edges, std::move(roles), FamilySpec(s));
}

Graph build_generalized_sunlet(const GeneralizedSunlet& s) {
  const int total =
      s.m + std::accumulate(s.lengths.begin(), s.lengths.end(), 0);
  std::vector<std::pair<int, int>> edges;
  std::vector<Role> roles(static_cast<std::size_t>(total), Role::Base);
  int next = s.m;
  for (int i = 0; i < s.m; ++i) {
    edges.emplace_back(i, (i + 1) % s.m);
    int prev = i;
    for (int p = 0; p < s.lengths[static_cast<std::size_t>(i)]; ++p) {
      const int v = next++;
      edges.emplace_back(prev, v);
      roles[static_cast<std::size_t>(v)] =
          (p + 1 == s.lengths[static_cast<std::size_t>(i)]) ? Role::Leaf
                                                            : Role::Pendant;
      prev = v;
    }
  }
  return Graph(total, edges, std::move(roles), FamilySpec(s));
}

}  // namespace

Graph generate(const FamilySpec& spec) {
  validate(spec);
  return std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Path>) return build_path(s);
        if constexpr (std::is_same_v<T, Cycle>) return build_cycle(s);
        if constexpr (std::is_same_v<T, Sunlet>) return build_sunlet(s);
        if constexpr (std::is_same_v<T, SunletDeg>) return build_sunlet_deg(s);
        if constexpr (std::is_same_v<T, GeneralizedSunlet>)
          return build_generalized_sunlet(s);
      },
      spec);
}

}  // namespace bdom
