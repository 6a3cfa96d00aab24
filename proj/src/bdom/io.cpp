#include "bdom/io.hpp"

#include <charconv>
#include <sstream>

#include "bdom/error.hpp"
#include "json.hpp"

namespace bdom {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    const std::size_t limit = std::min<std::size_t>(
        e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') ++line;
    }
    std::ostringstream msg;
    msg << "malformed JSON at line " << line << ": " << e.what();
    raise(ErrorCode::ParseError, msg.str());
  }
}

const json& require_field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    std::ostringstream msg;
    msg << "missing required field \"" << key << "\"";
    raise(ErrorCode::ParseError, msg.str());
  }
  return *it;
}

void require_version(const json& doc) {
  const json& version = require_field(doc, "version");
  if (!version.is_string() || version.get<std::string>() != "1") {
    raise(ErrorCode::ParseError, "unsupported document version (expected \"1\")");
  }
}

int require_int(const json& value, const char* what) {
  if (!value.is_number_integer()) {
    std::ostringstream msg;
    msg << what << " must be an integer";
    raise(ErrorCode::ParseError, msg.str());
  }
  return value.get<int>();
}

// Vertex labels appear as JSON object keys; they must be plain positive
// decimal integers.
int parse_label(const std::string& key) {
  int label = 0;
  const char* first = key.data();
  const char* last = key.data() + key.size();
  auto [ptr, ec] = std::from_chars(first, last, label);
  if (ec != std::errc{} || ptr != last || label < 1) {
    std::ostringstream msg;
    msg << "\"" << key << "\" is not a valid 1-based vertex label";
    raise(ErrorCode::ParseError, msg.str());
  }
  return label;
}

json family_to_json(const FamilySpec& spec) {
  json out;
  out["kind"] = kind_name(kind_of(spec));
  std::visit(
      [&out](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SunletDeg>) {
          out["m"] = s.m;
          out["n"] = s.n;
        } else if constexpr (std::is_same_v<T, GeneralizedSunlet>) {
          out["m"] = s.m;
          out["lengths"] = s.lengths;
        } else {
          out["n"] = s.n;
        }
      },
      spec);
  return out;
}

FamilySpec family_from_json(const json& obj) {
  if (!obj.is_object()) {
    raise(ErrorCode::ParseError, "family must be a JSON object");
  }
  const json& kind = require_field(obj, "kind");
  if (!kind.is_string()) {
    raise(ErrorCode::ParseError, "family kind must be a string");
  }
  const std::string name = kind.get<std::string>();
  FamilySpec spec;
  if (name == "path") {
    spec = Path{require_int(require_field(obj, "n"), "family n")};
  } else if (name == "cycle") {
    spec = Cycle{require_int(require_field(obj, "n"), "family n")};
  } else if (name == "sunlet") {
    spec = Sunlet{require_int(require_field(obj, "n"), "family n")};
  } else if (name == "sunlet-deg") {
    spec = SunletDeg{require_int(require_field(obj, "m"), "family m"),
                     require_int(require_field(obj, "n"), "family n")};
  } else if (name == "gen-sunlet") {
    GeneralizedSunlet s;
    s.m = require_int(require_field(obj, "m"), "family m");
    const json& lengths = require_field(obj, "lengths");
    if (!lengths.is_array()) {
      raise(ErrorCode::ParseError, "family lengths must be an array");
    }
    for (const auto& len : lengths) {
      s.lengths.push_back(require_int(len, "family branch length"));
    }
    spec = std::move(s);
  } else {
    std::ostringstream msg;
    msg << "unknown family kind \"" << name << "\"";
    raise(ErrorCode::ParseError, msg.str());
  }
  validate(spec);
  return spec;
}

Role role_from_string(const std::string& name) {
  if (name == "base") return Role::Base;
  if (name == "pendant") return Role::Pendant;
  if (name == "leaf") return Role::Leaf;
  if (name == "plain") return Role::Plain;
  std::ostringstream msg;
  msg << "unknown role \"" << name << "\"";
  raise(ErrorCode::ParseError, msg.str());
}

}  // namespace

Graph read_graph(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) {
    raise(ErrorCode::ParseError, "graph document must be a JSON object");
  }
  require_version(doc);

  const int n = require_int(require_field(doc, "n"), "vertex count n");
  if (n < 1) {
    raise(ErrorCode::ParseError, "vertex count n must be >= 1");
  }

  const json& edges_json = require_field(doc, "edges");
  if (!edges_json.is_array()) {
    raise(ErrorCode::ParseError, "edges must be an array of [u,v] pairs");
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(edges_json.size());
  for (const auto& e : edges_json) {
    if (!e.is_array() || e.size() != 2) {
      raise(ErrorCode::ParseError, "edges must be an array of [u,v] pairs");
    }
    // 1-based labels in the document; range, self-loop and duplicate
    // violations surface as InvalidEdge from the Graph constructor.
    edges.emplace_back(require_int(e[0], "edge endpoint") - 1,
                       require_int(e[1], "edge endpoint") - 1);
  }

  std::vector<Role> roles;
  if (auto it = doc.find("roles"); it != doc.end()) {
    if (!it->is_object()) {
      raise(ErrorCode::ParseError, "roles must be an object of label -> role");
    }
    roles.assign(static_cast<std::size_t>(n), Role::Plain);
    for (const auto& [key, value] : it->items()) {
      const int label = parse_label(key);
      if (label > n) {
        std::ostringstream msg;
        msg << "role entry for vertex " << label
            << " exceeds the vertex count " << n;
        raise(ErrorCode::ParseError, msg.str());
      }
      if (!value.is_string()) {
        raise(ErrorCode::ParseError, "roles must map labels to role strings");
      }
      roles[static_cast<std::size_t>(label - 1)] =
          role_from_string(value.get<std::string>());
    }
  }

  std::optional<FamilySpec> family;
  if (auto it = doc.find("family"); it != doc.end()) {
    family = family_from_json(*it);
  }

  return Graph(n, edges, std::move(roles), std::move(family));
}

std::string write_graph(const Graph& g) {
  json doc;
  doc["version"] = "1";
  doc["n"] = g.vertex_count();
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) {
    edges.push_back(json::array({u + 1, v + 1}));
  }
  doc["edges"] = std::move(edges);
  if (g.has_role_tags()) {
    json roles = json::object();
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.role(v) != Role::Plain) {
        roles[std::to_string(v + 1)] = role_name(g.role(v));
      }
    }
    doc["roles"] = std::move(roles);
  }
  if (g.family()) {
    doc["family"] = family_to_json(*g.family());
  }
  return doc.dump(2) + "\n";
}

BroadcastAssignment read_broadcast(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) {
    raise(ErrorCode::ParseError, "broadcast document must be a JSON object");
  }
  require_version(doc);

  const json& assignments = require_field(doc, "assignments");
  if (!assignments.is_object()) {
    raise(ErrorCode::ParseError,
          "assignments must be an object of label -> strength");
  }
  std::vector<BroadcastEntry> entries;
  int sum = 0;
  for (const auto& [key, value] : assignments.items()) {
    const int label = parse_label(key);
    const int strength = require_int(value, "strength");
    if (strength < 1) {
      std::ostringstream msg;
      msg << "strength for vertex " << label << " must be >= 1 (got "
          << strength << ")";
      raise(ErrorCode::ParseError, msg.str());
    }
    entries.push_back(BroadcastEntry{label - 1, strength});
    sum += strength;
  }

  const int declared = require_int(require_field(doc, "cost"), "cost");
  if (declared != sum) {
    std::ostringstream msg;
    msg << "declared cost " << declared << " does not match the strength sum "
        << sum;
    raise(ErrorCode::ParseError, msg.str());
  }
  return BroadcastAssignment::from_entries(std::move(entries));
}

std::string write_broadcast(const BroadcastAssignment& f) {
  json doc;
  doc["version"] = "1";
  json assignments = json::object();
  for (const auto& e : f.entries()) {
    assignments[std::to_string(e.vertex + 1)] = e.strength;
  }
  doc["assignments"] = std::move(assignments);
  doc["cost"] = f.cost();
  return doc.dump(2) + "\n";
}

FamilySpec family_from_json_text(std::string_view text) {
  return family_from_json(parse_json(text));
}

std::string family_to_json_text(const FamilySpec& spec) {
  return family_to_json(spec).dump();
}

std::string export_dot(const Graph& g, const BroadcastAssignment* f) {
  std::vector<int> counts;
  if (f) counts = coverage(g, *f).coverage_count;

  std::ostringstream out;
  out << "graph G {\n";
  out << "  node [shape=circle, fontsize=12];\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v + 1 << " [label=\"" << v + 1 << "\"";
    if (f) {
      if (auto strength = f->strength_of(v)) {
        out << ", style=filled, fillcolor=\"#6baed6\", xlabel=\"" << *strength
            << "\"";
      } else if (counts[static_cast<std::size_t>(v)] > 0) {
        out << ", color=\"#c26d60\"";
      }
    }
    out << "];\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out << "  " << u + 1 << " -- " << v + 1 << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bdom
