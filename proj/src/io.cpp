#include "stag/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

#include "stag/error.hpp"

namespace stag {
namespace {

using json = nlohmann::ordered_json;

class Builder {
 public:
  VertexId vertex(const std::string& token) {
    if (auto it = ids_.find(token); it != ids_.end()) return it->second;
    const VertexId v = graph_.add_vertex(token);
    ids_.emplace(token, v);
    return v;
  }

  std::optional<VertexId> lookup(const std::string& token) const {
    if (auto it = ids_.find(token); it != ids_.end()) return it->second;
    return std::nullopt;
  }

  void edge(int line, VertexId u, VertexId v) {
    if (u == v) throw ParseError(line, "self-loop at '" + graph_.name(u) + "'");
    if (graph_.adjacent(u, v))
      throw ParseError(line, "duplicate edge '" + graph_.name(u) + " " + graph_.name(v) + "'");
    graph_.add_edge(u, v);
  }

  Graph finish() && {
    if (graph_.vertex_count() == 0) throw ParseError(0, "empty graph");
    return std::move(graph_);
  }

 private:
  Graph graph_;
  std::unordered_map<std::string, VertexId> ids_;
};

Graph parse_edge_list(std::string_view text) {
  Builder b;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::vector<std::string> parts;
    for (std::string t; tokens >> t;) parts.push_back(t);
    if (parts.empty() || parts.front().front() == '#') continue;
    if (parts.size() == 1) {
      b.vertex(parts[0]);
    } else if (parts.size() == 2) {
      const VertexId u = b.vertex(parts[0]);
      const VertexId v = b.vertex(parts[1]);
      b.edge(line_no, u, v);
    } else {
      throw ParseError(line_no, "expected 'u v', got " + std::to_string(parts.size()) + " tokens");
    }
  }
  return std::move(b).finish();
}

std::string json_token(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_number()) return j.dump();
  throw ParseError(0, "vertex token must be a string or a number");
}

Graph parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError(0, "expected a JSON object");

  Builder b;
  if (doc.contains("vertices")) {
    const auto& vs = doc.at("vertices");
    if (!vs.is_array()) throw ParseError(0, "'vertices' must be an array");
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const auto& v = vs[i];
      const bool named = v.is_string() || v.is_number();
      const std::string token = named ? json_token(v) : std::to_string(i);
      if (b.lookup(token)) throw ParseError(0, "duplicate vertex '" + token + "'");
      b.vertex(token);
    }
  }
  const bool declared = doc.contains("vertices");
  if (doc.contains("edges")) {
    const auto& es = doc.at("edges");
    if (!es.is_array()) throw ParseError(0, "'edges' must be an array");
    int index = 0;
    for (const auto& e : es) {
      ++index;
      if (!e.is_array() || e.size() != 2)
        throw ParseError(index, "edge entry must be a two-element array");
      VertexId ends[2];
      for (int k = 0; k < 2; ++k) {
        const std::string token = json_token(e[static_cast<std::size_t>(k)]);
        if (auto id = b.lookup(token)) {
          ends[k] = *id;
        } else if (declared && e[static_cast<std::size_t>(k)].is_number_integer()) {
          const auto i = e[static_cast<std::size_t>(k)].get<long long>();
          const auto count = static_cast<long long>(doc.at("vertices").size());
          if (i < 0 || i >= count) throw ParseError(index, "vertex index out of range");
          ends[k] = static_cast<VertexId>(i);
        } else if (declared) {
          throw ParseError(index, "unknown vertex '" + token + "'");
        } else {
          ends[k] = b.vertex(token);
        }
      }
      b.edge(index, ends[0], ends[1]);
    }
  }
  return std::move(b).finish();
}

bool has_space(const std::string& s) {
  return s.empty() || s.find_first_of(" \t\r\n") != std::string::npos || s.front() == '#';
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::EdgeList: return parse_edge_list(text);
    case GraphFormat::Json: return parse_json(text);
    case GraphFormat::Dot: break;
  }
  throw ParseError(0, "DOT is an export-only format");
}

GraphFormat format_from_path(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".json") return GraphFormat::Json;
  if (ext == ".dot" || ext == ".gv") return GraphFormat::Dot;
  return GraphFormat::EdgeList;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path.string() + "'");
  out << contents;
}

Graph read_graph_file(const std::filesystem::path& path) {
  return parse_graph(read_text_file(path), format_from_path(path));
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (has_space(g.name(v)))
      throw Error(ErrorKind::InvalidArgument, "vertex name not representable in an edge list");
    if (g.degree(v) == 0) out += g.name(v) + "\n";
  }
  for (const auto& e : g.edges()) out += g.name(e.u) + " " + g.name(e.v) + "\n";
  return out;
}

std::string to_json(const Graph& g) {
  json doc;
  doc["vertices"] = g.names();
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({g.name(e.u), g.name(e.v)});
  doc["edges"] = std::move(edges);
  return doc.dump() + "\n";
}

std::string to_dot(const Graph& g, const std::vector<std::string>& tooltips) {
  std::string out = "graph G {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out += "  " + dot_quote(g.name(v));
    if (static_cast<std::size_t>(v) < tooltips.size())
      out += " [tooltip=" + dot_quote(tooltips[static_cast<std::size_t>(v)]) + "]";
    out += ";\n";
  }
  for (const auto& e : g.edges())
    out += "  " + dot_quote(g.name(e.u)) + " -- " + dot_quote(g.name(e.v)) +
           " [label=\"" + std::to_string(e.id) + "\"];\n";
  return out + "}\n";
}

std::string serialize(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::EdgeList: return to_edge_list(g);
    case GraphFormat::Json: return to_json(g);
    case GraphFormat::Dot: return to_dot(g);
  }
  return {};
}

}  // namespace stag
