#include "kgraph/export.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <optional>
#include <sstream>

#include "kgraph/simplex.hpp"

namespace kgraph {

namespace {

const char* edge_style(std::size_t colour) {
  switch (colour) {
    case 1:
      return "solid";
    case 2:
      return "dashed";
    case 3:
      return "dotted";
    default:
      return "bold";
  }
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string format_decimal(const mpq_class& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", q.get_d());
  return buf;
}

// "({..},{..})" of a simplex vertex -> its placing
std::optional<Placing> simplex_vertex(std::string_view id) {
  if (id.size() < 2 || id.front() != '(' || id.back() != ')') return std::nullopt;
  const auto body = id.substr(1, id.size() - 2);
  const auto cut = body.find("},{");
  if (cut == std::string_view::npos) return std::nullopt;
  const auto left = body.substr(0, cut + 1);
  const auto right = body.substr(cut + 2);
  if (left != right) return std::nullopt;
  try {
    return parse_placing(left);
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Vertex g of the simplex sits at phi_g(h(g)).
EmbeddedPoint simplex_point(const Placing& g) {
  const auto h = height(g);
  std::vector<mpq_class> t(h.rank());
  for (std::size_t i = 0; i < h.rank(); ++i) t[i] = h[i];
  return embed(g, t);
}

[[noreturn]] void no_embedding(const std::string& why) { throw Error(ErrorCode::NoEmbedding, why); }

// Coordinates of every vertex, in vertex order, or NoEmbedding.
std::vector<std::vector<mpq_class>> locate(const FiniteKGraph& graph) {
  std::vector<std::vector<mpq_class>> out;
  for (auto v : graph.vertices()) {
    const auto& id = graph.id(v);
    if (auto g = simplex_vertex(id); g && g->size() == 3) {
      out.push_back(simplex_point(*g).coords);
      continue;
    }
    // sphere copy i in {0,1}: chart (x1, x2, +-delta), delta the distance to the boundary
    if (id.size() > 4 && id[0] == '(' && (id[1] == '0' || id[1] == '1') && id[2] == ',') {
      if (auto g = simplex_vertex(std::string_view(id).substr(3, id.size() - 4)); g && g->size() == 3) {
        const auto p = simplex_point(*g).coords;
        mpq_class delta = std::min({p[0], p[1], p[2]});
        if (id[1] == '1') delta = -delta;
        out.push_back({p[1], p[2], delta});
        continue;
      }
    }
    no_embedding("vertex '" + id + "' is not a simplex or sphere vertex of rank 2");
  }
  return out;
}

}  // namespace

std::string export_dot(const FiniteKGraph& graph) {
  std::ostringstream out;
  out << "digraph kgraph {\n";
  for (auto v : graph.vertices()) out << "  " << quoted(graph.id(v)) << ";\n";
  for (auto m : graph.non_identities()) {
    const auto& d = graph.degree(m);
    if (d.total() != 1) continue;
    const auto colour = d.unit_support().front();
    out << "  " << quoted(graph.id(graph.source(m))) << " -> " << quoted(graph.id(graph.range(m)))
        << " [label=" << quoted(graph.id(m)) << ", style=" << edge_style(colour) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_dot(const Skeleton2Graph& skeleton) {
  std::ostringstream out;
  out << "digraph kgraph {\n";
  for (const auto& v : skeleton.vertices()) out << "  " << quoted(v) << ";\n";
  const std::pair<const std::vector<EdgeSpec>*, std::size_t> lists[] = {{&skeleton.blue(), 1},
                                                                         {&skeleton.red(), 2}};
  for (const auto& [edges, colour] : lists) {
    for (const auto& e : *edges) {
      out << "  " << quoted(e.source) << " -> " << quoted(e.range) << " [label=" << quoted(e.id)
          << ", style=" << edge_style(colour) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string export_off(const FiniteKGraph& graph) {
  if (graph.rank() != 2) no_embedding("mesh export needs a 2-graph");
  const auto coords = locate(graph);
  std::vector<std::size_t> position(graph.size());
  for (std::size_t i = 0; i < graph.vertices().size(); ++i) position[graph.vertices()[i]] = i;

  std::vector<std::array<std::size_t, 4>> quads;
  const Degree top{1, 1};
  for (auto m : graph.non_identities()) {
    if (graph.degree(m) != top) continue;
    const auto first = factorise(graph, m, Degree{1, 0}).head;
    const auto second = factorise(graph, m, Degree{0, 1}).head;
    quads.push_back({position[graph.range(m)], position[graph.source(first)],
                     position[graph.source(m)], position[graph.source(second)]});
  }

  std::ostringstream out;
  out << "OFF\n" << coords.size() << ' ' << quads.size() << " 0\n";
  for (const auto& p : coords) {
    out << format_decimal(p[0]) << ' ' << format_decimal(p[1]) << ' ' << format_decimal(p[2]) << '\n';
  }
  for (const auto& q : quads) out << "4 " << q[0] << ' ' << q[1] << ' ' << q[2] << ' ' << q[3] << '\n';
  return out.str();
}

std::string export_off(const Skeleton2Graph&) {
  no_embedding("skeleton models carry no coordinates");
}

}  // namespace kgraph
