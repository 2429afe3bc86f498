#include "kgraph/constructions.hpp"

#include <algorithm>
#include <map>

namespace kgraph {

std::string pair_id(std::string_view first, std::string_view second) {
  std::string out;
  out.reserve(first.size() + second.size() + 3);
  out += '(';
  out += first;
  out += ',';
  out += second;
  out += ')';
  return out;
}

FiniteKGraph discrete_graph(std::size_t rank, std::vector<std::string> vertex_ids) {
  return FiniteKGraph(rank, std::move(vertex_ids), {}, {});
}

namespace {

// Bound to use for one side of a product or union when the other side is
// truncated: an untruncated finite graph is its own truncation at max degree.
Degree effective_bound(const FiniteKGraph& g) {
  return g.degree_bound() ? *g.degree_bound() : g.max_degree();
}

}  // namespace

FiniteKGraph cartesian_product(const FiniteKGraph& left, const FiniteKGraph& right) {
  const std::size_t rank = left.rank() + right.rank();
  std::vector<std::string> vertices;
  for (auto v : left.vertices()) {
    for (auto w : right.vertices()) vertices.push_back(pair_id(left.id(v), right.id(w)));
  }
  std::vector<MorphismSpec> morphisms;
  for (MorphismIndex a = 0; a < left.size(); ++a) {
    for (MorphismIndex b = 0; b < right.size(); ++b) {
      if (left.is_identity(a) && right.is_identity(b)) continue;
      morphisms.push_back({pair_id(left.id(a), right.id(b)), left.degree(a).concat(right.degree(b)),
                           pair_id(left.id(left.range(a)), right.id(right.range(b))),
                           pair_id(left.id(left.source(a)), right.id(right.source(b)))});
    }
  }
  std::vector<CompositionSpec> table;
  for (const auto& x : left.composites()) {
    for (const auto& y : right.composites()) {
      const bool left_id = left.is_identity(x.left) && right.is_identity(y.left);
      const bool right_id = left.is_identity(x.right) && right.is_identity(y.right);
      if (left_id || right_id) continue;
      table.push_back({pair_id(left.id(x.left), right.id(y.left)),
                       pair_id(left.id(x.right), right.id(y.right)),
                       pair_id(left.id(x.result), right.id(y.result))});
    }
  }
  std::optional<Degree> bound;
  if (left.degree_bound() || right.degree_bound()) {
    bound = effective_bound(left).concat(effective_bound(right));
  }
  return FiniteKGraph(rank, std::move(vertices), std::move(morphisms), std::move(table),
                      std::move(bound));
}

FiniteKGraph disjoint_union(const FiniteKGraph& first, const FiniteKGraph& second) {
  if (first.rank() != second.rank()) {
    throw Error(ErrorCode::RankMismatch, "cannot unite a " + std::to_string(first.rank()) +
                                             "-graph with a " + std::to_string(second.rank()) +
                                             "-graph");
  }
  if (first.degree_bound() != second.degree_bound()) {
    throw Error(ErrorCode::RankMismatch, "operands are truncated at different bounds");
  }
  std::vector<std::string> vertices;
  std::vector<MorphismSpec> morphisms;
  std::vector<CompositionSpec> table;
  const std::pair<const FiniteKGraph*, const char*> parts[] = {{&first, "0"}, {&second, "1"}};
  for (const auto& [g, tag] : parts) {
    for (const auto& v : g->vertex_ids()) vertices.push_back(pair_id(tag, v));
    for (auto m : g->morphism_specs()) {
      morphisms.push_back({pair_id(tag, m.id), m.degree, pair_id(tag, m.range),
                           pair_id(tag, m.source)});
    }
    for (const auto& c : g->composition_table()) {
      table.push_back({pair_id(tag, c.left), pair_id(tag, c.right), pair_id(tag, c.result)});
    }
  }
  return FiniteKGraph(first.rank(), std::move(vertices), std::move(morphisms), std::move(table),
                      first.degree_bound());
}

FiniteKGraph subgraph(const FiniteKGraph& graph, const std::set<MorphismIndex>& morphisms) {
  std::vector<std::string> vertices;
  std::vector<MorphismSpec> specs;
  for (auto m : morphisms) {
    if (m >= graph.size()) throw Error(ErrorCode::UnknownId, "index out of range");
    if (!morphisms.count(graph.range(m)) || !morphisms.count(graph.source(m))) {
      throw Error(ErrorCode::Malformed, "subgraph omits an endpoint of '" + graph.id(m) + "'");
    }
    if (graph.is_identity(m)) {
      vertices.push_back(graph.id(m));
    } else {
      specs.push_back({graph.id(m), graph.degree(m), graph.id(graph.range(m)),
                       graph.id(graph.source(m))});
    }
  }
  std::vector<CompositionSpec> table;
  for (const auto& c : graph.composites()) {
    if (graph.is_identity(c.left) || graph.is_identity(c.right)) continue;
    if (!morphisms.count(c.left) || !morphisms.count(c.right)) continue;
    if (!morphisms.count(c.result)) {
      throw Error(ErrorCode::Malformed, "subgraph is not closed: '" + graph.id(c.left) + "' . '" +
                                            graph.id(c.right) + "' leaves it");
    }
    table.push_back({graph.id(c.left), graph.id(c.right), graph.id(c.result)});
  }
  return FiniteKGraph(graph.rank(), std::move(vertices), std::move(specs), std::move(table),
                      graph.degree_bound());
}

FiniteKGraph path_category(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges,
                           std::optional<std::size_t> max_length) {
  struct Path {
    std::vector<std::size_t> edges;
    std::string range;
    std::string source;
  };
  auto path_name = [&](const std::vector<std::size_t>& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) s += '.';
      s += edges[p[i]].id;
    }
    return s;
  };

  std::vector<Path> paths;
  std::vector<Path> frontier;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    frontier.push_back({{e}, edges[e].range, edges[e].source});
  }
  std::size_t length = 1;
  while (!frontier.empty()) {
    if (max_length && length > *max_length) break;
    if (!max_length && length > edges.size()) {
      throw Error(ErrorCode::Malformed, "directed graph has a cycle; a length bound is required");
    }
    std::vector<Path> next;
    for (const auto& p : frontier) {
      paths.push_back(p);
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (edges[e].range != p.source) continue;
        Path q = p;
        q.edges.push_back(e);
        q.source = edges[e].source;
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
    ++length;
  }

  std::map<std::vector<std::size_t>, std::string> names;
  std::vector<MorphismSpec> specs;
  for (const auto& p : paths) {
    names.emplace(p.edges, path_name(p.edges));
    specs.push_back({path_name(p.edges), Degree{static_cast<Degree::value_type>(p.edges.size())},
                     p.range, p.source});
  }
  std::vector<CompositionSpec> table;
  for (const auto& a : paths) {
    for (const auto& b : paths) {
      if (a.source != b.range) continue;
      auto joined = a.edges;
      joined.insert(joined.end(), b.edges.begin(), b.edges.end());
      auto it = names.find(joined);
      if (it == names.end()) continue;  // beyond the truncation
      table.push_back({names.at(a.edges), names.at(b.edges), it->second});
    }
  }
  std::optional<Degree> bound;
  if (max_length) bound = Degree{static_cast<Degree::value_type>(*max_length)};
  return FiniteKGraph(1, std::move(vertices), std::move(specs), std::move(table), std::move(bound));
}

}  // namespace kgraph
