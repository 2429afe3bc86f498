#include "kgraph/predicates.hpp"

#include <algorithm>

namespace kgraph {

std::string_view to_string(VertexSetKind kind) {
  switch (kind) {
    case VertexSetKind::Hereditary: return "hereditary";
    case VertexSetKind::Cohereditary: return "cohereditary";
    case VertexSetKind::Saturated: return "saturated";
  }
  return "?";
}

namespace {

void require_vertices(const FiniteKGraph& graph, const std::set<MorphismIndex>& vertices) {
  for (auto v : vertices) {
    if (v >= graph.size() || !graph.is_identity(v)) {
      throw Error(ErrorCode::UnknownId, "index " + std::to_string(v) + " is not a vertex");
    }
  }
}

std::vector<MorphismIndex> exhaustive_candidates(const FiniteKGraph& graph, MorphismIndex v,
                                                 const std::set<MorphismIndex>& inside) {
  std::vector<MorphismIndex> out;
  for (auto lambda : graph.with_range(v)) {
    if (inside.count(graph.source(lambda))) out.push_back(lambda);
  }
  return out;
}

}  // namespace

VertexSetReport vertex_predicate(const FiniteKGraph& graph, const std::set<MorphismIndex>& vertices,
                                 VertexSetKind kind) {
  require_vertices(graph, vertices);
  VertexSetReport report{std::string(to_string(kind)), true, {}};

  auto escaping = [&](bool forward) -> std::optional<MorphismIndex> {
    for (auto lambda : graph.non_identities()) {
      const auto inner = forward ? graph.range(lambda) : graph.source(lambda);
      const auto outer = forward ? graph.source(lambda) : graph.range(lambda);
      if (vertices.count(inner) && !vertices.count(outer)) return lambda;
    }
    return std::nullopt;
  };

  if (kind == VertexSetKind::Cohereditary) {
    if (auto bad = escaping(false)) report = {report.predicate, false, {graph.id(*bad)}};
    return report;
  }
  if (auto bad = escaping(true)) {
    report = {report.predicate, false, {graph.id(*bad)}};
    return report;
  }
  if (kind == VertexSetKind::Hereditary) return report;

  for (auto v : graph.vertices()) {
    if (vertices.count(v)) continue;
    const auto family = exhaustive_candidates(graph, v, vertices);
    if (family.empty() || !is_exhaustive(graph, v, family)) continue;
    std::vector<std::string> witness = {graph.id(v)};
    for (auto lambda : family) witness.push_back(graph.id(lambda));
    return {report.predicate, false, witness};
  }
  return report;
}

VertexSetReport vertex_predicate(const FiniteKGraph& graph, const std::vector<std::string>& vertices,
                                 VertexSetKind kind) {
  std::set<MorphismIndex> indices;
  for (const auto& id : vertices) {
    const auto i = graph.index(id);
    if (!graph.is_identity(i)) throw Error(ErrorCode::UnknownId, "'" + id + "' is not a vertex");
    indices.insert(i);
  }
  return vertex_predicate(graph, indices, kind);
}

bool is_exhaustive(const FiniteKGraph& graph, MorphismIndex v,
                   std::span<const MorphismIndex> family) {
  if (family.empty()) throw Error(ErrorCode::Malformed, "an exhaustive set must be nonempty");
  for (auto lambda : family) {
    if (graph.range(lambda) != v) {
      throw Error(ErrorCode::Malformed,
                  "'" + graph.id(lambda) + "' does not have range '" + graph.id(v) + "'");
    }
  }
  for (auto mu : graph.with_range(v)) {
    bool decidable = false;
    bool met = false;
    for (auto lambda : family) {
      if (!graph.within_bound(graph.degree(mu).join(graph.degree(lambda)))) continue;
      decidable = true;
      if (!mce(graph, mu, lambda).empty()) {
        met = true;
        break;
      }
    }
    if (decidable && !met) return false;
  }
  return true;
}

VertexSetReport no_sources(const FiniteKGraph& graph) {
  VertexSetReport report{"no-sources", true, {}};
  for (std::size_t i = 1; i <= graph.rank(); ++i) {
    const auto e = Degree::unit(graph.rank(), i);
    if (!graph.within_bound(e)) continue;
    for (auto v : graph.vertices()) {
      const auto& out = graph.with_range(v);
      const bool has_edge = std::any_of(out.begin(), out.end(),
                                        [&](MorphismIndex m) { return graph.degree(m) == e; });
      if (!has_edge) return {report.predicate, false, {graph.id(v), e.to_string()}};
    }
  }
  return report;
}

VertexSetReport finitely_aligned(const FiniteKGraph& graph) {
  VertexSetReport report{"finitely-aligned", true, {}};
  for (auto v : graph.vertices()) {
    const auto& out = graph.with_range(v);
    for (std::size_t a = 0; a < out.size(); ++a) {
      for (std::size_t b = a; b < out.size(); ++b) {
        if (!graph.within_bound(graph.degree(out[a]).join(graph.degree(out[b])))) continue;
        // a finite graph can only produce a finite MCE; the size is bounded by |v Lambda|
        if (mce(graph, out[a], out[b]).size() > out.size()) {
          return {report.predicate, false, {graph.id(out[a]), graph.id(out[b])}};
        }
      }
    }
  }
  return report;
}

}  // namespace kgraph
