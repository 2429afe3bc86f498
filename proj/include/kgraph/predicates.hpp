#ifndef KGRAPH_PREDICATES_HPP
#define KGRAPH_PREDICATES_HPP

#include <set>
#include <span>
#include <string>
#include <vector>

#include "kgraph/finite_kgraph.hpp"

namespace kgraph {

enum class VertexSetKind { Hereditary, Cohereditary, Saturated };

std::string_view to_string(VertexSetKind kind);

/// Hereditary: s(V Lambda) is inside V. Co-hereditary: r(Lambda V) is inside V.
/// Saturated: hereditary, and no vertex outside V has a finite exhaustive set
/// whose sources all lie in V.
///
/// Exhaustiveness is monotone in E, so for each vertex only the largest
/// candidate set {lambda in v Lambda : s(lambda) in V} needs testing.
VertexSetReport vertex_predicate(const FiniteKGraph& graph, const std::set<MorphismIndex>& vertices,
                                 VertexSetKind kind);
VertexSetReport vertex_predicate(const FiniteKGraph& graph, const std::vector<std::string>& vertices,
                                 VertexSetKind kind);

/// E (nonempty, inside v Lambda) is exhaustive when every mu in v Lambda has a
/// common extension with some member of E. In a truncated graph, mu whose
/// joins with all of E leave the bound are not decidable and are skipped.
bool is_exhaustive(const FiniteKGraph& graph, MorphismIndex v, std::span<const MorphismIndex> family);

/// |v Lambda^{e_i}| > 0 for every vertex v and direction i (this suffices for
/// all degrees by the factorisation property).
VertexSetReport no_sources(const FiniteKGraph& graph);

/// Every MCE(mu, nu) is finite. Always true for a finite graph; computed
/// anyway so that the count is exercised.
VertexSetReport finitely_aligned(const FiniteKGraph& graph);

}  // namespace kgraph

#endif  // KGRAPH_PREDICATES_HPP
