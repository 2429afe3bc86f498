#ifndef KGRAPH_CONSTRUCTIONS_HPP
#define KGRAPH_CONSTRUCTIONS_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kgraph/finite_kgraph.hpp"

namespace kgraph {

/// "(a,b)": the id of a product morphism, and of a tagged copy in a union.
std::string pair_id(std::string_view first, std::string_view second);

/// A graph with vertices only. With rank 0 this is the 0-graph on the given set.
FiniteKGraph discrete_graph(std::size_t rank, std::vector<std::string> vertex_ids);

/// Rank k1 + k2 product; morphism (a,b) has id "(a,b)" and degree d(a)d(b).
FiniteKGraph cartesian_product(const FiniteKGraph& left, const FiniteKGraph& right);

/// Tagged coproduct: the first operand's ids become "(0,x)", the second's "(1,x)".
/// Throws RankMismatch for graphs of different ranks.
FiniteKGraph disjoint_union(const FiniteKGraph& first, const FiniteKGraph& second);

/// The subcategory on a set of morphisms. The set must contain the endpoints of
/// its members and be closed under composition (Malformed otherwise).
FiniteKGraph subgraph(const FiniteKGraph& graph, const std::set<MorphismIndex>& morphisms);

struct EdgeSpec {
  std::string id;
  std::string range;
  std::string source;

  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

/// The 1-graph of finite paths in a directed graph. Paths of length >= 2 get
/// ids joining their edges with '.' (range end first). A cyclic graph has
/// infinitely many paths and needs `max_length`; the result is then the
/// truncation at that length.
FiniteKGraph path_category(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges,
                           std::optional<std::size_t> max_length = std::nullopt);

}  // namespace kgraph

#endif  // KGRAPH_CONSTRUCTIONS_HPP
