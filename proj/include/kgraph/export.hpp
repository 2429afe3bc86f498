#ifndef KGRAPH_EXPORT_HPP
#define KGRAPH_EXPORT_HPP

#include <string>

#include "kgraph/finite_kgraph.hpp"
#include "kgraph/skeleton.hpp"

namespace kgraph {

/// Graphviz digraph of the 1-skeleton, arrows drawn source -> range. Colour 1
/// is solid, 2 dashed, 3 dotted, 4 and up bold.
std::string export_dot(const FiniteKGraph& graph);
std::string export_dot(const Skeleton2Graph& skeleton);

/// OFF mesh (vertices, then one quad per 2-cube) of a 2-dimensional simplex or
/// sphere graph as built by build_simplex / build_sphere, located through the
/// placing embedding. Throws NoEmbedding for anything else.
std::string export_off(const FiniteKGraph& graph);
std::string export_off(const Skeleton2Graph& skeleton);

}  // namespace kgraph

#endif  // KGRAPH_EXPORT_HPP
