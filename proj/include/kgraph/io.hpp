#ifndef KGRAPH_IO_HPP
#define KGRAPH_IO_HPP

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "kgraph/finite_kgraph.hpp"
#include "kgraph/homology.hpp"
#include "kgraph/quotient.hpp"
#include "kgraph/surfaces.hpp"

namespace kgraph {

using Json = nlohmann::json;

/// Any document the tools read: "category", "skeleton2" (marked when it has
/// "u", "v" and "square").
using Model = std::variant<FiniteKGraph, Skeleton2Graph, MarkedSkeleton>;

Json to_json(const FiniteKGraph& graph);
Json to_json(const Skeleton2Graph& skeleton);
Json to_json(const MarkedSkeleton& marked);
Json to_json(const Model& model);
Json to_json(const MorphismRelation& relation);
Json to_json(const std::vector<HomologyGroup>& groups, long euler);

/// Throw Parse for malformed JSON or missing fields, Malformed for
/// inconsistent content.
FiniteKGraph graph_from_json(const Json& doc);
Skeleton2Graph skeleton_from_json(const Json& doc);
MarkedSkeleton marked_from_json(const Json& doc);
Model model_from_json(const Json& doc);
MorphismRelation relation_from_json(const Json& doc);

Json parse_json(std::string_view text);
/// Canonical text form: two-space indent, sorted keys, trailing newline.
std::string dump(const Json& doc);

}  // namespace kgraph

#endif  // KGRAPH_IO_HPP
