#include "kgraph/cubes.hpp"

namespace kgraph {

namespace {

void require_dimension(std::size_t n, std::size_t rank) {
  if (n > rank) {
    throw Error(ErrorCode::DimensionTooLarge, "no " + std::to_string(n) + "-cubes in a " +
                                                  std::to_string(rank) + "-graph");
  }
}

void require_direction(const Cube& c, std::size_t direction) {
  if (direction == 0 || direction > c.degree.rank() || c.degree[direction - 1] != 1) {
    throw Error(ErrorCode::BadDirection, "cube '" + c.id + "' of degree " + c.degree.to_string() +
                                             " has no face in direction " +
                                             std::to_string(direction));
  }
}

std::string square_id(const std::string& f, const std::string& g) { return pair_id(f, g); }

}  // namespace

std::vector<Cube> cubes(const FiniteKGraph& graph, std::size_t n) {
  require_dimension(n, graph.rank());
  const auto top = Degree::ones(graph.rank());
  std::vector<Cube> out;
  for (MorphismIndex m = 0; m < graph.size(); ++m) {
    const auto& d = graph.degree(m);
    if (d.leq(top) && d.total() == n) out.push_back({graph.id(m), d});
  }
  return out;
}

std::vector<Cube> cubes(const Skeleton2Graph& sk, std::size_t n) {
  require_dimension(n, 2);
  std::vector<Cube> out;
  switch (n) {
    case 0:
      for (const auto& v : sk.vertices()) out.push_back({v, Degree{0, 0}});
      break;
    case 1:
      for (const auto& e : sk.blue()) out.push_back({e.id, Degree{1, 0}});
      for (const auto& e : sk.red()) out.push_back({e.id, Degree{0, 1}});
      break;
    default:
      for (const auto& s : sk.squares()) out.push_back({square_id(s.f, s.g), Degree{1, 1}});
      break;
  }
  return out;
}

Cube face(const FiniteKGraph& graph, const Cube& c, std::size_t direction, Side side) {
  require_direction(c, direction);
  const auto lambda = graph.index(c.id);
  const auto e = Degree::unit(graph.rank(), direction);
  const auto m = graph.degree(lambda);
  const auto f = side == Side::Zero ? factorise(graph, lambda, m - e).head
                                    : factorise(graph, lambda, e).tail;
  return {graph.id(f), graph.degree(f)};
}

Cube face(const Skeleton2Graph& sk, const Cube& c, std::size_t direction, Side side) {
  require_direction(c, direction);
  if (c.dimension() == 1) {
    const auto& e = sk.edge(c.id);
    return {side == Side::Zero ? e.range : e.source, Degree{0, 0}};
  }
  for (const auto& s : sk.squares()) {
    if (square_id(s.f, s.g) != c.id) continue;
    if (direction == 1) return {side == Side::Zero ? s.g2 : s.g, Degree{0, 1}};
    return {side == Side::Zero ? s.f : s.f2, Degree{1, 0}};
  }
  throw Error(ErrorCode::UnknownId, "no square '" + c.id + "'");
}

}  // namespace kgraph
