#ifndef KGRAPH_CUBES_HPP
#define KGRAPH_CUBES_HPP

#include <string>
#include <vector>

#include "kgraph/degree.hpp"
#include "kgraph/finite_kgraph.hpp"
#include "kgraph/skeleton.hpp"

namespace kgraph {

/// A cell of the cubical realisation: a morphism of degree m <= 1_k, of
/// dimension |m|. Skeleton squares are identified by "(f,g)".
struct Cube {
  std::string id;
  Degree degree;

  std::size_t dimension() const noexcept { return degree.total(); }

  friend bool operator==(const Cube&, const Cube&) = default;
};

enum class Side { Zero = 0, One = 1 };

/// All n-cubes in canonical order. Throws DimensionTooLarge when n > rank.
std::vector<Cube> cubes(const FiniteKGraph& graph, std::size_t n);
std::vector<Cube> cubes(const Skeleton2Graph& skeleton, std::size_t n);

/// Face of c in direction i (1-based): side Zero is lambda(0, m - e_i), side
/// One is lambda(e_i, m). Throws BadDirection unless m_i = 1.
Cube face(const FiniteKGraph& graph, const Cube& c, std::size_t direction, Side side);
Cube face(const Skeleton2Graph& skeleton, const Cube& c, std::size_t direction, Side side);

inline std::size_t model_rank(const FiniteKGraph& graph) { return graph.rank(); }
inline std::size_t model_rank(const Skeleton2Graph&) { return 2; }

}  // namespace kgraph

#endif  // KGRAPH_CUBES_HPP
