#ifndef KGRAPH_SKELETON_HPP
#define KGRAPH_SKELETON_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kgraph/constructions.hpp"
#include "kgraph/finite_kgraph.hpp"

namespace kgraph {

/// Factorisation rule f g = g2 f2 with f, f2 blue (degree e_1) and g, g2 red
/// (degree e_2).
struct Square {
  std::string f;
  std::string g;
  std::string g2;
  std::string f2;

  friend auto operator<=>(const Square&, const Square&) = default;
};

enum class Colour { Blue = 1, Red = 2 };

/// A 2-coloured graph together with factorisation rules. This presents a
/// 2-graph whose morphisms of degree <= (1,1) are the vertices, the edges and
/// the squares.
class Skeleton2Graph {
 public:
  Skeleton2Graph(std::vector<std::string> vertices, std::vector<EdgeSpec> blue,
                 std::vector<EdgeSpec> red, std::vector<Square> squares);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<EdgeSpec>& blue() const noexcept { return blue_; }
  const std::vector<EdgeSpec>& red() const noexcept { return red_; }
  const std::vector<Square>& squares() const noexcept { return squares_; }

  bool has_vertex(const std::string& id) const;
  /// Throws UnknownId.
  const EdgeSpec& edge(const std::string& id) const;
  Colour colour(const std::string& edge_id) const;
  std::optional<Square> square_for(const std::string& f, const std::string& g) const;

  friend bool operator==(const Skeleton2Graph&, const Skeleton2Graph&);

 private:
  std::vector<std::string> vertices_;
  std::vector<EdgeSpec> blue_;
  std::vector<EdgeSpec> red_;
  std::vector<Square> squares_;
  std::unordered_map<std::string, std::pair<Colour, std::size_t>> edge_index_;
};

/// Empty iff every square has consistent endpoints and the squares form a
/// range- and source-preserving bijection between composable blue-red pairs
/// (f,g) and composable red-blue pairs (g2,f2). Never throws.
std::vector<VertexSetReport> validate_skeleton(const Skeleton2Graph& skeleton);

}  // namespace kgraph

#endif  // KGRAPH_SKELETON_HPP
