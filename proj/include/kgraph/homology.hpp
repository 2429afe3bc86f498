#ifndef KGRAPH_HOMOLOGY_HPP
#define KGRAPH_HOMOLOGY_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "kgraph/cubes.hpp"
#include "kgraph/smith.hpp"

namespace kgraph {

/// Cellular chain complex of the cubical realisation. boundary[n] maps C_n to
/// C_{n-1}; boundary[0] has no rows. The boundary of a cube is the sum over
/// its directions j = 1, 2, ... (in increasing colour) of (-1)^j times the
/// side-1 face minus the side-0 face.
struct ChainComplex {
  std::vector<std::vector<Cube>> basis;
  std::vector<SparseIntMatrix> boundary;

  std::size_t top_dimension() const { return basis.empty() ? 0 : basis.size() - 1; }
};

struct HomologyGroup {
  std::size_t betti = 0;
  /// Invariant factors greater than one, each dividing the next.
  std::vector<mpz_class> torsion;

  /// "0", "Z", "Z^2 + Z/2", ...
  std::string to_string() const;

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Throws InvalidModel when the model fails validation. With `validate` false
/// the caller vouches for the model.
ChainComplex chain_complex(const FiniteKGraph& graph, bool validate = true);
ChainComplex chain_complex(const Skeleton2Graph& skeleton, bool validate = true);

std::vector<HomologyGroup> homology(const ChainComplex& complex);

/// The same complex with each basis reordered by the given permutations
/// (perms[n][i] is the old position of the new i-th cube).
ChainComplex permute_basis(const ChainComplex& complex,
                           const std::vector<std::vector<std::size_t>>& perms);

/// True when every composite boundary[n-1] * boundary[n] vanishes.
bool boundary_squares_to_zero(const ChainComplex& complex);

long euler_characteristic(const ChainComplex& complex);
long euler_characteristic(const std::vector<HomologyGroup>& groups);

}  // namespace kgraph

#endif  // KGRAPH_HOMOLOGY_HPP
