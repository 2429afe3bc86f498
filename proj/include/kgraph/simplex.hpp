#ifndef KGRAPH_SIMPLEX_HPP
#define KGRAPH_SIMPLEX_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "kgraph/degree.hpp"
#include "kgraph/finite_kgraph.hpp"

namespace kgraph {

/// A function {0..k} -> {0..k} stored as its values; k = size() - 1.
using Placing = std::vector<unsigned>;

/// f(j) = |{i : f(i) < f(j)}| for every j. Throws OutOfRange when an entry
/// exceeds k (or the vector is empty).
bool is_placing(const Placing& f);

/// All k-placings in lexicographic order of their value vectors.
std::vector<Placing> enumerate_placings(std::size_t k);

bool placing_leq(const Placing& f, const Placing& g);

/// h(f)_i = 1 iff i is a value of f, for 1 <= i <= k.
Degree height(const Placing& f);

/// The unique placing g <= f with h(g) = z: g(i) = max{j <= f(i) : j = 0 or z_j = 1}.
/// Throws HeightExceeded unless z <= h(f).
Placing tail_factor(const Placing& f, const Degree& z);

/// The ordered partition of {0..k} into level sets, lowest value first, e.g.
/// (2,0,1) is "{1,2,0}" and (0,2,0) is "{02,1}". Indices are single digits,
/// so k <= 9.
std::string placing_label(const Placing& f);
/// Inverse of placing_label; the order inside a block is irrelevant, so
/// "{20,1}" is accepted. Throws Parse.
Placing parse_placing(std::string_view label);

/// Id of the vertex (f,f) and of the morphism (f,g) of the simplex graph.
std::string simplex_morphism_id(const Placing& f, const Placing& g);

/// Pairs f <= g of k-placings with d(f,g) = h(g) - h(f) and (f,g)(g,h) = (f,h).
FiniteKGraph build_simplex(std::size_t k);

/// {0,1} x Sigma_k with the copies of (f,g) identified whenever f != 0.
FiniteKGraph build_sphere(std::size_t k);
/// Id of the distinguished vertex [0,(0,0)] of build_sphere(k).
std::string sphere_base_vertex(std::size_t k);

/// n copies (tagged 1..n) of build_sphere(k) with their base vertices identified.
FiniteKGraph build_wedge(std::size_t k, std::size_t n);

struct EmbeddedPoint {
  std::vector<mpq_class> coords;

  friend bool operator==(const EmbeddedPoint&, const EmbeddedPoint&) = default;
};

/// v_0 = (1/(k+1), ..., 1/(k+1)).
EmbeddedPoint barycentre(std::size_t k);
/// v_{f,n} = (1/n) sum_{f(j) < n} e_j, for n a nonzero value of f.
EmbeddedPoint placing_vertex(const Placing& f, unsigned n);

/// phi_f(t) for t in the box [0, h(f)] (t has k coordinates). Throws OutOfBox.
EmbeddedPoint embed(const Placing& f, const std::vector<mpq_class>& t);

}  // namespace kgraph

#endif  // KGRAPH_SIMPLEX_HPP
