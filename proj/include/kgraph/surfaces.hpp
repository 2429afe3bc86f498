#ifndef KGRAPH_SURFACES_HPP
#define KGRAPH_SURFACES_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kgraph/homology.hpp"
#include "kgraph/skeleton.hpp"

namespace kgraph {

/// Sphere, torus, Klein bottle, projective plane.
enum class SurfaceSummand { S, T, K, P };

char to_char(SurfaceSummand tag);
/// "T,T,P" -> {T, T, P}. Throws Parse.
std::vector<SurfaceSummand> parse_surface_spec(std::string_view spec);

/// A skeleton with the data needed for a connected sum: a source-free vertex u
/// (nothing has source u), a range-free vertex v (nothing has range v), and a
/// square f g = g2 f2 with r(f) = u, s(g) = v.
struct MarkedSkeleton {
  Skeleton2Graph skeleton;
  std::string u;
  std::string v;
  Square square;

  friend bool operator==(const MarkedSkeleton&, const MarkedSkeleton&) = default;
};

/// Throws BadMarking naming the failed condition and a witness.
void check_marking(const MarkedSkeleton& marked);

/// The catalog 2-graph for a tag, with u, v and the square (c, e, g, a).
MarkedSkeleton basic_surface(SurfaceSummand tag);

/// Homology of the named surface: (Z,0,Z), (Z,Z^2,Z), (Z,Z+Z/2,0), (Z,Z/2,0).
std::vector<HomologyGroup> surface_homology(SurfaceSummand tag);

struct Regeneration {
  MarkedSkeleton surface;
  bool arrows_reversed = false;
  std::size_t candidates = 0;  // square sets tried, over both orientations
  std::size_t matching = 0;    // of those, the ones with the target homology
};

/// Recomputes the catalog entry from the drawn skeleton alone: every square set
/// that contains the distinguished square and is a range- and source-preserving
/// bijection is tried, with arrows read as drawn and reversed; the least square
/// list (in sorted order) whose realisation has the target homology wins.
Regeneration regenerate_basic_surface(SurfaceSummand tag);

/// Identifies u_B with u_A and v_B with v_A and exchanges the two marked
/// squares. When the ids of A and B overlap (apart from u_B and v_B), A's ids
/// get the suffix "_1" and B's "_2" first. Throws BadMarking.
MarkedSkeleton connected_sum(const MarkedSkeleton& a, const MarkedSkeleton& b);

/// Left fold of connected_sum over the catalog graphs; with two or more
/// summands the i-th (from 1) has its ids suffixed "_i". Throws Malformed for
/// an empty spec.
MarkedSkeleton compact_surface(std::span<const SurfaceSummand> spec);

/// Appends a suffix to every vertex and edge id.
MarkedSkeleton with_suffix(const MarkedSkeleton& marked, const std::string& suffix);

}  // namespace kgraph

#endif  // KGRAPH_SURFACES_HPP
