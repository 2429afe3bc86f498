#ifndef KGRAPH_QUOTIENT_HPP
#define KGRAPH_QUOTIENT_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kgraph/finite_kgraph.hpp"

namespace kgraph {

enum class RelationMode { Generated, Explicit };

/// An equivalence relation on the morphisms of a graph. In generated mode it is
/// the smallest relation containing `pairs` that is closed under composition
/// and factorisation; in explicit mode it is `classes` (plus `pairs`) as given.
/// Morphisms not mentioned are alone in their class.
struct MorphismRelation {
  RelationMode mode = RelationMode::Generated;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::vector<std::string>> classes;
};

/// A resolved relation: representative[m] is the least index in the class of m
/// (so the least id, as ids are indexed in sorted order).
struct Partition {
  std::vector<MorphismIndex> representative;
  /// Generated mode only: closing under composition and factorisation merged
  /// classes beyond the plain equivalence closure of the pairs.
  bool exceeds_equivalence_closure = false;

  std::size_t class_count() const;
  bool same(MorphismIndex a, MorphismIndex b) const { return representative[a] == representative[b]; }
  std::vector<std::vector<MorphismIndex>> classes() const;
};

/// Throws ForeignId for ids outside the graph, Malformed for overlapping
/// explicit classes.
Partition resolve(const FiniteKGraph& graph, const MorphismRelation& relation);

struct CongruenceVerdict {
  bool ok = true;
  /// One of "d", "comp", "factor", "lift" when ok is false.
  std::string violated;
  std::vector<std::string> witness;
};

/// The four conditions, checked in order; the first violation is reported.
///  d:      [alpha, beta] related with different degrees
///  comp:   [alpha, beta, alpha2, beta2] related factors, unrelated composites
///  factor: [alpha, beta, alpha2, beta2] related composites, d(alpha) = d(alpha2),
///          unrelated factors
///  lift:   [alpha, beta] with s(alpha) ~ r(beta) but no composable representatives
CongruenceVerdict check_congruence(const FiniteKGraph& graph, const Partition& partition);
CongruenceVerdict check_congruence(const FiniteKGraph& graph, const MorphismRelation& relation);

class NotACongruence : public Error {
 public:
  explicit NotACongruence(CongruenceVerdict verdict);
  const CongruenceVerdict& verdict() const noexcept { return verdict_; }

 private:
  CongruenceVerdict verdict_;
};

/// The quotient graph; each class is named by its least member. Throws
/// NotACongruence, and InvalidModel should the result fail validation.
FiniteKGraph quotient(const FiniteKGraph& graph, const Partition& partition);
FiniteKGraph quotient(const FiniteKGraph& graph, const MorphismRelation& relation);

/// A map on morphism ids, defined on every morphism (vertices included) of its
/// domain.
using MorphismMap = std::map<std::string, std::string>;

/// The relation phi1(gamma) ~ phi2(gamma) on disjoint_union(first, second),
/// generated mode.
MorphismRelation gluing_relation(const FiniteKGraph& common, const MorphismMap& phi1,
                                 const MorphismMap& phi2);

/// Glues two graphs along injective images of `common`. Both images must be
/// hereditary or both co-hereditary. Throws NotInjective, NotHereditary (naming
/// the side and an escaping morphism), Malformed when a map is not a k-graph
/// morphism, and NotACongruence.
FiniteKGraph glue_on_common(const FiniteKGraph& first, const FiniteKGraph& second,
                            const FiniteKGraph& common, const MorphismMap& phi1,
                            const MorphismMap& phi2);

/// Reports, for i = 1, 2 in this order: finitely-aligned, no-sources, the image
/// vertex set co-hereditary, and its complement saturated. Never throws on a
/// failed hypothesis.
std::vector<VertexSetReport> pullback_hypotheses(const FiniteKGraph& first,
                                                 const FiniteKGraph& second,
                                                 const FiniteKGraph& common,
                                                 const MorphismMap& phi1,
                                                 const MorphismMap& phi2);

}  // namespace kgraph

#endif  // KGRAPH_QUOTIENT_HPP
