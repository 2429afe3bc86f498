#ifndef KGRAPH_FINITE_KGRAPH_HPP
#define KGRAPH_FINITE_KGRAPH_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kgraph/degree.hpp"
#include "kgraph/error.hpp"

namespace kgraph {

/// Position of a morphism in the canonical (lexicographic by id) order of a
/// FiniteKGraph. Vertices are their own identity morphisms and share the index
/// space with the other morphisms.
using MorphismIndex = std::uint32_t;

struct MorphismSpec {
  std::string id;
  Degree degree;
  std::string range;
  std::string source;
};

/// left . right = result, i.e. source(left) = range(right).
struct CompositionSpec {
  std::string left;
  std::string right;
  std::string result;

  friend auto operator<=>(const CompositionSpec&, const CompositionSpec&) = default;
};

/// Outcome of one predicate check; `witness` is non-empty exactly when
/// `holds` is false.
struct VertexSetReport {
  std::string predicate;
  bool holds = true;
  std::vector<std::string> witness;
};

/// A finite k-graph stored as an explicit small category: every morphism with
/// its degree, range and source, and the full composition table.
///
/// The constructor checks referential integrity only (ids exist, ranks match,
/// the table is a partial function). The category and k-graph laws are left to
/// validate_kgraph so that broken inputs can be represented and diagnosed.
///
/// A graph may carry a degree bound. It then stands for the truncation
/// {lambda : d(lambda) <= bound} of a possibly infinite k-graph: composites are
/// only required to exist when their degree stays within the bound.
class FiniteKGraph {
 public:
  struct Split {
    MorphismIndex head;
    MorphismIndex tail;
  };

  /// One entry of the full composition, identities included.
  struct Composite {
    MorphismIndex left;
    MorphismIndex right;
    MorphismIndex result;
  };

  FiniteKGraph(std::size_t rank, std::vector<std::string> vertices,
               std::vector<MorphismSpec> morphisms, std::vector<CompositionSpec> compositions,
               std::optional<Degree> degree_bound = std::nullopt);

  std::size_t rank() const noexcept { return rank_; }
  /// Number of morphisms, identities included.
  std::size_t size() const noexcept { return ids_.size(); }
  const std::vector<MorphismIndex>& vertices() const noexcept { return vertices_; }
  const std::vector<MorphismIndex>& non_identities() const noexcept { return non_identities_; }

  const std::string& id(MorphismIndex m) const { return ids_.at(m); }
  std::optional<MorphismIndex> find(std::string_view id) const;
  /// Throws UnknownId.
  MorphismIndex index(std::string_view id) const;

  const Degree& degree(MorphismIndex m) const { return degrees_.at(m); }
  MorphismIndex range(MorphismIndex m) const { return ranges_.at(m); }
  MorphismIndex source(MorphismIndex m) const { return sources_.at(m); }
  bool is_identity(MorphismIndex m) const { return ranges_.at(m) == m && sources_.at(m) == m; }

  const std::optional<Degree>& degree_bound() const noexcept { return bound_; }
  bool within_bound(const Degree& d) const { return !bound_ || d.leq(*bound_); }
  /// Componentwise maximum of all morphism degrees.
  const Degree& max_degree() const noexcept { return max_degree_; }

  /// The composite recorded for (a, b), identities implied; nullopt when the
  /// pair is not composable or the table has no entry.
  std::optional<MorphismIndex> try_compose(MorphismIndex a, MorphismIndex b) const;

  /// Morphisms lambda with r(lambda) = v, i.e. v Lambda.
  const std::vector<MorphismIndex>& with_range(MorphismIndex v) const { return with_range_.at(v); }
  /// Morphisms lambda with s(lambda) = v, i.e. Lambda v.
  const std::vector<MorphismIndex>& with_source(MorphismIndex v) const { return with_source_.at(v); }
  /// Morphisms of a given degree, ascending.
  std::vector<MorphismIndex> of_degree(const Degree& d) const;

  /// Every recorded composition, identity cases included, ordered by result
  /// and then by the degree of the left factor.
  const std::vector<Composite>& composites() const noexcept { return composites_; }

  /// All recorded (head, tail) with head.tail = lambda and d(head) = p. For a
  /// genuine k-graph this has exactly one element whenever p <= d(lambda).
  std::span<const Split> splits(MorphismIndex lambda, const Degree& p) const;

  /// Non-identity composition entries as ids, sorted.
  std::vector<CompositionSpec> composition_table() const;
  std::vector<MorphismSpec> morphism_specs() const;  // non-identities only
  std::vector<std::string> vertex_ids() const;

  friend bool operator==(const FiniteKGraph& a, const FiniteKGraph& b);

 private:
  std::uint64_t degree_code(const Degree& d) const;

  std::size_t rank_;
  std::optional<Degree> bound_;
  Degree max_degree_;
  std::vector<std::uint64_t> strides_;

  std::vector<std::string> ids_;
  std::unordered_map<std::string, MorphismIndex> index_;
  std::vector<Degree> degrees_;
  std::vector<MorphismIndex> ranges_;
  std::vector<MorphismIndex> sources_;
  std::vector<MorphismIndex> vertices_;
  std::vector<MorphismIndex> non_identities_;
  std::vector<std::vector<MorphismIndex>> with_range_;
  std::vector<std::vector<MorphismIndex>> with_source_;

  std::unordered_map<std::uint64_t, MorphismIndex> table_;
  std::vector<Composite> composites_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> composite_keys_;  // (result, code(d(left)))
  std::vector<Split> split_values_;
};

/// Composite of a and b. Throws NotComposable when s(a) != r(b) and
/// OutsideTruncation when the composite would leave a truncated graph.
MorphismIndex compose(const FiniteKGraph& graph, MorphismIndex a, MorphismIndex b);
std::string compose(const FiniteKGraph& graph, std::string_view a, std::string_view b);

/// (lambda(0,p), lambda(p,d(lambda))). Throws BadSplit if p is not below
/// d(lambda) and InvalidModel if the factorisation is missing or not unique.
FiniteKGraph::Split factorise(const FiniteKGraph& graph, MorphismIndex lambda, const Degree& p);
std::pair<std::string, std::string> factorise(const FiniteKGraph& graph, std::string_view lambda,
                                              const Degree& p);

/// lambda(m, n) for 0 <= m <= n <= d(lambda).
MorphismIndex segment(const FiniteKGraph& graph, MorphismIndex lambda, const Degree& from,
                      const Degree& to);

/// Checks the category laws, functoriality of the degree map and the unique
/// factorisation property. Returns one report per violated law; an empty list
/// means the graph is a k-graph. Never throws.
std::vector<VertexSetReport> validate_kgraph(const FiniteKGraph& graph);

/// Minimal common extensions of mu and nu.
std::set<MorphismIndex> mce(const FiniteKGraph& graph, MorphismIndex mu, MorphismIndex nu);
/// MCE(F) through MCE(F) = union over mu in MCE(F \ {lambda}) of MCE(lambda, mu).
std::set<MorphismIndex> mce_set(const FiniteKGraph& graph, std::span<const MorphismIndex> family);
/// lambda in alpha Lambda.
bool extends(const FiniteKGraph& graph, MorphismIndex lambda, MorphismIndex alpha);

}  // namespace kgraph

#endif  // KGRAPH_FINITE_KGRAPH_HPP
