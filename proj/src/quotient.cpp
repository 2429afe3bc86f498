#include "kgraph/quotient.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "kgraph/constructions.hpp"
#include "kgraph/predicates.hpp"

namespace kgraph {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  MorphismIndex find(MorphismIndex x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // The smaller root survives, so every root is the least member of its class.
  bool unite(MorphismIndex a, MorphismIndex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  std::vector<MorphismIndex> roots() {
    std::vector<MorphismIndex> out(parent_.size());
    for (MorphismIndex i = 0; i < out.size(); ++i) out[i] = find(i);
    return out;
  }

 private:
  std::vector<MorphismIndex> parent_;
};

std::uint64_t pair_key(MorphismIndex a, MorphismIndex b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

MorphismIndex lookup(const FiniteKGraph& graph, const std::string& id) {
  auto m = graph.find(id);
  if (!m) throw Error(ErrorCode::ForeignId, "'" + id + "' is not a morphism of the graph");
  return *m;
}

std::size_t count_classes(const std::vector<MorphismIndex>& rep) {
  std::size_t n = 0;
  for (MorphismIndex i = 0; i < rep.size(); ++i) n += rep[i] == i;
  return n;
}

// One pass of closure under composition and factorisation; true if anything merged.
bool close_once(const FiniteKGraph& graph, UnionFind& uf) {
  bool changed = false;
  std::unordered_map<std::uint64_t, MorphismIndex> composite_of;
  std::map<std::pair<MorphismIndex, Degree>, std::pair<MorphismIndex, MorphismIndex>> factors_of;
  for (const auto& c : graph.composites()) {
    const auto key = pair_key(uf.find(c.left), uf.find(c.right));
    auto [it, fresh] = composite_of.try_emplace(key, c.result);
    if (!fresh) changed |= uf.unite(it->second, c.result);

    auto [jt, first] =
        factors_of.try_emplace({uf.find(c.result), graph.degree(c.left)}, c.left, c.right);
    if (!first) {
      changed |= uf.unite(jt->second.first, c.left);
      changed |= uf.unite(jt->second.second, c.right);
    }
  }
  return changed;
}

std::string join_ids(const std::vector<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) out += (out.empty() ? "" : " ") + id;
  return out;
}

}  // namespace

std::size_t Partition::class_count() const { return count_classes(representative); }

std::vector<std::vector<MorphismIndex>> Partition::classes() const {
  std::map<MorphismIndex, std::vector<MorphismIndex>> by_rep;
  for (MorphismIndex i = 0; i < representative.size(); ++i) by_rep[representative[i]].push_back(i);
  std::vector<std::vector<MorphismIndex>> out;
  for (auto& [rep, members] : by_rep) out.push_back(std::move(members));
  return out;
}

Partition resolve(const FiniteKGraph& graph, const MorphismRelation& relation) {
  UnionFind uf(graph.size());
  if (relation.mode == RelationMode::Explicit) {
    std::unordered_set<MorphismIndex> seen;
    for (const auto& cls : relation.classes) {
      if (cls.empty()) continue;
      const auto first = lookup(graph, cls.front());
      for (const auto& id : cls) {
        const auto m = lookup(graph, id);
        if (!seen.insert(m).second) {
          throw Error(ErrorCode::Malformed, "'" + id + "' appears in more than one class");
        }
        uf.unite(first, m);
      }
    }
  }
  for (const auto& [a, b] : relation.pairs) uf.unite(lookup(graph, a), lookup(graph, b));

  Partition out;
  if (relation.mode == RelationMode::Generated) {
    const auto plain = count_classes(uf.roots());
    while (close_once(graph, uf)) {
    }
    out.representative = uf.roots();
    out.exceeds_equivalence_closure = count_classes(out.representative) < plain;
  } else {
    out.representative = uf.roots();
  }
  return out;
}

CongruenceVerdict check_congruence(const FiniteKGraph& graph, const Partition& partition) {
  const auto& rep = partition.representative;
  if (rep.size() != graph.size()) {
    throw Error(ErrorCode::ForeignId, "partition does not cover the graph's morphisms");
  }
  auto fail = [&](std::string tag, std::initializer_list<MorphismIndex> ms) {
    CongruenceVerdict v{false, std::move(tag), {}};
    for (auto m : ms) v.witness.push_back(graph.id(m));
    return v;
  };

  for (MorphismIndex m = 0; m < graph.size(); ++m) {
    if (graph.degree(m) != graph.degree(rep[m])) return fail("d", {rep[m], m});
  }

  std::unordered_map<std::uint64_t, const FiniteKGraph::Composite*> by_factors;
  for (const auto& c : graph.composites()) {
    auto [it, fresh] = by_factors.try_emplace(pair_key(rep[c.left], rep[c.right]), &c);
    if (!fresh && rep[it->second->result] != rep[c.result]) {
      return fail("comp", {it->second->left, it->second->right, c.left, c.right});
    }
  }

  std::map<std::pair<MorphismIndex, Degree>, const FiniteKGraph::Composite*> by_result;
  for (const auto& c : graph.composites()) {
    auto [it, fresh] = by_result.try_emplace({rep[c.result], graph.degree(c.left)}, &c);
    if (!fresh && (rep[it->second->left] != rep[c.left] || rep[it->second->right] != rep[c.right])) {
      return fail("factor", {it->second->left, it->second->right, c.left, c.right});
    }
  }

  // classes leaving / entering each vertex class
  std::map<MorphismIndex, std::set<MorphismIndex>> leaving;
  std::map<MorphismIndex, std::set<MorphismIndex>> entering;
  for (MorphismIndex m = 0; m < graph.size(); ++m) {
    leaving[rep[graph.source(m)]].insert(rep[m]);
    entering[rep[graph.range(m)]].insert(rep[m]);
  }
  for (const auto& [vertex_class, alphas] : leaving) {
    auto it = entering.find(vertex_class);
    if (it == entering.end()) continue;
    for (auto a : alphas) {
      for (auto b : it->second) {
        if (!by_factors.count(pair_key(a, b))) return fail("lift", {a, b});
      }
    }
  }
  return {};
}

CongruenceVerdict check_congruence(const FiniteKGraph& graph, const MorphismRelation& relation) {
  return check_congruence(graph, resolve(graph, relation));
}

NotACongruence::NotACongruence(CongruenceVerdict verdict)
    : Error(ErrorCode::NotACongruence,
            "condition '" + verdict.violated + "' fails at " + join_ids(verdict.witness)),
      verdict_(std::move(verdict)) {}

FiniteKGraph quotient(const FiniteKGraph& graph, const Partition& partition) {
  auto verdict = check_congruence(graph, partition);
  if (!verdict.ok) throw NotACongruence(std::move(verdict));
  const auto& rep = partition.representative;

  std::vector<std::string> vertices;
  for (auto v : graph.vertices()) {
    if (rep[v] == v) vertices.push_back(graph.id(v));
  }
  std::vector<MorphismSpec> morphisms;
  for (auto m : graph.non_identities()) {
    if (rep[m] != m) continue;
    morphisms.push_back({graph.id(m), graph.degree(m), graph.id(rep[graph.range(m)]),
                         graph.id(rep[graph.source(m)])});
  }
  std::set<CompositionSpec> table;
  for (const auto& c : graph.composites()) {
    if (graph.is_identity(c.left) || graph.is_identity(c.right)) continue;
    table.insert({graph.id(rep[c.left]), graph.id(rep[c.right]), graph.id(rep[c.result])});
  }
  FiniteKGraph out(graph.rank(), std::move(vertices), std::move(morphisms),
                   {table.begin(), table.end()}, graph.degree_bound());
  const auto reports = validate_kgraph(out);
  if (!reports.empty()) {
    throw Error(ErrorCode::InvalidModel,
                "quotient fails " + reports.front().predicate + " at " +
                    join_ids(reports.front().witness));
  }
  return out;
}

FiniteKGraph quotient(const FiniteKGraph& graph, const MorphismRelation& relation) {
  return quotient(graph, resolve(graph, relation));
}

MorphismRelation gluing_relation(const FiniteKGraph& common, const MorphismMap& phi1,
                                 const MorphismMap& phi2) {
  MorphismRelation rel;
  for (MorphismIndex g = 0; g < common.size(); ++g) {
    const auto& id = common.id(g);
    rel.pairs.emplace_back(pair_id("0", phi1.at(id)), pair_id("1", phi2.at(id)));
  }
  return rel;
}

namespace {

// Index form of phi; checks totality, injectivity and functoriality.
std::vector<MorphismIndex> check_embedding(const FiniteKGraph& target, const FiniteKGraph& common,
                                           const MorphismMap& phi, int side) {
  const std::string where = " (side " + std::to_string(side) + ")";
  for (const auto& [from, to] : phi) {
    if (!common.find(from)) throw Error(ErrorCode::UnknownId, "'" + from + "' is not in the common graph" + where);
  }
  std::vector<MorphismIndex> image(common.size());
  std::unordered_map<MorphismIndex, MorphismIndex> preimage;
  for (MorphismIndex g = 0; g < common.size(); ++g) {
    auto it = phi.find(common.id(g));
    if (it == phi.end()) {
      throw Error(ErrorCode::Malformed, "map undefined on '" + common.id(g) + "'" + where);
    }
    image[g] = target.index(it->second);
    auto [pt, fresh] = preimage.emplace(image[g], g);
    if (!fresh) {
      throw Error(ErrorCode::NotInjective, "'" + common.id(pt->second) + "' and '" + common.id(g) +
                                               "' both map to '" + it->second + "'" + where);
    }
  }
  for (MorphismIndex g = 0; g < common.size(); ++g) {
    const auto m = image[g];
    if (target.degree(m) != common.degree(g) || target.range(m) != image[common.range(g)] ||
        target.source(m) != image[common.source(g)]) {
      throw Error(ErrorCode::Malformed,
                  "map does not preserve degree, range and source at '" + common.id(g) + "'" + where);
    }
  }
  for (const auto& c : common.composites()) {
    if (target.try_compose(image[c.left], image[c.right]) != image[c.result]) {
      throw Error(ErrorCode::Malformed, "map does not preserve the composite of '" +
                                            common.id(c.left) + "' and '" + common.id(c.right) +
                                            "'" + where);
    }
  }
  return image;
}

std::set<MorphismIndex> image_vertices(const FiniteKGraph& common,
                                       const std::vector<MorphismIndex>& image) {
  std::set<MorphismIndex> out;
  for (auto v : common.vertices()) out.insert(image[v]);
  return out;
}

}  // namespace

FiniteKGraph glue_on_common(const FiniteKGraph& first, const FiniteKGraph& second,
                            const FiniteKGraph& common, const MorphismMap& phi1,
                            const MorphismMap& phi2) {
  const auto image1 = check_embedding(first, common, phi1, 1);
  const auto image2 = check_embedding(second, common, phi2, 2);
  const auto v1 = image_vertices(common, image1);
  const auto v2 = image_vertices(common, image2);

  const auto h1 = vertex_predicate(first, v1, VertexSetKind::Hereditary);
  const auto h2 = vertex_predicate(second, v2, VertexSetKind::Hereditary);
  const auto c1 = vertex_predicate(first, v1, VertexSetKind::Cohereditary);
  const auto c2 = vertex_predicate(second, v2, VertexSetKind::Cohereditary);
  if (!(h1.holds && h2.holds) && !(c1.holds && c2.holds)) {
    // blame the hereditary condition when one side has it, else side 1
    const bool hereditary = h1.holds || h2.holds;
    const auto& a = hereditary ? h1 : c1;
    const auto& b = hereditary ? h2 : c2;
    const auto& bad = a.holds ? b : a;
    throw Error(ErrorCode::NotHereditary,
                std::string("image on side ") + (a.holds ? "2" : "1") + " is not " +
                    (hereditary ? "hereditary" : "co-hereditary") + "; escaping morphism " +
                    join_ids(bad.witness));
  }

  const auto joined = disjoint_union(first, second);
  return quotient(joined, resolve(joined, gluing_relation(common, phi1, phi2)));
}

std::vector<VertexSetReport> pullback_hypotheses(const FiniteKGraph& first,
                                                 const FiniteKGraph& second,
                                                 const FiniteKGraph& common,
                                                 const MorphismMap& phi1,
                                                 const MorphismMap& phi2) {
  std::vector<VertexSetReport> out;
  const FiniteKGraph* graphs[] = {&first, &second};
  const MorphismMap* maps[] = {&phi1, &phi2};
  for (int i = 0; i < 2; ++i) {
    const auto& graph = *graphs[i];
    const auto tag = "[" + std::to_string(i + 1) + "]";
    std::set<MorphismIndex> image;
    for (auto v : common.vertices()) image.insert(graph.index(maps[i]->at(common.id(v))));
    std::set<MorphismIndex> rest;
    for (auto v : graph.vertices()) {
      if (!image.count(v)) rest.insert(v);
    }

    auto aligned = finitely_aligned(graph);
    aligned.predicate += tag;
    auto sources = no_sources(graph);
    sources.predicate += tag;
    auto coher = vertex_predicate(graph, image, VertexSetKind::Cohereditary);
    coher.predicate = "cohereditary-image" + tag;
    auto sat = vertex_predicate(graph, rest, VertexSetKind::Saturated);
    sat.predicate = "saturated-complement" + tag;
    for (auto* r : {&aligned, &sources, &coher, &sat}) out.push_back(std::move(*r));
  }
  return out;
}

}  // namespace kgraph
