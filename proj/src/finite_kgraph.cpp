#include "kgraph/finite_kgraph.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace kgraph {

namespace {

std::uint64_t pair_key(MorphismIndex a, MorphismIndex b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

constexpr std::size_t kExhaustiveAssociativityLimit = 10000;
constexpr std::size_t kSampledTriples = 200000;

}  // namespace

FiniteKGraph::FiniteKGraph(std::size_t rank, std::vector<std::string> vertices,
                           std::vector<MorphismSpec> morphisms,
                           std::vector<CompositionSpec> compositions,
                           std::optional<Degree> degree_bound)
    : rank_(rank), bound_(std::move(degree_bound)), max_degree_(rank) {
  if (vertices.empty()) throw Error(ErrorCode::Malformed, "a k-graph needs at least one vertex");
  if (bound_ && bound_->rank() != rank_) {
    throw Error(ErrorCode::Malformed, "degree bound " + bound_->to_string() + " has wrong rank");
  }

  ids_.reserve(vertices.size() + morphisms.size());
  for (const auto& v : vertices) ids_.push_back(v);
  for (const auto& m : morphisms) ids_.push_back(m.id);
  std::sort(ids_.begin(), ids_.end());
  if (auto dup = std::adjacent_find(ids_.begin(), ids_.end()); dup != ids_.end()) {
    throw Error(ErrorCode::Malformed, "duplicate id '" + *dup + "'");
  }
  index_.reserve(ids_.size());
  for (MorphismIndex i = 0; i < ids_.size(); ++i) index_.emplace(ids_[i], i);

  const auto n = ids_.size();
  degrees_.assign(n, Degree(rank_));
  ranges_.assign(n, 0);
  sources_.assign(n, 0);
  std::vector<bool> is_vertex(n, false);
  for (const auto& v : vertices) {
    const auto i = index_.at(v);
    is_vertex[i] = true;
    ranges_[i] = sources_[i] = i;
  }
  auto vertex_ref = [&](const std::string& owner, const std::string& ref) {
    auto it = index_.find(ref);
    if (it == index_.end() || !is_vertex[it->second]) {
      throw Error(ErrorCode::Malformed, "morphism '" + owner + "' refers to '" + ref +
                                            "', which is not a vertex");
    }
    return it->second;
  };
  for (const auto& m : morphisms) {
    if (m.degree.rank() != rank_) {
      throw Error(ErrorCode::Malformed, "morphism '" + m.id + "' has degree of rank " +
                                            std::to_string(m.degree.rank()));
    }
    const auto i = index_.at(m.id);
    degrees_[i] = m.degree;
    ranges_[i] = vertex_ref(m.id, m.range);
    sources_[i] = vertex_ref(m.id, m.source);
  }

  with_range_.assign(n, {});
  with_source_.assign(n, {});
  for (MorphismIndex i = 0; i < n; ++i) {
    (is_vertex[i] ? vertices_ : non_identities_).push_back(i);
    with_range_[ranges_[i]].push_back(i);
    with_source_[sources_[i]].push_back(i);
    for (std::size_t c = 0; c < rank_; ++c) {
      max_degree_[c] = std::max(max_degree_[c], degrees_[i][c]);
    }
  }
  strides_.assign(rank_, 1);
  for (std::size_t c = 1; c < rank_; ++c) {
    strides_[c] = strides_[c - 1] * (static_cast<std::uint64_t>(max_degree_[c - 1]) + 1);
  }

  auto resolve = [&](const std::string& id) {
    auto it = index_.find(id);
    if (it == index_.end()) {
      throw Error(ErrorCode::Malformed, "composition table mentions unknown id '" + id + "'");
    }
    return it->second;
  };
  table_.reserve(compositions.size());
  for (const auto& entry : compositions) {
    const auto a = resolve(entry.left);
    const auto b = resolve(entry.right);
    const auto c = resolve(entry.result);
    if (is_vertex[a] || is_vertex[b]) {
      const auto implied = is_vertex[a] ? b : a;
      if (sources_[a] != ranges_[b] || implied != c) {
        throw Error(ErrorCode::Malformed, "entry (" + entry.left + "," + entry.right + ")->" +
                                              entry.result + " contradicts an identity law");
      }
      continue;
    }
    auto [it, inserted] = table_.emplace(pair_key(a, b), c);
    if (!inserted && it->second != c) {
      throw Error(ErrorCode::Malformed,
                  "pair (" + entry.left + "," + entry.right + ") has two composites");
    }
  }

  composites_.reserve(vertices_.size() + 2 * non_identities_.size() + table_.size());
  for (auto v : vertices_) composites_.push_back({v, v, v});
  for (auto m : non_identities_) {
    composites_.push_back({ranges_[m], m, m});
    composites_.push_back({m, sources_[m], m});
  }
  for (const auto& [key, c] : table_) {
    composites_.push_back({static_cast<MorphismIndex>(key >> 32),
                           static_cast<MorphismIndex>(key & 0xffffffffu), c});
  }
  std::sort(composites_.begin(), composites_.end(), [&](const Composite& x, const Composite& y) {
    const auto kx = degree_code(degrees_[x.left]);
    const auto ky = degree_code(degrees_[y.left]);
    return std::tie(x.result, kx, x.left, x.right) < std::tie(y.result, ky, y.left, y.right);
  });
  composite_keys_.reserve(composites_.size());
  split_values_.reserve(composites_.size());
  for (const auto& c : composites_) {
    composite_keys_.emplace_back(c.result, degree_code(degrees_[c.left]));
    split_values_.push_back({c.left, c.right});
  }
}

std::uint64_t FiniteKGraph::degree_code(const Degree& d) const {
  std::uint64_t code = 0;
  for (std::size_t c = 0; c < rank_; ++c) code += strides_[c] * d[c];
  return code;
}

std::optional<MorphismIndex> FiniteKGraph::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

MorphismIndex FiniteKGraph::index(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw Error(ErrorCode::UnknownId, "no morphism or vertex with id '" + std::string(id) + "'");
}

std::optional<MorphismIndex> FiniteKGraph::try_compose(MorphismIndex a, MorphismIndex b) const {
  if (sources_.at(a) != ranges_.at(b)) return std::nullopt;
  if (is_identity(a)) return b;
  if (is_identity(b)) return a;
  auto it = table_.find(pair_key(a, b));
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::vector<MorphismIndex> FiniteKGraph::of_degree(const Degree& d) const {
  std::vector<MorphismIndex> out;
  for (MorphismIndex i = 0; i < size(); ++i) {
    if (degrees_[i] == d) out.push_back(i);
  }
  return out;
}

std::span<const FiniteKGraph::Split> FiniteKGraph::splits(MorphismIndex lambda,
                                                          const Degree& p) const {
  if (!p.leq(degrees_.at(lambda))) return {};
  const std::pair<std::uint64_t, std::uint64_t> key{lambda, degree_code(p)};
  auto [lo, hi] = std::equal_range(composite_keys_.begin(), composite_keys_.end(), key);
  const auto first = static_cast<std::size_t>(lo - composite_keys_.begin());
  return {split_values_.data() + first, static_cast<std::size_t>(hi - lo)};
}

std::vector<CompositionSpec> FiniteKGraph::composition_table() const {
  std::vector<CompositionSpec> out;
  out.reserve(table_.size());
  for (const auto& [key, c] : table_) {
    out.push_back({ids_[key >> 32], ids_[key & 0xffffffffu], ids_[c]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MorphismSpec> FiniteKGraph::morphism_specs() const {
  std::vector<MorphismSpec> out;
  out.reserve(non_identities_.size());
  for (auto m : non_identities_) {
    out.push_back({ids_[m], degrees_[m], ids_[ranges_[m]], ids_[sources_[m]]});
  }
  return out;
}

std::vector<std::string> FiniteKGraph::vertex_ids() const {
  std::vector<std::string> out;
  out.reserve(vertices_.size());
  for (auto v : vertices_) out.push_back(ids_[v]);
  return out;
}

bool operator==(const FiniteKGraph& a, const FiniteKGraph& b) {
  return a.rank_ == b.rank_ && a.bound_ == b.bound_ && a.ids_ == b.ids_ &&
         a.degrees_ == b.degrees_ && a.ranges_ == b.ranges_ && a.sources_ == b.sources_ &&
         a.table_ == b.table_;
}

MorphismIndex compose(const FiniteKGraph& graph, MorphismIndex a, MorphismIndex b) {
  if (graph.source(a) != graph.range(b)) {
    throw Error(ErrorCode::NotComposable, "source of '" + graph.id(a) + "' is '" +
                                              graph.id(graph.source(a)) + "' but range of '" +
                                              graph.id(b) + "' is '" +
                                              graph.id(graph.range(b)) + "'");
  }
  if (auto c = graph.try_compose(a, b)) return *c;
  if (!graph.within_bound(graph.degree(a) + graph.degree(b))) {
    throw Error(ErrorCode::OutsideTruncation,
                "composite of '" + graph.id(a) + "' and '" + graph.id(b) + "' exceeds the bound");
  }
  throw Error(ErrorCode::InvalidModel,
              "no composite recorded for ('" + graph.id(a) + "','" + graph.id(b) + "')");
}

std::string compose(const FiniteKGraph& graph, std::string_view a, std::string_view b) {
  return graph.id(compose(graph, graph.index(a), graph.index(b)));
}

FiniteKGraph::Split factorise(const FiniteKGraph& graph, MorphismIndex lambda, const Degree& p) {
  if (p.rank() != graph.rank() || !p.leq(graph.degree(lambda))) {
    throw Error(ErrorCode::BadSplit, p.to_string() + " is not below d(" + graph.id(lambda) +
                                         ") = " + graph.degree(lambda).to_string());
  }
  auto found = graph.splits(lambda, p);
  if (found.size() != 1) {
    throw Error(ErrorCode::InvalidModel, "'" + graph.id(lambda) + "' has " +
                                             std::to_string(found.size()) +
                                             " factorisations at " + p.to_string());
  }
  return found.front();
}

std::pair<std::string, std::string> factorise(const FiniteKGraph& graph, std::string_view lambda,
                                              const Degree& p) {
  auto s = factorise(graph, graph.index(lambda), p);
  return {graph.id(s.head), graph.id(s.tail)};
}

MorphismIndex segment(const FiniteKGraph& graph, MorphismIndex lambda, const Degree& from,
                      const Degree& to) {
  if (!from.leq(to)) {
    throw Error(ErrorCode::BadSplit, from.to_string() + " is not below " + to.to_string());
  }
  const auto rest = factorise(graph, lambda, from).tail;
  return factorise(graph, rest, to - from).head;
}

bool extends(const FiniteKGraph& graph, MorphismIndex lambda, MorphismIndex alpha) {
  for (const auto& s : graph.splits(lambda, graph.degree(alpha))) {
    if (s.head == alpha) return true;
  }
  return false;
}

std::set<MorphismIndex> mce(const FiniteKGraph& graph, MorphismIndex mu, MorphismIndex nu) {
  std::set<MorphismIndex> out;
  if (graph.range(mu) != graph.range(nu)) return out;
  const Degree target = graph.degree(mu).join(graph.degree(nu));
  if (!graph.within_bound(target)) {
    throw Error(ErrorCode::OutsideTruncation, "MCE(" + graph.id(mu) + "," + graph.id(nu) +
                                                  ") needs degree " + target.to_string());
  }
  for (auto lambda : graph.with_range(graph.range(mu))) {
    if (graph.degree(lambda) == target && extends(graph, lambda, mu) &&
        extends(graph, lambda, nu)) {
      out.insert(lambda);
    }
  }
  return out;
}

std::set<MorphismIndex> mce_set(const FiniteKGraph& graph,
                                std::span<const MorphismIndex> family) {
  if (family.empty()) throw Error(ErrorCode::Malformed, "MCE of an empty family");
  if (family.size() == 1) return {family.front()};
  const auto lambda = family.back();
  std::set<MorphismIndex> out;
  for (auto mu : mce_set(graph, family.first(family.size() - 1))) {
    auto part = mce(graph, lambda, mu);
    out.insert(part.begin(), part.end());
  }
  return out;
}

std::vector<VertexSetReport> validate_kgraph(const FiniteKGraph& g) {
  static const std::vector<std::string> kOrder = {"truncation", "composition", "degree",
                                                  "associativity", "factorisation"};
  std::map<std::string, std::vector<std::string>> failures;
  auto fail = [&](const std::string& law, std::vector<std::string> witness) {
    failures.try_emplace(law, std::move(witness));
  };

  for (auto m : g.non_identities()) {
    if (g.degree(m).is_zero()) fail("degree", {g.id(m)});
    if (!g.within_bound(g.degree(m))) fail("truncation", {g.id(m)});
  }

  // table entries: endpoints and degrees
  std::vector<std::vector<std::pair<MorphismIndex, MorphismIndex>>> by_left(g.size());
  for (const auto& c : g.composites()) {
    if (g.is_identity(c.left) || g.is_identity(c.right)) continue;
    by_left[c.left].emplace_back(c.right, c.result);
    const std::vector<std::string> w = {g.id(c.left), g.id(c.right), g.id(c.result)};
    if (g.source(c.left) != g.range(c.right) || g.range(c.result) != g.range(c.left) ||
        g.source(c.result) != g.source(c.right)) {
      fail("composition", w);
    }
    if (g.degree(c.result) != g.degree(c.left) + g.degree(c.right)) fail("degree", w);
  }

  // every composable pair inside the bound must have a composite
  for (auto v : g.vertices()) {
    for (auto a : g.with_source(v)) {
      if (g.is_identity(a)) continue;
      for (auto b : g.with_range(v)) {
        if (g.is_identity(b) || g.try_compose(a, b)) continue;
        if (g.within_bound(g.degree(a) + g.degree(b))) fail("factorisation", {g.id(a), g.id(b)});
      }
    }
  }

  // unique factorisation at every split
  for (MorphismIndex m = 0; m < g.size(); ++m) {
    for (const auto& p : degrees_below(g.degree(m))) {
      const auto count = g.splits(m, p).size();
      if (count != 1) {
        fail("factorisation", {g.id(m), p.to_string(), std::to_string(count) + " splits"});
      }
    }
  }

  auto check_triple = [&](MorphismIndex a, MorphismIndex b, MorphismIndex ab, MorphismIndex c,
                          MorphismIndex bc) {
    const auto lhs = g.try_compose(ab, c);
    const auto rhs = g.try_compose(a, bc);
    if (lhs && rhs && *lhs == *rhs) return;
    if (!lhs && !rhs) return;  // reported above as a missing composite if it matters
    if ((!lhs || !rhs) && !g.within_bound(g.degree(a) + g.degree(b) + g.degree(c))) return;
    fail("associativity", {g.id(a), g.id(b), g.id(c)});
  };
  if (g.size() <= kExhaustiveAssociativityLimit) {
    for (MorphismIndex a = 0; a < g.size(); ++a) {
      for (const auto& [b, ab] : by_left[a]) {
        for (const auto& [c, bc] : by_left[b]) check_triple(a, b, ab, c, bc);
      }
    }
  } else {
    std::vector<std::array<MorphismIndex, 3>> entries;
    for (MorphismIndex a = 0; a < g.size(); ++a) {
      for (const auto& [b, ab] : by_left[a]) entries.push_back({a, b, ab});
    }
    std::mt19937_64 rng(0x6b677261ULL);
    for (std::size_t t = 0; t < kSampledTriples && !entries.empty(); ++t) {
      const auto& [a, b, ab] = entries[rng() % entries.size()];
      const auto& tails = by_left[b];
      if (tails.empty()) continue;
      const auto& [c, bc] = tails[rng() % tails.size()];
      check_triple(a, b, ab, c, bc);
    }
  }

  std::vector<VertexSetReport> reports;
  for (const auto& law : kOrder) {
    if (auto it = failures.find(law); it != failures.end()) {
      reports.push_back({law, false, it->second});
    }
  }
  return reports;
}

}  // namespace kgraph
