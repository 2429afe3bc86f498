#include "kgraph/simplex.hpp"

#include <algorithm>
#include <map>

#include "kgraph/constructions.hpp"
#include "kgraph/quotient.hpp"

namespace kgraph {

bool is_placing(const Placing& f) {
  if (f.empty()) throw Error(ErrorCode::OutOfRange, "a placing has at least one value");
  const std::size_t k = f.size() - 1;
  for (auto v : f) {
    if (v > k) {
      throw Error(ErrorCode::OutOfRange,
                  "value " + std::to_string(v) + " outside {0.." + std::to_string(k) + "}");
    }
  }
  for (auto fj : f) {
    const auto below = std::count_if(f.begin(), f.end(), [fj](unsigned fi) { return fi < fj; });
    if (static_cast<std::size_t>(below) != fj) return false;
  }
  return true;
}

std::vector<Placing> enumerate_placings(std::size_t k) {
  std::vector<Placing> out;
  Placing f(k + 1, 0);
  while (true) {
    if (is_placing(f)) out.push_back(f);
    std::size_t i = f.size();
    while (i > 0 && f[i - 1] == k) f[--i] = 0;
    if (i == 0) break;
    ++f[i - 1];
  }
  return out;
}

bool placing_leq(const Placing& f, const Placing& g) {
  if (f.size() != g.size()) return false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] > g[i]) return false;
  }
  return true;
}

Degree height(const Placing& f) {
  Degree h(f.size() - 1);
  for (auto v : f) {
    if (v > 0) h[v - 1] = 1;
  }
  return h;
}

Placing tail_factor(const Placing& f, const Degree& z) {
  if (z.rank() + 1 != f.size() || !z.leq(height(f))) {
    throw Error(ErrorCode::HeightExceeded,
                "height " + z.to_string() + " is not below h(f) = " + height(f).to_string());
  }
  Placing g(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    unsigned j = f[i];
    while (j > 0 && z[j - 1] != 1) --j;
    g[i] = j;
  }
  return g;
}

std::string placing_label(const Placing& f) {
  if (f.size() > 10) throw Error(ErrorCode::OutOfRange, "labels need k <= 9");
  std::map<unsigned, std::string> blocks;
  for (std::size_t i = 0; i < f.size(); ++i) blocks[f[i]] += static_cast<char>('0' + i);
  std::string out = "{";
  for (const auto& [value, digits] : blocks) out += (out.size() > 1 ? "," : "") + digits;
  return out + "}";
}

Placing parse_placing(std::string_view label) {
  auto bad = [&] { return Error(ErrorCode::Parse, "bad placing label '" + std::string(label) + "'"); };
  if (label.size() < 3 || label.front() != '{' || label.back() != '}') throw bad();
  const auto body = label.substr(1, label.size() - 2);
  std::vector<std::vector<unsigned>> blocks(1);
  for (char c : body) {
    if (c == ',') {
      blocks.emplace_back();
    } else if (c >= '0' && c <= '9') {
      blocks.back().push_back(static_cast<unsigned>(c - '0'));
    } else {
      throw bad();
    }
  }
  std::size_t total = 0;
  for (const auto& b : blocks) {
    if (b.empty()) throw bad();
    total += b.size();
  }
  Placing f(total, 0);
  std::vector<bool> seen(total, false);
  unsigned below = 0;
  for (const auto& b : blocks) {
    for (auto i : b) {
      if (i >= total || seen[i]) throw bad();
      seen[i] = true;
      f[i] = below;
    }
    below += static_cast<unsigned>(b.size());
  }
  return f;
}

std::string simplex_morphism_id(const Placing& f, const Placing& g) {
  return pair_id(placing_label(f), placing_label(g));
}

FiniteKGraph build_simplex(std::size_t k) {
  const auto placings = enumerate_placings(k);
  const std::size_t n = placings.size();
  std::vector<std::vector<std::size_t>> above(n);  // strictly above
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && placing_leq(placings[a], placings[b])) above[a].push_back(b);
    }
  }
  std::vector<std::string> labels;
  std::vector<Degree> heights;
  for (const auto& f : placings) {
    labels.push_back(placing_label(f));
    heights.push_back(height(f));
  }
  auto id = [&](std::size_t a, std::size_t b) { return pair_id(labels[a], labels[b]); };

  std::vector<std::string> vertices;
  std::vector<MorphismSpec> morphisms;
  std::vector<CompositionSpec> table;
  for (std::size_t a = 0; a < n; ++a) {
    vertices.push_back(id(a, a));
    for (auto b : above[a]) {
      morphisms.push_back({id(a, b), heights[b] - heights[a], id(a, a), id(b, b)});
      for (auto c : above[b]) table.push_back({id(a, b), id(b, c), id(a, c)});
    }
  }
  return FiniteKGraph(k, std::move(vertices), std::move(morphisms), std::move(table));
}

std::string sphere_base_vertex(std::size_t k) {
  const Placing zero(k + 1, 0);
  return pair_id("0", simplex_morphism_id(zero, zero));
}

FiniteKGraph build_sphere(std::size_t k) {
  const auto simplex = build_simplex(k);
  const auto doubled = cartesian_product(discrete_graph(0, {"0", "1"}), simplex);
  MorphismRelation rel;
  rel.mode = RelationMode::Explicit;
  const Placing zero(k + 1, 0);
  const auto zero_vertex = simplex.index(simplex_morphism_id(zero, zero));
  for (MorphismIndex m = 0; m < simplex.size(); ++m) {
    if (simplex.range(m) == zero_vertex) continue;
    rel.classes.push_back({pair_id("0", simplex.id(m)), pair_id("1", simplex.id(m))});
  }
  return quotient(doubled, rel);
}

FiniteKGraph build_wedge(std::size_t k, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::OutOfRange, "a wedge needs at least one sphere");
  const auto sphere = build_sphere(k);
  std::vector<std::string> tags;
  for (std::size_t i = 1; i <= n; ++i) tags.push_back(std::to_string(i));
  const auto copies = cartesian_product(discrete_graph(0, tags), sphere);
  MorphismRelation rel;
  rel.mode = RelationMode::Explicit;
  rel.classes.emplace_back();
  for (const auto& t : tags) rel.classes.back().push_back(pair_id(t, sphere_base_vertex(k)));
  return quotient(copies, rel);
}

EmbeddedPoint barycentre(std::size_t k) {
  return {std::vector<mpq_class>(k + 1, mpq_class(1, k + 1))};
}

EmbeddedPoint placing_vertex(const Placing& f, unsigned n) {
  if (n == 0 || std::find(f.begin(), f.end(), n) == f.end()) {
    throw Error(ErrorCode::OutOfRange, std::to_string(n) + " is not a nonzero value of the placing");
  }
  EmbeddedPoint p{std::vector<mpq_class>(f.size(), 0)};
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (f[j] < n) p.coords[j] = mpq_class(1, n);
  }
  return p;
}

EmbeddedPoint embed(const Placing& f, const std::vector<mpq_class>& t) {
  const std::size_t k = f.size() - 1;
  const auto h = height(f);
  if (t.size() != k) throw Error(ErrorCode::OutOfBox, "point has the wrong number of coordinates");
  mpq_class sup = 0;
  mpq_class sum = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (t[i] < 0 || t[i] > h[i]) {
      throw Error(ErrorCode::OutOfBox, "coordinate " + std::to_string(i + 1) + " = " +
                                           t[i].get_str() + " outside [0," +
                                           std::to_string(h[i]) + "]");
    }
    sup = std::max(sup, t[i]);
    sum += t[i];
  }
  auto out = barycentre(k);
  if (sum == 0) return out;
  for (auto& c : out.coords) c *= 1 - sup;
  const mpq_class scale = sup / sum;
  for (unsigned n = 1; n <= k; ++n) {
    if (h[n - 1] == 0 || t[n - 1] == 0) continue;
    const auto v = placing_vertex(f, n);
    for (std::size_t j = 0; j <= k; ++j) out.coords[j] += scale * t[n - 1] * v.coords[j];
  }
  return out;
}

}  // namespace kgraph
