#include "kgraph/surfaces.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

namespace kgraph {

namespace {

// An arrow as drawn: tail -> head.
struct DrawnEdge {
  std::string id;
  std::string tail;
  std::string head;
};

struct DrawnSkeleton {
  std::vector<std::string> vertices;
  std::vector<DrawnEdge> blue;
  std::vector<DrawnEdge> red;
};

const DrawnSkeleton& drawn(SurfaceSummand tag) {
  static const DrawnSkeleton sphere{
      {"u", "v", "w", "x", "y", "z"},
      {{"a", "v", "w"}, {"b", "y", "w"}, {"c", "x", "u"}, {"d", "x", "z"}},
      {{"e", "v", "x"}, {"f", "y", "x"}, {"g", "w", "u"}, {"h", "w", "z"}}};
  // the torus and the Klein bottle share a skeleton
  static const DrawnSkeleton torus{
      {"u", "v", "w", "x"},
      {{"a", "v", "w"}, {"b", "v", "w"}, {"c", "x", "u"}, {"d", "x", "u"}},
      {{"e", "v", "x"}, {"f", "v", "x"}, {"g", "w", "u"}, {"h", "w", "u"}}};
  static const DrawnSkeleton plane{
      {"u", "v", "w", "x", "y"},
      {{"a", "v", "w"}, {"b", "x", "w"}, {"c", "y", "u"}, {"d", "y", "u"}},
      {{"e", "v", "y"}, {"f", "x", "y"}, {"g", "w", "u"}, {"h", "w", "u"}}};
  switch (tag) {
    case SurfaceSummand::S:
      return sphere;
    case SurfaceSummand::P:
      return plane;
    default:
      return torus;
  }
}

const Square kDistinguished{"c", "e", "g", "a"};

std::vector<EdgeSpec> orient(const std::vector<DrawnEdge>& edges, bool reversed) {
  std::vector<EdgeSpec> out;
  for (const auto& e : edges) {
    out.push_back(reversed ? EdgeSpec{e.id, e.tail, e.head} : EdgeSpec{e.id, e.head, e.tail});
  }
  return out;
}

const EdgeSpec* find_edge(const Skeleton2Graph& sk, const std::string& id) {
  for (const auto* list : {&sk.blue(), &sk.red()}) {
    for (const auto& e : *list) {
      if (e.id == id) return &e;
    }
  }
  return nullptr;
}

std::optional<std::string> marking_problem(const MarkedSkeleton& m) {
  const auto& sk = m.skeleton;
  if (!sk.has_vertex(m.u)) return "u = '" + m.u + "' is not a vertex";
  if (!sk.has_vertex(m.v)) return "v = '" + m.v + "' is not a vertex";
  for (const auto* list : {&sk.blue(), &sk.red()}) {
    for (const auto& e : *list) {
      if (e.source == m.u) return "edge '" + e.id + "' has source u";
      if (e.range == m.v) return "edge '" + e.id + "' has range v";
    }
  }
  const auto& sq = m.square;
  if (!std::binary_search(sk.squares().begin(), sk.squares().end(), sq)) {
    return "square (" + sq.f + "," + sq.g + "," + sq.g2 + "," + sq.f2 + ") is not a factorisation rule";
  }
  const auto* f = find_edge(sk, sq.f);
  const auto* g = find_edge(sk, sq.g);
  const auto* g2 = find_edge(sk, sq.g2);
  if (f->range != m.u) return "edge '" + f->id + "' does not have range u";
  if (g->source != m.v) return "edge '" + g->id + "' does not have source v";
  const std::string corners[] = {m.u, f->source, g2->source, m.v};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (corners[i] == corners[j]) {
        return "vertices u, s(f), s(g2), v are not distinct: '" + corners[i] + "' repeats";
      }
    }
  }
  return std::nullopt;
}

// Every square set containing `fixed` that pairs blue-red paths with red-blue
// paths bijectively, preserving range and source.
void for_each_square_set(const std::vector<EdgeSpec>& blue, const std::vector<EdgeSpec>& red,
                         const Square& fixed,
                         const std::function<void(const std::vector<Square>&)>& visit) {
  using Key = std::pair<std::string, std::string>;  // (range, source)
  std::map<Key, std::vector<std::pair<std::string, std::string>>> blue_red;
  std::map<Key, std::vector<std::pair<std::string, std::string>>> red_blue;
  for (const auto& f : blue) {
    for (const auto& g : red) {
      if (f.source == g.range) blue_red[{f.range, g.source}].emplace_back(f.id, g.id);
      if (g.source == f.range) red_blue[{g.range, f.source}].emplace_back(g.id, f.id);
    }
  }
  if (blue_red.size() != red_blue.size()) return;
  bool fixed_seen = false;
  for (auto& [key, paths] : blue_red) {
    auto it = red_blue.find(key);
    if (it == red_blue.end() || it->second.size() != paths.size()) return;
    auto fp = std::find(paths.begin(), paths.end(), std::pair{fixed.f, fixed.g});
    auto gp = std::find(it->second.begin(), it->second.end(), std::pair{fixed.g2, fixed.f2});
    if ((fp == paths.end()) != (gp == it->second.end())) return;
    if (fp != paths.end()) {
      paths.erase(fp);
      it->second.erase(gp);
      fixed_seen = true;
    }
  }
  if (!fixed_seen) return;

  std::vector<const std::vector<std::pair<std::string, std::string>>*> lefts;
  std::vector<std::vector<std::pair<std::string, std::string>>> rights;
  for (const auto& [key, paths] : blue_red) {
    lefts.push_back(&paths);
    auto r = red_blue.at(key);
    std::sort(r.begin(), r.end());
    rights.push_back(std::move(r));
  }
  std::vector<Square> squares{fixed};
  std::function<void(std::size_t)> recurse = [&](std::size_t group) {
    if (group == lefts.size()) {
      visit(squares);
      return;
    }
    auto& r = rights[group];
    do {
      const auto mark = squares.size();
      for (std::size_t i = 0; i < r.size(); ++i) {
        const auto& [f, g] = (*lefts[group])[i];
        squares.push_back({f, g, r[i].first, r[i].second});
      }
      recurse(group + 1);
      squares.resize(mark);
    } while (std::next_permutation(r.begin(), r.end()));
  };
  recurse(0);
}

MarkedSkeleton frozen(SurfaceSummand tag, std::vector<Square> squares) {
  const auto& d = drawn(tag);
  return {Skeleton2Graph(d.vertices, orient(d.blue, false), orient(d.red, false), std::move(squares)),
          "u", "v", kDistinguished};
}

}  // namespace

char to_char(SurfaceSummand tag) {
  switch (tag) {
    case SurfaceSummand::S:
      return 'S';
    case SurfaceSummand::T:
      return 'T';
    case SurfaceSummand::K:
      return 'K';
    case SurfaceSummand::P:
      return 'P';
  }
  return '?';
}

std::vector<SurfaceSummand> parse_surface_spec(std::string_view spec) {
  std::vector<SurfaceSummand> out;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    auto end = spec.find(',', pos);
    if (end == std::string_view::npos) end = spec.size();
    auto token = spec.substr(pos, end - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token == "S") {
      out.push_back(SurfaceSummand::S);
    } else if (token == "T") {
      out.push_back(SurfaceSummand::T);
    } else if (token == "K") {
      out.push_back(SurfaceSummand::K);
    } else if (token == "P") {
      out.push_back(SurfaceSummand::P);
    } else {
      throw Error(ErrorCode::Parse, "unknown surface summand '" + std::string(token) +
                                        "' in '" + std::string(spec) + "'");
    }
    pos = end + 1;
  }
  return out;
}

void check_marking(const MarkedSkeleton& marked) {
  if (auto problem = marking_problem(marked)) throw Error(ErrorCode::BadMarking, *problem);
}

std::vector<HomologyGroup> surface_homology(SurfaceSummand tag) {
  switch (tag) {
    case SurfaceSummand::S:
      return {{1, {}}, {0, {}}, {1, {}}};
    case SurfaceSummand::T:
      return {{1, {}}, {2, {}}, {1, {}}};
    case SurfaceSummand::K:
      return {{1, {}}, {1, {2}}, {0, {}}};
    case SurfaceSummand::P:
      return {{1, {}}, {0, {2}}, {0, {}}};
  }
  return {};
}

Regeneration regenerate_basic_surface(SurfaceSummand tag) {
  const auto& d = drawn(tag);
  const auto target = surface_homology(tag);
  Regeneration result{frozen(tag, {kDistinguished}), false, 0, 0};
  std::optional<MarkedSkeleton> best;
  for (bool reversed : {false, true}) {
    const auto blue = orient(d.blue, reversed);
    const auto red = orient(d.red, reversed);
    for_each_square_set(blue, red, kDistinguished, [&](const std::vector<Square>& squares) {
      ++result.candidates;
      MarkedSkeleton candidate{Skeleton2Graph(d.vertices, blue, red, squares), "u", "v",
                               kDistinguished};
      if (marking_problem(candidate) || !validate_skeleton(candidate.skeleton).empty()) return;
      if (homology(chain_complex(candidate.skeleton, false)) != target) return;
      ++result.matching;
      if (!best || candidate.skeleton.squares() < best->skeleton.squares()) {
        best = std::move(candidate);
        result.arrows_reversed = reversed;
      }
    });
  }
  if (!best) {
    throw Error(ErrorCode::InvalidModel,
                std::string("no square set realises surface ") + to_char(tag));
  }
  result.surface = std::move(*best);
  return result;
}

MarkedSkeleton basic_surface(SurfaceSummand tag) {
  // frozen output of regenerate_basic_surface; arrows as drawn
  switch (tag) {
    case SurfaceSummand::S:
      return frozen(tag, {{"c", "e", "g", "a"}, {"c", "f", "g", "b"}, {"d", "e", "h", "a"},
                          {"d", "f", "h", "b"}});
    case SurfaceSummand::T:
      return frozen(tag, {{"c", "e", "g", "a"}, {"c", "f", "g", "b"}, {"d", "e", "h", "a"},
                          {"d", "f", "h", "b"}});
    case SurfaceSummand::K:
      return frozen(tag, {{"c", "e", "g", "a"}, {"c", "f", "g", "b"}, {"d", "e", "h", "b"},
                          {"d", "f", "h", "a"}});
    case SurfaceSummand::P:
      return frozen(tag, {{"c", "e", "g", "a"}, {"c", "f", "h", "b"}, {"d", "e", "h", "a"},
                          {"d", "f", "g", "b"}});
  }
  throw Error(ErrorCode::Malformed, "unknown surface summand");
}

MarkedSkeleton with_suffix(const MarkedSkeleton& m, const std::string& suffix) {
  auto rename = [&](const std::vector<EdgeSpec>& edges) {
    std::vector<EdgeSpec> out;
    for (const auto& e : edges) out.push_back({e.id + suffix, e.range + suffix, e.source + suffix});
    return out;
  };
  std::vector<std::string> vertices;
  for (const auto& v : m.skeleton.vertices()) vertices.push_back(v + suffix);
  std::vector<Square> squares;
  auto sq = [&](const Square& s) {
    return Square{s.f + suffix, s.g + suffix, s.g2 + suffix, s.f2 + suffix};
  };
  for (const auto& s : m.skeleton.squares()) squares.push_back(sq(s));
  return {Skeleton2Graph(std::move(vertices), rename(m.skeleton.blue()), rename(m.skeleton.red()),
                         std::move(squares)),
          m.u + suffix, m.v + suffix, sq(m.square)};
}

MarkedSkeleton connected_sum(const MarkedSkeleton& a_in, const MarkedSkeleton& b_in) {
  check_marking(a_in);
  check_marking(b_in);

  std::set<std::string> a_ids(a_in.skeleton.vertices().begin(), a_in.skeleton.vertices().end());
  for (const auto* list : {&a_in.skeleton.blue(), &a_in.skeleton.red()}) {
    for (const auto& e : *list) a_ids.insert(e.id);
  }
  bool clash = false;
  for (const auto& v : b_in.skeleton.vertices()) {
    clash |= v != b_in.u && v != b_in.v && a_ids.count(v);
  }
  for (const auto* list : {&b_in.skeleton.blue(), &b_in.skeleton.red()}) {
    for (const auto& e : *list) clash |= a_ids.count(e.id) > 0;
  }
  const auto a = clash ? with_suffix(a_in, "_1") : a_in;
  const auto b = clash ? with_suffix(b_in, "_2") : b_in;

  auto merge = [&](const std::string& x) { return x == b.u ? a.u : x == b.v ? a.v : x; };
  std::vector<std::string> vertices = a.skeleton.vertices();
  for (const auto& x : b.skeleton.vertices()) {
    if (x != b.u && x != b.v) vertices.push_back(x);
  }
  auto edges = [&](const std::vector<EdgeSpec>& from_a, const std::vector<EdgeSpec>& from_b) {
    auto out = from_a;
    for (const auto& e : from_b) out.push_back({e.id, merge(e.range), merge(e.source)});
    return out;
  };
  std::vector<Square> squares;
  for (const auto& s : a.skeleton.squares()) {
    if (s != a.square) squares.push_back(s);
  }
  for (const auto& s : b.skeleton.squares()) {
    if (s != b.square) squares.push_back(s);
  }
  const Square eta{a.square.f, a.square.g, b.square.g2, b.square.f2};
  const Square zeta{b.square.f, b.square.g, a.square.g2, a.square.f2};
  squares.push_back(eta);
  squares.push_back(zeta);

  MarkedSkeleton out{Skeleton2Graph(std::move(vertices), edges(a.skeleton.blue(), b.skeleton.blue()),
                                    edges(a.skeleton.red(), b.skeleton.red()), std::move(squares)),
                     a.u, a.v, eta};
  const auto reports = validate_skeleton(out.skeleton);
  if (!reports.empty()) {
    throw Error(ErrorCode::InvalidModel, "connected sum fails " + reports.front().predicate);
  }
  return out;
}

MarkedSkeleton compact_surface(std::span<const SurfaceSummand> spec) {
  if (spec.empty()) throw Error(ErrorCode::Malformed, "a surface needs at least one summand");
  if (spec.size() == 1) return basic_surface(spec.front());
  auto result = with_suffix(basic_surface(spec[0]), "_1");
  for (std::size_t i = 1; i < spec.size(); ++i) {
    result = connected_sum(result, with_suffix(basic_surface(spec[i]), "_" + std::to_string(i + 1)));
  }
  return result;
}

}  // namespace kgraph
