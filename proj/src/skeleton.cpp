#include "kgraph/skeleton.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kgraph {

Skeleton2Graph::Skeleton2Graph(std::vector<std::string> vertices, std::vector<EdgeSpec> blue,
                               std::vector<EdgeSpec> red, std::vector<Square> squares)
    : vertices_(std::move(vertices)),
      blue_(std::move(blue)),
      red_(std::move(red)),
      squares_(std::move(squares)) {
  std::sort(vertices_.begin(), vertices_.end());
  auto by_id = [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; };
  std::sort(blue_.begin(), blue_.end(), by_id);
  std::sort(red_.begin(), red_.end(), by_id);
  std::sort(squares_.begin(), squares_.end());

  std::set<std::string> seen(vertices_.begin(), vertices_.end());
  if (seen.size() != vertices_.size()) throw Error(ErrorCode::Malformed, "duplicate vertex id");
  auto add_edges = [&](const std::vector<EdgeSpec>& edges, Colour colour) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = edges[i];
      if (!seen.insert(e.id).second) throw Error(ErrorCode::Malformed, "duplicate id '" + e.id + "'");
      if (!has_vertex(e.range) || !has_vertex(e.source)) {
        throw Error(ErrorCode::Malformed, "edge '" + e.id + "' has an unknown endpoint");
      }
      edge_index_.emplace(e.id, std::make_pair(colour, i));
    }
  };
  add_edges(blue_, Colour::Blue);
  add_edges(red_, Colour::Red);
  for (const auto& s : squares_) {
    auto expect = [&](const std::string& id, Colour c) {
      auto it = edge_index_.find(id);
      if (it == edge_index_.end() || it->second.first != c) {
        throw Error(ErrorCode::Malformed, "square entry '" + id + "' is not a " +
                                              (c == Colour::Blue ? "blue" : "red") + " edge");
      }
    };
    expect(s.f, Colour::Blue);
    expect(s.f2, Colour::Blue);
    expect(s.g, Colour::Red);
    expect(s.g2, Colour::Red);
  }
}

bool Skeleton2Graph::has_vertex(const std::string& id) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), id);
}

const EdgeSpec& Skeleton2Graph::edge(const std::string& id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) throw Error(ErrorCode::UnknownId, "no edge '" + id + "'");
  const auto& [colour, i] = it->second;
  return colour == Colour::Blue ? blue_[i] : red_[i];
}

Colour Skeleton2Graph::colour(const std::string& edge_id) const {
  auto it = edge_index_.find(edge_id);
  if (it == edge_index_.end()) throw Error(ErrorCode::UnknownId, "no edge '" + edge_id + "'");
  return it->second.first;
}

std::optional<Square> Skeleton2Graph::square_for(const std::string& f, const std::string& g) const {
  for (const auto& s : squares_) {
    if (s.f == f && s.g == g) return s;
  }
  return std::nullopt;
}

bool operator==(const Skeleton2Graph& a, const Skeleton2Graph& b) {
  return a.vertices_ == b.vertices_ && a.blue_ == b.blue_ && a.red_ == b.red_ &&
         a.squares_ == b.squares_;
}

std::vector<VertexSetReport> validate_skeleton(const Skeleton2Graph& sk) {
  std::vector<VertexSetReport> reports;
  auto add = [&](std::string name, std::vector<std::string> witness) {
    for (const auto& r : reports) {
      if (r.predicate == name) return;
    }
    reports.push_back({std::move(name), false, std::move(witness)});
  };

  // blue-red paths fg (s(f) = r(g)) and red-blue paths g2 f2 (s(g2) = r(f2))
  std::set<std::pair<std::string, std::string>> blue_red;
  std::set<std::pair<std::string, std::string>> red_blue;
  for (const auto& f : sk.blue()) {
    for (const auto& g : sk.red()) {
      if (f.source == g.range) blue_red.emplace(f.id, g.id);
      if (g.source == f.range) red_blue.emplace(g.id, f.id);
    }
  }

  std::map<std::pair<std::string, std::string>, int> hits_br;
  std::map<std::pair<std::string, std::string>, int> hits_rb;
  for (const auto& s : sk.squares()) {
    const auto& f = sk.edge(s.f);
    const auto& g = sk.edge(s.g);
    const auto& g2 = sk.edge(s.g2);
    const auto& f2 = sk.edge(s.f2);
    if (f.source != g.range || g2.source != f2.range || f.range != g2.range ||
        g.source != f2.source) {
      add("square-endpoints", {s.f, s.g, s.g2, s.f2});
    }
    if (++hits_br[{s.f, s.g}] > 1) add("blue-red-injective", {s.f, s.g});
    if (++hits_rb[{s.g2, s.f2}] > 1) add("red-blue-injective", {s.g2, s.f2});
  }
  for (const auto& p : blue_red) {
    if (!hits_br.count(p)) add("blue-red-coverage", {p.first, p.second});
  }
  for (const auto& p : red_blue) {
    if (!hits_rb.count(p)) add("red-blue-coverage", {p.first, p.second});
  }
  return reports;
}

}  // namespace kgraph
