#include "kgraph/io.hpp"

#include <algorithm>

namespace kgraph {

namespace {

Json degree_json(const Degree& d) { return Json(d.coords()); }

Degree degree_from(const Json& j) { return Degree(j.get<std::vector<Degree::value_type>>()); }

Json edges_json(const std::vector<EdgeSpec>& edges) {
  Json out = Json::array();
  for (const auto& e : edges) out.push_back({{"id", e.id}, {"r", e.range}, {"s", e.source}});
  return out;
}

std::vector<EdgeSpec> edges_from(const Json& j) {
  std::vector<EdgeSpec> out;
  for (const auto& e : j) {
    out.push_back({e.at("id").get<std::string>(), e.at("r").get<std::string>(),
                   e.at("s").get<std::string>()});
  }
  return out;
}

Json square_json(const Square& s) { return Json::array({s.f, s.g, s.g2, s.f2}); }

Square square_from(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw Error(ErrorCode::Parse, "a square has four edges");
  return {j[0].get<std::string>(), j[1].get<std::string>(), j[2].get<std::string>(),
          j[3].get<std::string>()};
}

void expect_kind(const Json& doc, std::string_view kind) {
  if (!doc.is_object() || !doc.contains("kind") || doc["kind"] != kind) {
    throw Error(ErrorCode::Parse, "expected a document of kind '" + std::string(kind) + "'");
  }
}

// Runs a reader, turning library-level JSON errors into Parse.
template <class F>
auto reading(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

}  // namespace

Json to_json(const FiniteKGraph& graph) {
  Json doc;
  doc["kind"] = "category";
  doc["rank"] = graph.rank();
  doc["vertices"] = graph.vertex_ids();
  Json morphisms = Json::array();
  for (const auto& m : graph.morphism_specs()) {
    morphisms.push_back({{"id", m.id}, {"d", degree_json(m.degree)}, {"r", m.range}, {"s", m.source}});
  }
  doc["morphisms"] = std::move(morphisms);
  Json table = Json::array();
  for (const auto& c : graph.composition_table()) table.push_back({c.left, c.right, c.result});
  doc["compose"] = std::move(table);
  if (graph.degree_bound()) doc["bound"] = degree_json(*graph.degree_bound());
  return doc;
}

Json to_json(const Skeleton2Graph& skeleton) {
  Json doc;
  doc["kind"] = "skeleton2";
  doc["vertices"] = skeleton.vertices();
  doc["blue"] = edges_json(skeleton.blue());
  doc["red"] = edges_json(skeleton.red());
  Json squares = Json::array();
  for (const auto& s : skeleton.squares()) squares.push_back(square_json(s));
  doc["squares"] = std::move(squares);
  return doc;
}

Json to_json(const MarkedSkeleton& marked) {
  auto doc = to_json(marked.skeleton);
  doc["u"] = marked.u;
  doc["v"] = marked.v;
  doc["square"] = square_json(marked.square);
  return doc;
}

Json to_json(const Model& model) {
  return std::visit([](const auto& m) { return to_json(m); }, model);
}

Json to_json(const MorphismRelation& relation) {
  Json doc;
  doc["kind"] = "relation";
  doc["mode"] = relation.mode == RelationMode::Generated ? "generated" : "explicit";
  Json pairs = Json::array();
  for (const auto& [a, b] : relation.pairs) pairs.push_back({a, b});
  doc["pairs"] = std::move(pairs);
  doc["classes"] = relation.classes;
  return doc;
}

Json to_json(const std::vector<HomologyGroup>& groups, long euler) {
  Json h = Json::array();
  for (const auto& g : groups) {
    Json torsion = Json::array();
    for (const auto& t : g.torsion) {
      if (t.fits_ulong_p()) {
        torsion.push_back(t.get_ui());
      } else {
        torsion.push_back(t.get_str());
      }
    }
    h.push_back({{"betti", g.betti}, {"torsion", std::move(torsion)}});
  }
  return {{"H", std::move(h)}, {"euler", euler}};
}

FiniteKGraph graph_from_json(const Json& doc) {
  expect_kind(doc, "category");
  return reading([&] {
    std::vector<MorphismSpec> morphisms;
    for (const auto& m : doc.at("morphisms")) {
      morphisms.push_back({m.at("id").get<std::string>(), degree_from(m.at("d")),
                           m.at("r").get<std::string>(), m.at("s").get<std::string>()});
    }
    std::vector<CompositionSpec> table;
    for (const auto& c : doc.value("compose", Json::array())) {
      if (!c.is_array() || c.size() != 3) throw Error(ErrorCode::Parse, "a compose entry has three ids");
      table.push_back({c[0].get<std::string>(), c[1].get<std::string>(), c[2].get<std::string>()});
    }
    std::optional<Degree> bound;
    if (doc.contains("bound")) bound = degree_from(doc["bound"]);
    return FiniteKGraph(doc.at("rank").get<std::size_t>(),
                        doc.at("vertices").get<std::vector<std::string>>(), std::move(morphisms),
                        std::move(table), std::move(bound));
  });
}

Skeleton2Graph skeleton_from_json(const Json& doc) {
  expect_kind(doc, "skeleton2");
  return reading([&] {
    std::vector<Square> squares;
    for (const auto& s : doc.value("squares", Json::array())) squares.push_back(square_from(s));
    return Skeleton2Graph(doc.at("vertices").get<std::vector<std::string>>(),
                          edges_from(doc.value("blue", Json::array())),
                          edges_from(doc.value("red", Json::array())), std::move(squares));
  });
}

MarkedSkeleton marked_from_json(const Json& doc) {
  auto skeleton = skeleton_from_json(doc);
  return reading([&] {
    return MarkedSkeleton{std::move(skeleton), doc.at("u").get<std::string>(),
                          doc.at("v").get<std::string>(), square_from(doc.at("square"))};
  });
}

Model model_from_json(const Json& doc) {
  if (doc.is_object() && doc.value("kind", "") == "category") return graph_from_json(doc);
  if (doc.is_object() && doc.value("kind", "") == "skeleton2") {
    if (doc.contains("u") && doc.contains("v") && doc.contains("square")) return marked_from_json(doc);
    return skeleton_from_json(doc);
  }
  throw Error(ErrorCode::Parse, "document kind must be 'category' or 'skeleton2'");
}

MorphismRelation relation_from_json(const Json& doc) {
  expect_kind(doc, "relation");
  return reading([&] {
    MorphismRelation rel;
    const auto mode = doc.value("mode", std::string("generated"));
    if (mode == "explicit") {
      rel.mode = RelationMode::Explicit;
    } else if (mode != "generated") {
      throw Error(ErrorCode::Parse, "relation mode must be 'generated' or 'explicit'");
    }
    for (const auto& p : doc.value("pairs", Json::array())) {
      if (!p.is_array() || p.size() != 2) throw Error(ErrorCode::Parse, "a pair has two ids");
      rel.pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
    rel.classes = doc.value("classes", std::vector<std::vector<std::string>>{});
    return rel;
  });
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace kgraph
