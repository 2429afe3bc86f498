#include <gtest/gtest.h>

#include "kgraph/io.hpp"
#include "kgraph/constructions.hpp"
#include "kgraph/export.hpp"
#include "kgraph/simplex.hpp"
#include "kgraph/surfaces.hpp"

using namespace kgraph;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::Malformed;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Json, GraphRoundTrip) {
  for (const auto& g : {build_simplex(2), build_sphere(2), path_category({"v"}, {{"e", "v", "v"}}, 3)}) {
    const auto text = dump(to_json(g));
    EXPECT_EQ(graph_from_json(parse_json(text)), g);
    EXPECT_EQ(dump(to_json(graph_from_json(parse_json(text)))), text);
  }
}

TEST(Json, SkeletonRoundTrip) {
  const auto m = compact_surface(std::vector<SurfaceSummand>{SurfaceSummand::T, SurfaceSummand::K});
  const auto text = dump(to_json(m));
  EXPECT_EQ(marked_from_json(parse_json(text)), m);
  const auto model = model_from_json(parse_json(text));
  ASSERT_TRUE(std::holds_alternative<MarkedSkeleton>(model));
  const auto plain = model_from_json(to_json(m.skeleton));
  ASSERT_TRUE(std::holds_alternative<Skeleton2Graph>(plain));
  EXPECT_EQ(std::get<Skeleton2Graph>(plain), m.skeleton);
}

TEST(Json, RelationRoundTrip) {
  const MorphismRelation r{RelationMode::Explicit, {{"a", "b"}}, {{"c", "d", "e"}}};
  const auto back = relation_from_json(to_json(r));
  EXPECT_EQ(back.mode, r.mode);
  EXPECT_EQ(back.pairs, r.pairs);
  EXPECT_EQ(back.classes, r.classes);
}

TEST(Json, HomologyDocument) {
  const std::vector<HomologyGroup> groups{{1, {}}, {2, {2}}};
  EXPECT_EQ(to_json(groups, -1).dump(),
            R"({"H":[{"betti":1,"torsion":[]},{"betti":2,"torsion":[2]}],"euler":-1})");
}

TEST(Json, Errors) {
  EXPECT_EQ(code_of([] { parse_json("{not json"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { model_from_json(parse_json(R"({"kind":"banana"})")); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { graph_from_json(parse_json(R"({"kind":"category","rank":1})")); }),
            ErrorCode::Parse);
  EXPECT_EQ(code_of([] {
              graph_from_json(parse_json(
                  R"({"kind":"category","rank":1,"vertices":["v"],"morphisms":[{"id":"e","d":[1],"r":"v","s":"w"}]})"));
            }),
            ErrorCode::Malformed);
  EXPECT_EQ(code_of([] { relation_from_json(parse_json(R"({"kind":"relation","mode":"odd"})")); }),
            ErrorCode::Parse);
}

TEST(Export, Dot) {
  const auto dot = export_dot(basic_surface(SurfaceSummand::K).skeleton);
  EXPECT_EQ(count(dot, "style=solid"), 4u);
  EXPECT_EQ(count(dot, "style=dashed"), 4u);
  EXPECT_EQ(count(dot, ";\n") - count(dot, "->"), 4u);
  EXPECT_EQ(dot, export_dot(basic_surface(SurfaceSummand::K).skeleton));
  const auto s2 = export_dot(build_simplex(2));
  EXPECT_EQ(count(s2, "style=solid"), 9u);
  EXPECT_EQ(count(s2, "style=dashed"), 9u);
}

TEST(Export, OffSimplex) {
  const auto off = export_off(build_simplex(2));
  std::istringstream in(off);
  std::string magic;
  std::size_t nv = 0, nf = 0, ne = 0;
  in >> magic >> nv >> nf >> ne;
  EXPECT_EQ(magic, "OFF");
  EXPECT_EQ(nv, 13u);
  EXPECT_EQ(nf, 6u);
  for (std::size_t i = 0; i < nv; ++i) {
    double x, y, z;
    in >> x >> y >> z;
    EXPECT_GE(x, 0);
    EXPECT_GE(y, 0);
    EXPECT_GE(z, 0);
    EXPECT_NEAR(x + y + z, 1.0, 1e-9);
  }
  for (std::size_t i = 0; i < nf; ++i) {
    std::size_t four, a, b, c, d;
    in >> four >> a >> b >> c >> d;
    EXPECT_EQ(four, 4u);
    EXPECT_EQ(std::set<std::size_t>({a, b, c, d}).size(), 4u);
  }
  EXPECT_EQ(off, export_off(build_simplex(2)));
}

TEST(Export, OffSphere) {
  const auto off = export_off(build_sphere(2));
  std::istringstream in(off);
  std::string magic;
  std::size_t nv = 0, nf = 0;
  in >> magic >> nv >> nf;
  EXPECT_EQ(nv, 14u);
  EXPECT_EQ(nf, 12u);
}

TEST(Export, NoEmbedding) {
  EXPECT_EQ(code_of([] { export_off(basic_surface(SurfaceSummand::T).skeleton); }), ErrorCode::NoEmbedding);
  EXPECT_EQ(code_of([] { export_off(build_simplex(3)); }), ErrorCode::NoEmbedding);
  EXPECT_EQ(code_of([] { export_off(build_wedge(2, 2)); }), ErrorCode::NoEmbedding);
}
