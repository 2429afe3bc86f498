#include <gtest/gtest.h>

#include "kgraph/cubes.hpp"
#include "kgraph/homology.hpp"
#include "kgraph/surfaces.hpp"
#include "oracles.hpp"

using namespace kgraph;

namespace {

const SurfaceSummand kAll[] = {SurfaceSummand::S, SurfaceSummand::T, SurfaceSummand::K,
                               SurfaceSummand::P};

HomologyGroup Z(std::size_t b = 1, std::vector<mpz_class> t = {}) { return {b, std::move(t)}; }
HomologyGroup zero() { return {}; }

std::vector<HomologyGroup> homology_of(const MarkedSkeleton& m) { return homology(chain_complex(m.skeleton)); }

long chi(const MarkedSkeleton& m) { return euler_characteristic(chain_complex(m.skeleton)); }

MarkedSkeleton surface(std::vector<SurfaceSummand> spec) { return compact_surface(spec); }

}  // namespace

TEST(Surfaces, CatalogHomology) {
  EXPECT_EQ(homology_of(basic_surface(SurfaceSummand::S)), (std::vector<HomologyGroup>{Z(), zero(), Z()}));
  EXPECT_EQ(homology_of(basic_surface(SurfaceSummand::T)), (std::vector<HomologyGroup>{Z(), Z(2), Z()}));
  EXPECT_EQ(homology_of(basic_surface(SurfaceSummand::K)),
            (std::vector<HomologyGroup>{Z(), Z(1, {2}), zero()}));
  EXPECT_EQ(homology_of(basic_surface(SurfaceSummand::P)),
            (std::vector<HomologyGroup>{Z(), Z(0, {2}), zero()}));
  for (auto tag : kAll) EXPECT_EQ(homology_of(basic_surface(tag)), surface_homology(tag));
}

TEST(Surfaces, CatalogCellCounts) {
  const std::size_t vertices[] = {6, 4, 4, 5};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& sk = basic_surface(kAll[i]).skeleton;
    EXPECT_EQ(cubes(sk, 0).size(), vertices[i]);
    EXPECT_EQ(cubes(sk, 1).size(), 8u);
    EXPECT_EQ(cubes(sk, 2).size(), 4u);
  }
}

TEST(Surfaces, RegenerationReproducesCatalog) {
  for (auto tag : kAll) {
    const auto r = regenerate_basic_surface(tag);
    EXPECT_EQ(r.surface, basic_surface(tag)) << to_char(tag);
    EXPECT_FALSE(r.arrows_reversed);
    EXPECT_GE(r.candidates, r.matching);
    EXPECT_GE(r.matching, 1u);
  }
}

TEST(Surfaces, MarkingsHold) {
  for (auto tag : kAll) EXPECT_NO_THROW(check_marking(basic_surface(tag)));
  auto bad = basic_surface(SurfaceSummand::T);
  std::swap(bad.u, bad.v);
  try {
    check_marking(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadMarking);
  }
}

TEST(ConnectedSum, TwoTori) {
  const auto tt = connected_sum(basic_surface(SurfaceSummand::T), basic_surface(SurfaceSummand::T));
  EXPECT_EQ(cubes(tt.skeleton, 0).size(), 6u);
  EXPECT_EQ(cubes(tt.skeleton, 1).size(), 16u);
  EXPECT_EQ(cubes(tt.skeleton, 2).size(), 8u);
  EXPECT_EQ(chi(tt), -2);
  EXPECT_EQ(homology_of(tt), (std::vector<HomologyGroup>{Z(), Z(4), Z()}));
  EXPECT_TRUE(validate_skeleton(tt.skeleton).empty());
  EXPECT_NO_THROW(check_marking(tt));
}

TEST(ConnectedSum, SphereIsNeutral) {
  const auto ss = connected_sum(basic_surface(SurfaceSummand::S), basic_surface(SurfaceSummand::S));
  EXPECT_EQ(homology_of(ss), (std::vector<HomologyGroup>{Z(), zero(), Z()}));
  for (auto tag : kAll) {
    const auto with_sphere = connected_sum(basic_surface(tag), basic_surface(SurfaceSummand::S));
    EXPECT_EQ(homology_of(with_sphere), surface_homology(tag)) << to_char(tag);
  }
}

TEST(ConnectedSum, EulerAdditivityOverCatalogPairs) {
  for (auto a : kAll) {
    for (auto b : kAll) {
      const auto& x = basic_surface(a);
      const auto& y = basic_surface(b);
      const auto sum = connected_sum(x, y);
      EXPECT_TRUE(validate_skeleton(sum.skeleton).empty());
      EXPECT_EQ(chi(sum), chi(x) + chi(y) - 2) << to_char(a) << to_char(b);
      EXPECT_EQ(homology_of(sum), homology_of(connected_sum(y, x))) << to_char(a) << to_char(b);
      EXPECT_EQ(oracle::components(sum.skeleton), 1u);
    }
  }
}

TEST(CompactSurface, Classification) {
  for (std::size_t g = 1; g <= 3; ++g) {
    const auto s = surface(std::vector<SurfaceSummand>(g, SurfaceSummand::T));
    EXPECT_EQ(homology_of(s), (std::vector<HomologyGroup>{Z(), Z(2 * g), Z()}));
    EXPECT_EQ(chi(s), 2 - 2 * static_cast<long>(g));
  }
  const auto nonorientable = std::vector<HomologyGroup>{Z(), Z(2, {2}), zero()};
  EXPECT_EQ(homology_of(surface({SurfaceSummand::T, SurfaceSummand::P})), nonorientable);
  EXPECT_EQ(homology_of(surface({SurfaceSummand::T, SurfaceSummand::K})),
            (std::vector<HomologyGroup>{Z(), Z(3, {2}), zero()}));
  EXPECT_EQ(homology_of(surface({SurfaceSummand::T, SurfaceSummand::T, SurfaceSummand::P})),
            (std::vector<HomologyGroup>{Z(), Z(4, {2}), zero()}));
}

TEST(CompactSurface, SingleSummandIsCatalog) {
  for (auto tag : kAll) EXPECT_EQ(surface({tag}), basic_surface(tag));
  EXPECT_THROW(surface({}), Error);
}

TEST(CompactSurface, SpecParsing) {
  EXPECT_EQ(parse_surface_spec("T,T,P"),
            (std::vector<SurfaceSummand>{SurfaceSummand::T, SurfaceSummand::T, SurfaceSummand::P}));
  EXPECT_EQ(parse_surface_spec(" K "), (std::vector<SurfaceSummand>{SurfaceSummand::K}));
  for (const char* bad : {"", "T,", "X", "T,,T"}) {
    try {
      parse_surface_spec(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::Parse);
    }
  }
}

TEST(CompactSurface, SuffixesKeepIdsApart) {
  const auto s = with_suffix(basic_surface(SurfaceSummand::T), "_9");
  EXPECT_EQ(s.u, "u_9");
  EXPECT_TRUE(s.skeleton.has_vertex("x_9"));
  EXPECT_NO_THROW(check_marking(s));
}

TEST(CompactSurface, TopHomologyDetectsOrientability) {
  std::vector<std::vector<SurfaceSummand>> specs = {{}};
  for (int length = 1; length <= 3; ++length) {
    std::vector<std::vector<SurfaceSummand>> longer;
    for (const auto& s : specs) {
      for (auto tag : kAll) {
        auto t = s;
        t.push_back(tag);
        longer.push_back(t);
      }
    }
    specs = longer;
    for (const auto& spec : specs) {
      const bool orientable = std::none_of(spec.begin(), spec.end(), [](SurfaceSummand s) {
        return s == SurfaceSummand::K || s == SurfaceSummand::P;
      });
      const auto h = homology_of(surface(spec));
      EXPECT_EQ(h[2], orientable ? Z() : zero());
    }
  }
}
