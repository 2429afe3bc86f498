#include <gtest/gtest.h>

#include <random>

#include "kgraph/constructions.hpp"
#include "kgraph/homology.hpp"
#include "kgraph/simplex.hpp"
#include "kgraph/surfaces.hpp"
#include "oracles.hpp"

using namespace kgraph;

namespace {

HomologyGroup Z(std::size_t b = 1, std::vector<mpz_class> t = {}) { return {b, std::move(t)}; }
HomologyGroup zero() { return {}; }

constexpr unsigned kTwo = 2;
constexpr unsigned kLarge = 1000003;

void expect_oracle_agrees(const ChainComplex& c) {
  const auto groups = homology(c);
  const auto two = oracle::rank_homology(c, kTwo);
  const auto large = oracle::rank_homology(c, kLarge);
  ASSERT_EQ(groups.size(), two.betti.size());
  for (std::size_t n = 0; n < groups.size(); ++n) {
    EXPECT_EQ(groups[n].betti, two.betti[n]) << "H_" << n;
    std::size_t even = 0;
    for (const auto& t : groups[n].torsion) even += t % 2 == 0;
    EXPECT_EQ(even, two.p_torsion[n]) << "H_" << n;
    EXPECT_EQ(large.p_torsion[n], 0u);
  }
}

}  // namespace

TEST(HomologyGroup, Text) {
  EXPECT_EQ(zero().to_string(), "0");
  EXPECT_EQ(Z().to_string(), "Z");
  EXPECT_EQ(Z(2, {2}).to_string(), "Z^2 + Z/2");
  EXPECT_EQ(Z(0, {2, 4}).to_string(), "Z/2 + Z/4");
}

TEST(ChainComplex, SinglePoint) {
  const auto c = chain_complex(discrete_graph(2, {"v"}));
  EXPECT_EQ(c.basis[0].size(), 1u);
  EXPECT_EQ(c.boundary[0].rows(), 0u);
  EXPECT_EQ(homology(c), (std::vector<HomologyGroup>{Z(), zero(), zero()}));
}

TEST(ChainComplex, IntervalBoundary) {
  const auto s1 = build_simplex(1);
  const auto c = chain_complex(s1);
  ASSERT_EQ(c.boundary[1].rows(), 3u);
  ASSERT_EQ(c.boundary[1].cols(), 2u);
  for (std::size_t j = 0; j < 2; ++j) {
    const auto m = s1.index(c.basis[1][j].id);
    std::size_t rs = 0;
    std::size_t ss = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      if (c.basis[0][i].id == s1.id(s1.range(m))) rs = i;
      if (c.basis[0][i].id == s1.id(s1.source(m))) ss = i;
    }
    // first direction carries sign -1: range minus source
    EXPECT_EQ(c.boundary[1].at(ss, j), -1);
    EXPECT_EQ(c.boundary[1].at(rs, j), 1);
    EXPECT_EQ(c.boundary[1].column(j).size(), 2u);
  }
}

TEST(ChainComplex, TorusBoundaryShape) {
  const auto c = chain_complex(basic_surface(SurfaceSummand::T).skeleton);
  EXPECT_EQ(c.boundary[2].rows(), 8u);
  EXPECT_EQ(c.boundary[2].cols(), 4u);
  EXPECT_TRUE(boundary_squares_to_zero(c));
}

TEST(ChainComplex, RejectsInvalidModels) {
  const auto s = basic_surface(SurfaceSummand::T).skeleton;
  auto squares = s.squares();
  squares.pop_back();
  const Skeleton2Graph broken(s.vertices(), s.blue(), s.red(), squares);
  try {
    chain_complex(broken);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidModel);
  }
}

TEST(Homology, Examples) {
  EXPECT_EQ(homology(chain_complex(build_sphere(2))), (std::vector<HomologyGroup>{Z(), zero(), Z()}));
  EXPECT_EQ(homology(chain_complex(basic_surface(SurfaceSummand::K).skeleton)),
            (std::vector<HomologyGroup>{Z(), Z(1, {2}), zero()}));
  EXPECT_EQ(homology(chain_complex(build_simplex(3))),
            (std::vector<HomologyGroup>{Z(), zero(), zero(), zero()}));
}

TEST(Homology, WedgesAndSpheres) {
  EXPECT_EQ(homology(chain_complex(build_sphere(1))), (std::vector<HomologyGroup>{Z(), Z()}));
  EXPECT_EQ(homology(chain_complex(build_wedge(1, 2))), (std::vector<HomologyGroup>{Z(), Z(2)}));
  EXPECT_EQ(homology(chain_complex(build_wedge(2, 3))),
            (std::vector<HomologyGroup>{Z(), zero(), Z(3)}));
  EXPECT_EQ(homology(chain_complex(build_sphere(3))),
            (std::vector<HomologyGroup>{Z(), zero(), zero(), Z()}));
}

TEST(Homology, EulerCharacteristic) {
  for (std::size_t k = 0; k <= 4; ++k) {
    const auto c = chain_complex(build_simplex(k));
    EXPECT_EQ(euler_characteristic(c), 1);
    EXPECT_EQ(euler_characteristic(homology(c)), 1);
  }
  for (std::size_t k = 0; k <= 3; ++k) {
    const auto c = chain_complex(build_sphere(k));
    const long expected = 1 + (k % 2 ? -1 : 1);
    EXPECT_EQ(euler_characteristic(c), expected);
    EXPECT_EQ(euler_characteristic(homology(c)), expected);
  }
}

TEST(Homology, AgreesWithRankOracle) {
  expect_oracle_agrees(chain_complex(build_sphere(3)));
  expect_oracle_agrees(chain_complex(build_wedge(2, 4)));
  for (auto tag : {SurfaceSummand::S, SurfaceSummand::T, SurfaceSummand::K, SurfaceSummand::P}) {
    expect_oracle_agrees(chain_complex(basic_surface(tag).skeleton));
  }
  const std::vector<SurfaceSummand> tkp{SurfaceSummand::T, SurfaceSummand::K, SurfaceSummand::P};
  expect_oracle_agrees(chain_complex(compact_surface(tkp).skeleton));
}

TEST(Homology, ZerothBettiCountsComponents) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = oracle::random_kgraph(rng, 50);
    EXPECT_EQ(homology(chain_complex(g))[0].betti, oracle::components(g)) << trial;
  }
  for (auto tag : {SurfaceSummand::S, SurfaceSummand::T, SurfaceSummand::K, SurfaceSummand::P}) {
    const auto s = basic_surface(tag).skeleton;
    EXPECT_EQ(homology(chain_complex(s))[0].betti, oracle::components(s));
  }
}

TEST(Homology, PermutationInvariance) {
  std::mt19937 rng(29);
  const auto c = chain_complex(build_sphere(2));
  const auto expected = homology(c);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<std::size_t>> perms;
    for (const auto& b : c.basis) {
      std::vector<std::size_t> p(b.size());
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      perms.push_back(std::move(p));
    }
    const auto permuted = permute_basis(c, perms);
    EXPECT_TRUE(boundary_squares_to_zero(permuted));
    EXPECT_EQ(homology(permuted), expected);
  }
}
