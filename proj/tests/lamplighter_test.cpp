#include <gtest/gtest.h>

#include <random>
#include <set>

#include "crosswire/lamplighter.hpp"

using namespace crosswire;

namespace {

using LL = LamplighterElement;

LL random_ll(std::mt19937_64& rng, std::uint32_t n, int spread = 5) {
  std::uniform_int_distribution<int> pos(-spread, spread), shift(-spread, spread);
  Digits config;
  for (int i = 0; i < 4; ++i) config[pos(rng)] = static_cast<std::uint32_t>(rng() % n);
  return {n, config, shift(rng)};
}

std::optional<DLVertex> to_dl(const LL& g) { return ll_to_dl(g); }

}  // namespace

TEST(Lamplighter, MultiplicationExamples) {
  const LL d0 = LL::lamp(2, 0, 1), t = LL::t(2);
  EXPECT_EQ(ll_mul(d0, d0), LL::identity(2));
  EXPECT_EQ(ll_mul(ll_mul(t, d0), LL::t(2, -1)), LL::lamp(2, 1, 1));
  const LL step(2, {{0, 1}}, 1);
  EXPECT_EQ(ll_mul(step, step), LL(2, {{0, 1}, {1, 1}}, 2));
}

TEST(Lamplighter, ModulusMismatch) {
  try {
    ll_mul(LL::identity(2), LL::identity(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::modulus_mismatch);
  }
}

TEST(Lamplighter, ValuesAreReducedAndSparse) {
  const LL g(3, {{0, 3}, {1, 4}, {2, 0}}, 0);
  EXPECT_EQ(g.config(), (Digits{{1, 1}}));
  EXPECT_THROW(LL(1, {}, 0), Error);
}

TEST(Lamplighter, InverseExamples) {
  EXPECT_EQ(ll_inv(LL::t(3, 4)), LL::t(3, -4));
  EXPECT_EQ(ll_inv(LL(3, {{0, 1}, {2, 2}}, 0)), LL(3, {{0, 2}, {2, 1}}, 0));
  EXPECT_EQ(ll_inv(LL(2, {{0, 1}}, 1)), LL(2, {{-1, 1}}, -1));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const std::uint32_t n = 2 + i % 4;
    const LL g = random_ll(rng, n);
    EXPECT_EQ(ll_mul(g, ll_inv(g)), LL::identity(n));
    EXPECT_EQ(ll_mul(ll_inv(g), g), LL::identity(n));
  }
}

TEST(Lamplighter, Associativity) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const LL a = random_ll(rng, 3), b = random_ll(rng, 3), c = random_ll(rng, 3);
    EXPECT_EQ(ll_mul(ll_mul(a, b), c), ll_mul(a, ll_mul(b, c)));
  }
}

TEST(Lamplighter, ToDLExamples) {
  EXPECT_EQ(ll_to_dl(LL::identity(2)), dl_base(2, 2));
  EXPECT_EQ(ll_to_dl(LL::t(2)), (DLVertex{TreeVertex(2, 1), TreeVertex(2, -1)}));
  EXPECT_EQ(ll_to_dl(LL::lamp(2, 0, 1)), (DLVertex{TreeVertex(2, 0), TreeVertex(2, 0, {{-1, 1}})}));
}

TEST(Lamplighter, ToDLRoundTrip) {
  std::mt19937_64 rng(13);
  std::set<DLVertex> seen;
  std::set<LL> elements;
  for (int i = 0; i < 500; ++i) {
    const LL g = random_ll(rng, 2);
    EXPECT_EQ(dl_to_ll(ll_to_dl(g)), g);
    if (elements.insert(g).second) {
      EXPECT_TRUE(seen.insert(ll_to_dl(g)).second);
    }
  }
}

TEST(Lamplighter, ActionExamples) {
  std::mt19937_64 rng(14);
  const DLVertex w = ll_to_dl(random_ll(rng, 2));
  EXPECT_EQ(ll_act(LL::identity(2), w), w);
  EXPECT_EQ(ll_act(LL::t(2), dl_base(2, 2)), ll_to_dl(LL::t(2)));
}

TEST(Lamplighter, ActionPreservesAdjacency) {
  std::mt19937_64 rng(15);
  const auto b = ball(2, 2, 3);
  for (int i = 0; i < 50; ++i) {
    const LL g = random_ll(rng, 2);
    for (auto [u, v] : b.graph.edges())
      ASSERT_TRUE(dl_adjacent(ll_act(g, b.graph.vertex(u)), ll_act(g, b.graph.vertex(v))));
  }
}

TEST(Lamplighter, SimplyTransitiveOnBalls) {
  const auto cayley = ll_cayley_ball(2, 4);
  const auto dl = ball(2, 2, 4);
  std::set<DLVertex> orbit;
  for (const auto& g : cayley.vertices()) orbit.insert(ll_act(g, dl_base(2, 2)));
  EXPECT_EQ(orbit.size(), cayley.size());
  EXPECT_EQ(orbit, std::set<DLVertex>(dl.graph.vertices().begin(), dl.graph.vertices().end()));
}

TEST(Lamplighter, Generators) {
  for (std::uint32_t n : {2u, 3u, 5u}) {
    const auto s = ll_generators(n);
    ASSERT_EQ(s.size(), 2 * n);
    std::set<LL> distinct(s.begin(), s.end());
    EXPECT_EQ(distinct.size(), s.size());
    for (const auto& g : s) EXPECT_TRUE(distinct.count(ll_inv(g)));
    for (std::uint32_t a = 1; a < n; ++a)
      EXPECT_EQ(ll_inv(LL(n, {{0, a}}, 1)), LL(n, {{-1, n - a}}, -1));
  }
  const auto b1 = ll_cayley_ball(2, 1);
  EXPECT_EQ(b1.size(), 5u);
  EXPECT_EQ(b1.degree(b1.base()), 4u);
  EXPECT_EQ(ll_cayley_ball(2, 2).size(), 15u);
}

TEST(Lamplighter, CayleyBallIsDLBall) {
  for (std::uint32_t n : {2u, 3u})
    for (int r = 0; r <= (n == 2 ? 6 : 5); ++r) {
      const auto report = check_bijection(to_dl, ll_cayley_ball(n, r), ball(n, n, r).graph);
      EXPECT_TRUE(report.ok) << "n=" << n << " r=" << r << " " << to_string(report.witness) << " " << report.detail;
    }
}

TEST(Lamplighter, Serialization) {
  EXPECT_EQ(to_string(LL(3, {{-1, 2}, {4, 1}}, -2)), "LL3:k=-2{-1=2,4=1}");
  EXPECT_EQ(to_string(LL::identity(2)), "LL2:k=0{}");
  std::mt19937_64 rng(16);
  for (int i = 0; i < 100; ++i) {
    const LL g = random_ll(rng, 2 + i % 3);
    EXPECT_EQ(parse_lamplighter(to_string(g)), g);
  }
  for (const char* bad : {"LL2:k=0{0=0}", "LL2:k=0{0=2}", "LL2:k=0{1=1,0=1}", "LL1:k=0{}", "LL2:k=0{", "LL2:k=+1{}"})
    EXPECT_THROW(parse_lamplighter(bad), Error) << bad;
}

TEST(Lamplighter, SubgroupMembership) {
  EXPECT_TRUE(ll_in_L(LL(2, {{0, 1}, {3, 1}}, 0)));
  EXPECT_FALSE(ll_in_L(LL(2, {{-1, 1}}, 0)));
  EXPECT_FALSE(ll_in_L(LL::t(2)));
  EXPECT_TRUE(ll_in_Lp(LL(2, {{0, 1}, {-3, 1}}, 0)));
  EXPECT_FALSE(ll_in_Lp(LL(2, {{1, 1}}, 0)));
  const LamplighterSubgroups offset{1, -1};
  EXPECT_FALSE(ll_in_L(LL::lamp(2, 0, 1), offset));
  EXPECT_FALSE(ll_in_Lp(LL::lamp(2, 0, 1), offset));
}
