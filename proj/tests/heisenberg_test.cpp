#include <gtest/gtest.h>

#include <random>
#include <set>
#include <unordered_set>

#include "crosswire/heisenberg.hpp"

using namespace crosswire;

namespace {

LaurentPoly P(std::uint32_t p, LaurentPoly::Coeffs c = {}) { return LaurentPoly(p, c); }

HPart part(std::uint32_t p, LaurentPoly::Coeffs x, LaurentPoly::Coeffs y, LaurentPoly::Coeffs z) {
  return {P(p, x), P(p, y), P(p, z)};
}

HPart random_part(std::mt19937_64& rng, std::uint32_t p, int lo = -3, int hi = 3) {
  return {random_laurent(p, lo, hi, rng), random_laurent(p, lo, hi, rng), random_laurent(p, lo, hi, rng)};
}

HeisenbergElement random_element(std::mt19937_64& rng, std::uint32_t p) {
  return {random_part(rng, p), static_cast<std::int64_t>(rng() % 7) - 3};
}

}  // namespace

TEST(Laurent, Basics) {
  const LaurentPoly f = P(3, {{-1, 2}, {0, 4}, {2, 3}});
  EXPECT_EQ(f.coeffs(), (LaurentPoly::Coeffs{{-1, 2}, {0, 1}}));
  EXPECT_EQ(f.min_exponent(), -1);
  EXPECT_EQ(f.max_exponent(), 0);
  EXPECT_EQ(f.shifted(2), P(3, {{1, 2}, {2, 1}}));
  EXPECT_EQ(f + (-f), P(3));
  EXPECT_EQ(f * LaurentPoly::monomial(3, 1), f.shifted(1));
  EXPECT_EQ(f.part(0, 5), P(3, {{0, 1}}));
  EXPECT_THROW(P(2) + P(3), Error);
  EXPECT_THROW(P(1), Error);
}

TEST(Laurent, RingLawsExhaustiveOverF2) {
  const auto polys = all_laurent(2, -2, 2);
  ASSERT_EQ(polys.size(), 32u);
  for (const auto& a : polys)
    for (const auto& b : polys) {
      ASSERT_EQ(a + b, b + a);
      ASSERT_EQ(a * b, b * a);
      for (const auto& c : polys) {
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ((a + b) + c, a + (b + c));
      }
    }
}

TEST(Laurent, RingLawsRandomOverF3) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 500; ++i) {
    const auto a = random_laurent(3, -4, 4, rng), b = random_laurent(3, -4, 4, rng), c = random_laurent(3, -4, 4, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, P(3));
  }
}

TEST(Laurent, Serialization) {
  EXPECT_EQ(to_string(P(3, {{-2, 1}, {5, 2}})), "F3[-2:1,5:2]");
  EXPECT_EQ(to_string(P(2)), "F2[]");
  std::mt19937_64 rng(22);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_laurent(5, -5, 5, rng);
    EXPECT_EQ(parse_laurent(to_string(f)), f);
  }
  for (const char* bad : {"F4[]", "F2[0:0]", "F2[1:1,0:1]", "F3[0:3]", "F2[", "F2[0:1]x"})
    EXPECT_THROW(parse_laurent(bad), Error) << bad;
}

TEST(Heisenberg, MultiplicationExamples) {
  const HPart x = part(2, {{0, 1}}, {}, {}), y = part(2, {}, {{0, 1}}, {});
  EXPECT_EQ(h_mul(x, y), part(2, {{0, 1}}, {{0, 1}}, {{0, 1}}));
  EXPECT_EQ(h_mul(y, x), part(2, {{0, 1}}, {{0, 1}}, {}));
  EXPECT_EQ(commutator(x, y), part(2, {}, {}, {{0, 1}}));
  EXPECT_THROW(h_mul(x, HPart::identity(3)), Error);
}

TEST(Heisenberg, InverseExamples) {
  EXPECT_EQ(h_inv(part(3, {{0, 1}}, {}, {})), part(3, {{0, 2}}, {}, {}));
  EXPECT_EQ(h_inv(part(3, {{0, 1}}, {{0, 1}}, {{0, 1}})), part(3, {{0, 2}}, {{0, 2}}, {}));
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_element(rng, 2 + (i % 2));
    EXPECT_EQ(h_mul(a, h_inv(a)), HeisenbergElement::identity(a.modulus()));
    EXPECT_EQ(h_mul(h_inv(a), a), HeisenbergElement::identity(a.modulus()));
  }
}

TEST(Heisenberg, GroupLaws) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_element(rng, 3), b = random_element(rng, 3), c = random_element(rng, 3);
    ASSERT_EQ(h_mul(h_mul(a, b), c), h_mul(a, h_mul(b, c)));
  }
}

TEST(Heisenberg, Center) {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 20; ++i) {
    const HPart c{P(2), P(2), random_laurent(2, -3, 3, rng)};
    for (int j = 0; j < 100; ++j) {
      const HPart g = random_part(rng, 2);
      ASSERT_EQ(h_mul(c, g), h_mul(g, c));
    }
  }
  const HPart x = part(2, {{0, 1}}, {}, {}), y = part(2, {}, {{0, 1}}, {});
  detail::for_each_hpart(2, -1, 1, [&](const HeisenbergElement& g) {
    if (h_mul(g.h, x) == h_mul(x, g.h) && h_mul(g.h, y) == h_mul(y, g.h)) {
      EXPECT_TRUE(g.h.x.is_zero());
      EXPECT_TRUE(g.h.y.is_zero());
    }
  });
}

TEST(Heisenberg, PhiExamples) {
  const HPart ones = part(2, {{0, 1}}, {{0, 1}}, {{0, 1}});
  const HPart image = part(2, {{1, 1}}, {{1, 1}}, {{2, 1}});
  EXPECT_EQ(phi(ones, 1), image);
  EXPECT_EQ(phi(image, -1), ones);
  std::mt19937_64 rng(26);
  for (int i = 0; i < 100; ++i) {
    const HPart a = random_part(rng, 3), b = random_part(rng, 3);
    const std::int64_t k = static_cast<std::int64_t>(rng() % 7) - 3;
    EXPECT_EQ(phi(h_mul(a, b), k), h_mul(phi(a, k), phi(b, k)));
  }
}

TEST(Heisenberg, TPowersConjugateByPhi) {
  std::mt19937_64 rng(27);
  for (int i = 0; i < 100; ++i) {
    const HeisenbergElement g{random_part(rng, 2), 0};
    const auto t = HeisenbergElement::t(2);
    EXPECT_EQ(h_mul(h_mul(t, g), h_inv(t)), (HeisenbergElement{phi(g.h, 1), 0}));
  }
}

TEST(Heisenberg, PhiPreservesSubgroups) {
  std::mt19937_64 rng(28);
  for (int i = 0; i < 300; ++i) {
    const HPart l = random_part(rng, 2, 0, 4), lp = random_part(rng, 2, -4, 0);
    ASSERT_TRUE(in_L(l));
    ASSERT_TRUE(in_Lp(lp));
    EXPECT_TRUE(in_L(phi(l, 1)));
    EXPECT_TRUE(in_Lp(phi(lp, -1)));
  }
}

TEST(Heisenberg, CanonCosetExamples) {
  EXPECT_EQ(canon_coset(part(2, {{-1, 1}, {0, 1}}, {}, {}), Side::L), part(2, {{-1, 1}}, {}, {}));
  EXPECT_EQ(canon_coset(part(2, {}, {}, {{-2, 1}, {0, 1}, {3, 1}}), Side::L), part(2, {}, {}, {{-2, 1}}));
  EXPECT_EQ(canon_coset(HPart::identity(2), Side::Lp), HPart::identity(2));
}

TEST(Heisenberg, CanonCosetIsWellDefined) {
  std::mt19937_64 rng(29);
  for (std::uint32_t p : {2u, 3u})
    for (int i = 0; i < 500; ++i) {
      const HPart h = random_part(rng, p);
      const HPart l = random_part(rng, p, 0, 3), lp = random_part(rng, p, -3, 0);
      const HPart c = canon_coset(h, Side::L);
      ASSERT_EQ(canon_coset(h_mul(h, l), Side::L), c);
      ASSERT_EQ(canon_coset(c, Side::L), c);
      ASSERT_TRUE(in_L(h_mul(h_inv(c), h)));
      const HPart cp = canon_coset(h, Side::Lp);
      ASSERT_EQ(canon_coset(h_mul(h, lp), Side::Lp), cp);
      ASSERT_EQ(canon_coset(cp, Side::Lp), cp);
      ASSERT_TRUE(in_Lp(h_mul(h_inv(cp), h)));
    }
}

TEST(Heisenberg, CanonCosetSeparatesCosets) {
  // Exhaustively over a small truncation: equal forms iff h1^-1 h2 in L.
  const auto all = detail::all_hparts(2, -1, 1);
  std::mt19937_64 rng(30);
  for (int i = 0; i < 20000; ++i) {
    const HPart& a = all[rng() % all.size()].h;
    const HPart& b = all[rng() % all.size()].h;
    const HPart q = h_mul(h_inv(a), b);
    EXPECT_EQ(canon_coset(a, Side::L) == canon_coset(b, Side::L), in_L(q));
    EXPECT_EQ(canon_coset(a, Side::Lp) == canon_coset(b, Side::Lp), in_Lp(q));
  }
}

TEST(Heisenberg, TransversalCertificate) {
  for (std::uint32_t p : {2u, 3u}) {
    for (Side side : {Side::L, Side::Lp}) {
      const auto tau = transversal(side, p);
      ASSERT_EQ(tau.size(), static_cast<std::size_t>(p * p * p * p));
      EXPECT_NE(std::find(tau.begin(), tau.end(), HPart::identity(p)), tau.end());
      // Cosets of Phi(L) in L: h Phi(L) = Phi(Phi^-1(h) L).
      const std::int64_t k = side == Side::L ? 1 : -1;
      std::unordered_set<HPart> forms;
      for (const auto& s : tau) {
        EXPECT_TRUE(side == Side::L ? in_L(s) : in_Lp(s));
        forms.insert(canon_coset(phi(s, -k), side));
      }
      EXPECT_EQ(forms.size(), tau.size());
    }
  }
  EXPECT_EQ(canon_coset(phi(part(2, {{1, 1}}, {}, {}), -1), Side::L), HPart::identity(2));
  try {
    transversal(Side::L, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_modulus);
  }
}

TEST(Heisenberg, TransversalIsExhaustiveUpToDegree6) {
  std::unordered_set<HPart> forms;
  for (const auto& s : transversal(Side::L, 2)) forms.insert(canon_coset(phi(s, -1), Side::L));
  // All of L with exponents in [0, 6], coordinate by coordinate: every x, y
  // and z range over all 2^7 polynomials, checked on a 2^21 product.
  std::size_t checked = 0;
  detail::for_each_hpart(2, 0, 6, [&](const HeisenbergElement& l) {
    ++checked;
    ASSERT_TRUE(forms.count(canon_coset(phi(l.h, -1), Side::L))) << to_string(l);
  });
  EXPECT_EQ(checked, std::size_t{1} << 21);
}

TEST(Heisenberg, Exhaustion) {
  // Membership of Phi^k(h) in L is coordinatewise: x, y need k >= -min, z
  // needs 2k >= -min.  Check every single coordinate polynomial exhaustively
  // for N <= 4, then random triples through the full predicate.
  for (int N = 1; N <= 4; ++N) {
    const std::int64_t bound = 2 * N;
    for (const auto& f : all_laurent(2, -N, N)) {
      for (const HPart& h : {HPart{f, P(2), P(2)}, HPart{P(2), f, P(2)}, HPart{P(2), P(2), f}}) {
        bool inside = false, inside_p = false;
        for (std::int64_t k = 0; k <= bound; ++k) {
          inside = inside || in_L(phi(h, k));
          inside_p = inside_p || in_Lp(phi(h, -k));
        }
        EXPECT_TRUE(inside && inside_p) << to_string(h);
      }
    }
    std::mt19937_64 rng(31 + N);
    for (int i = 0; i < 2000; ++i) {
      const HPart h = random_part(rng, 2, -N, N);
      EXPECT_TRUE(in_L(phi(h, bound)));
      EXPECT_TRUE(in_Lp(phi(h, -bound)));
    }
  }
}

TEST(Heisenberg, IntersectionIsConstants) {
  for (std::uint32_t p : {2u, 3u}) {
    std::size_t count = 0;
    detail::for_each_hpart(p, -1, 1, [&](const HeisenbergElement& g) {
      if (in_L(g.h) && in_Lp(g.h)) {
        ++count;
        for (const auto* f : {&g.h.x, &g.h.y, &g.h.z}) EXPECT_TRUE(f->is_zero() || f->max_exponent() == 0);
      }
    });
    EXPECT_EQ(count, static_cast<std::size_t>(p * p * p));
  }
}

TEST(Heisenberg, FactorExamples) {
  const HPart h = part(2, {{-1, 1}}, {{1, 1}}, {});
  const auto [l, lp] = factor(h);
  EXPECT_EQ(l, part(2, {}, {{1, 1}}, {}));
  EXPECT_EQ(lp, part(2, {{-1, 1}}, {}, {}));
  EXPECT_EQ(h_mul(l, lp), h);
  EXPECT_EQ(factor(HPart::identity(2)), std::pair(HPart::identity(2), HPart::identity(2)));
}

TEST(Heisenberg, FactorRandom) {
  std::mt19937_64 rng(32);
  for (std::uint32_t p : {2u, 3u, 5u})
    for (int i = 0; i < 1000; ++i) {
      const HPart h = random_part(rng, p, -4, 4);
      const auto [l, lp] = factor(h);
      ASSERT_TRUE(in_L(l));
      ASSERT_TRUE(in_Lp(lp));
      ASSERT_EQ(h_mul(l, lp), h);
    }
}

TEST(Heisenberg, Serialization) {
  const HeisenbergElement g{part(3, {{-1, 2}}, {}, {{0, 1}, {4, 2}}), -2};
  EXPECT_EQ(to_string(g), "H(F3[-1:2];F3[];F3[0:1,4:2])@t^-2");
  EXPECT_EQ(parse_heisenberg(to_string(g)), g);
  std::mt19937_64 rng(33);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_element(rng, 2);
    EXPECT_EQ(parse_heisenberg(to_string(a)), a);
  }
  EXPECT_THROW(parse_heisenberg("H(F2[];F3[];F2[])@t^0"), Error);
  EXPECT_THROW(parse_heisenberg("H(F2[];F2[];F2[])@t^"), Error);
}

TEST(Heisenberg, MakePresentation) {
  const auto P2 = make_presentation(2);
  EXPECT_EQ(P2.transversal_L.size(), 16u);
  EXPECT_EQ(P2.transversal_Lp.size(), 16u);
  EXPECT_EQ(make_presentation(3).transversal_L.size(), 81u);
  EXPECT_THROW(make_presentation(4), Error);
  EXPECT_EQ(P2.enumerate_L(1).size(), 64u);
  EXPECT_EQ(P2.lp_coset_reps(2).size(), 64u);
  EXPECT_EQ(P2.count_H(1), 512u);
  std::size_t seen = 0;
  P2.for_each_H(1, [&](const HeisenbergElement& g) {
    ++seen;
    EXPECT_TRUE(P2.within_truncation(g, 1));
  });
  EXPECT_EQ(seen, 512u);
}
