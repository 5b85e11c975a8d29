#include <gtest/gtest.h>

#include <map>
#include <set>

#include "endo/families.hpp"

using endo::EVector;
using endo::ExactValue;
using endo::GammaVector;
using endo::LPair;
using endo::ResidueParam;
using endo::SplitShape;
using endo::SquareClass;

namespace {

int leg(long x, long q) {
  x = ((x % q) + q) % q;
  for (long y = 1; y < q; ++y)
    if (y * y % q == x) return 1;
  return -1;
}

// Gamma by filtering the full product (F_q^x)^{R-r} x {+-1}^r.
long brute_gamma_count(const SplitShape& sh, long q, int eta_unit, int c1, int c2) {
  int L = sh.low_len();
  long total = 1;
  for (int i = 0; i < L; ++i) total *= q - 1;
  long count = 0;
  for (long code = 0; code < total; ++code) {
    std::vector<long> low(L);
    long c = code;
    for (int i = 0; i < L; ++i) {
      low[i] = c % (q - 1) + 1;
      c /= q - 1;
    }
    bool ok = true;
    for (int j = 2; j <= L; j += 2)
      if (low[j - 2] == low[j - 1]) ok = false;
    if (!ok) continue;
    int s = eta_unit;
    for (long x : low) s *= leg(x, q);
    for (int mask = 0; mask < (1 << sh.r); ++mask) {
      int t = s;
      for (int i = 0; i < sh.r; ++i) t *= (mask >> i) & 1 ? -1 : 1;
      if (t == c1 * c2) ++count;
    }
  }
  return count;
}

}  // namespace

TEST(Families, ShapeBasics) {
  SplitShape sh(5, 1);
  EXPECT_EQ(sh.R, 5);
  EXPECT_EQ(sh.r, 1);
  EXPECT_EQ(sh.t1, 3);
  EXPECT_EQ(sh.t2, 2);
  EXPECT_EQ(sh.jhat(), (std::vector<int>{2, 4}));
  EXPECT_EQ(sh.B(), 0);
  EXPECT_EQ(SplitShape(1, 3).B(), 1);
  EXPECT_THROW(SplitShape(1, 2), endo::invalid_argument);
}

TEST(Families, GammaTrivialShape) {
  ResidueParam f(5);
  SplitShape sh(0, 0);
  EXPECT_EQ(endo::enumerate_gamma(sh, f, SquareClass::one(), 1, 1).size(), 1u);
  EXPECT_TRUE(endo::enumerate_gamma(sh, f, SquareClass::one(), 1, -1).empty());
  EXPECT_TRUE(endo::enumerate_gamma(sh, f, SquareClass::xi(), 1, 1).empty());
  EXPECT_THROW(endo::enumerate_gamma(sh, f, SquareClass::pi(), 1, 1), endo::invalid_argument);
}

TEST(Families, GammaMatchesBruteForce) {
  for (long q : {5, 7}) {
    ResidueParam f(q);
    for (auto [rp, rpp] : std::vector<std::pair<int, int>>{{2, 0}, {3, 1}, {1, 3}, {4, 0}, {4, 2}, {2, 2}})
      for (int eu : {1, -1})
        for (int c1 : {1, -1})
          for (int c2 : {1, -1}) {
            SplitShape sh(rp, rpp);
            auto gs = endo::enumerate_gamma(sh, f, SquareClass(rpp, eu), c1, c2);
            EXPECT_EQ(static_cast<long>(gs.size()), brute_gamma_count(sh, q, eu, c1, c2));
            std::set<GammaVector> distinct(gs.begin(), gs.end());
            EXPECT_EQ(distinct.size(), gs.size());
          }
  }
}

TEST(Families, SigmaGammaExamples) {
  ResidueParam f(5);
  SplitShape sh(2, 0);
  EXPECT_EQ(endo::sigma_gamma({{1, 4}, {}}, sh, f), ExactValue::integer(-4));
  // (5-2-1) * sgn(1*2*(1-2)) = 2 * legendre(-2) = 2 * legendre(3) = -2
  EXPECT_EQ(endo::sigma_gamma({{1, 2}, {}}, sh, f), ExactValue::integer(-2));
  EXPECT_EQ(endo::sigma_gamma({{}, {1, -1}}, SplitShape(2, 2), f), ExactValue::integer(1));
}

TEST(Families, SigmaGammaMatchesDirectFormula) {
  for (long q : {5, 7, 13}) {
    ResidueParam f(q);
    SplitShape sh(3, 1);
    int m = leg(-1, q);
    for (auto& g : endo::enumerate_gamma(sh, f, SquareClass(1, 1), 1, 1)) {
      long a = g.low[0], b = g.low[1];
      long v = (q - 2 + leg(a * b, q)) * leg(a * b * (a - b), q) * (m * g.high[0]);
      EXPECT_EQ(endo::sigma_gamma(g, sh, f), ExactValue::integer(v));
    }
  }
}

TEST(Families, KappaU) {
  EXPECT_EQ(endo::kappa_U({{0, 0}, {false, true}}), 1);
  EXPECT_EQ(endo::kappa_U({{0, 1}, {false, true}}), -1);
  EXPECT_EQ(endo::kappa_U({{1, 1}, {false, false}}), 1);
}

TEST(Families, Kappa0) {
  SplitShape none(1, 1);
  EXPECT_EQ(endo::kappa_0({1}, none), 1);
  SplitShape sh(3, 1);
  EXPECT_EQ(endo::kappa_0({-1, -1, 1}, sh), -1);
  EXPECT_EQ(endo::kappa_0({1, 1, 1}, sh), 1);
  SplitShape sh4(4, 0);
  EXPECT_THROW(endo::kappa_0({1, -1, 1, 1}, sh4), endo::invalid_argument);
  // The last pair of an r = 0 shape is unconstrained in E0.
  EXPECT_TRUE(endo::in_E0({1, 1, 1, -1}, sh4));
}

TEST(Families, KappaL2) {
  EXPECT_EQ(endo::kappa_L2({1}, LPair{}), 1);
  EXPECT_EQ(endo::kappa_L2({-1, 1, 1}, LPair{{2}, {1}}), -1);
  EXPECT_EQ(endo::kappa_L2({1, 1, 1}, LPair{{2}, {1}}), 1);
}

TEST(Families, EnumerateL) {
  EXPECT_EQ(endo::enumerate_L(SplitShape(1, 1)).size(), 1u);
  EXPECT_EQ(endo::enumerate_L(SplitShape(3, 1)).size(), 2u);
  auto forced = endo::enumerate_L(SplitShape(2, 0));
  ASSERT_EQ(forced.size(), 1u);
  EXPECT_EQ(forced[0].l2, std::vector<int>{1});
  for (int t2 = 0; t2 <= 4; ++t2) {
    EXPECT_EQ(endo::enumerate_L(SplitShape(2 * t2 + 1, 1)).size(), 1u << t2);
    EXPECT_EQ(endo::enumerate_L(SplitShape(2 * t2, 0)).size(), t2 == 0 ? 1u : 1u << (t2 - 1));
  }
  for (auto& L : endo::enumerate_L(SplitShape(6, 2))) {
    auto a = L.L1(), b = L.L2();
    EXPECT_EQ(a.size() + b.size(), 4u);
    for (int x : a) EXPECT_FALSE(b.count(x));
  }
}

TEST(Families, Lemma25Examples) {
  SplitShape sh(3, 1);
  EXPECT_EQ(endo::lemma_2_5_sum({1, 1, 1}, sh), ExactValue::integer(2));
  EXPECT_EQ(endo::lemma_2_5_sum({1, -1, 1}, sh), ExactValue::zero());
  EXPECT_EQ(endo::lemma_2_5_sum({-1}, SplitShape(1, 1)), ExactValue::integer(1));
}

TEST(Families, Lemma25Exhaustive) {
  for (int low = 0; low <= 6; low += 2)
    for (int r : {0, 1, 3}) {
      SplitShape sh(low + r, r);
      long nL = static_cast<long>(endo::enumerate_L(sh).size());
      for (auto& e : endo::all_e(sh.R)) {
        // Direct double sum over pairs, independent of lemma_2_5_sum.
        long direct = 0;
        for (auto& L : endo::enumerate_L(sh)) {
          int k = 1;
          for (int l : L.l2) k *= e[l - 1];
          direct += k;
        }
        long expect = endo::in_E0(e, sh) ? nL * endo::kappa_0(e, sh) : 0;
        EXPECT_EQ(direct, expect);
        EXPECT_EQ(endo::lemma_2_5_sum(e, sh), ExactValue::integer(expect));
      }
    }
}

TEST(Families, GammaLSplitExamples) {
  ResidueParam f(5);
  SplitShape triv(2, 2);
  auto [a, b] = endo::gamma_L_split({{}, {1, -1}}, LPair{}, triv, f);
  EXPECT_EQ(a, (endo::Residues{1, 2}));
  EXPECT_TRUE(b.empty());

  SplitShape sh(2, 0);
  auto [c, d] = endo::gamma_L_split({{3, 4}, {}}, LPair{{2}, {1}}, sh, f);
  EXPECT_EQ(c, endo::Residues{4});
  EXPECT_EQ(d, endo::Residues{3});
}

TEST(Families, SplitThenReassembleIsIdentity) {
  for (long q : {5, 7}) {
    ResidueParam f(q);
    for (auto [rp, rpp] : std::vector<std::pair<int, int>>{{2, 0}, {3, 1}, {4, 0}, {5, 1}, {1, 3}})
      for (int eu : {1, -1}) {
        SplitShape sh(rp, rpp);
        for (auto& g : endo::enumerate_gamma(sh, f, SquareClass(rpp, eu), 1, -1))
          for (auto& L : endo::enumerate_L(sh)) {
            auto [g1, g2] = endo::gamma_L_split(g, L, sh, f);
            EXPECT_EQ(endo::pi_L(g1, g2, L, sh, f), g);
          }
      }
  }
}

TEST(Families, EtaOfL2) {
  ResidueParam f(5);
  SplitShape sh(2, 0);
  LPair L{{2}, {1}};
  auto e2 = endo::eta_of_L2({{2, 1}, {}}, L, sh, 1, f);
  EXPECT_EQ(e2, SquareClass(1, -1));
  EXPECT_EQ(endo::eta_of_L2({{}, {1}}, LPair{}, SplitShape(1, 1), -1, f), SquareClass(0, -1));
  SquareClass eta = SquareClass::xi();
  EXPECT_EQ(endo::sq_mul(endo::eta_of_L1({{2, 1}, {}}, L, sh, 1, eta, f), e2), eta);
}

TEST(Families, BoldGammaCounts) {
  EXPECT_EQ(endo::bold_gamma_count_enumerated(0, ResidueParam(5)), 1);
  EXPECT_EQ(endo::bold_gamma_count_enumerated(1, ResidueParam(5)), 4);
  EXPECT_EQ(endo::bold_gamma_count_enumerated(1, ResidueParam(7)), 36);
  EXPECT_EQ(endo::bold_gamma_count_enumerated(2, ResidueParam(7)), 36 * 36);
  EXPECT_EQ(endo::bold_gamma_count(3, ResidueParam(5)), 64);
  EXPECT_EQ(endo::enumerate_bold_gamma(1, ResidueParam(5)).size(), 4u);
  EXPECT_THROW(endo::enumerate_bold_gamma(3, ResidueParam(13)), endo::resource_limit);
}

TEST(Families, TransversalsAreDisjointSquareNonSquarePairs) {
  for (long q : {5, 7, 13}) {
    ResidueParam f(q);
    for (auto& [a, b] : endo::transversal_pairs(f)) {
      EXPECT_NE(leg(a[0], q), leg(a[1], q));
      EXPECT_NE(leg(b[0], q), leg(b[1], q));
      std::set<long> s{a[0], a[1], b[0], b[1]};
      EXPECT_EQ(s.size(), 4u);
    }
  }
}

TEST(Families, FiberExamples) {
  ResidueParam f(5);
  SplitShape sh(2, 0);
  LPair L = endo::enumerate_L(sh)[0];
  // 1 and 4 are both squares mod 5; 1 and 2 are not.
  auto same = endo::fiber_count_check({{1, 4}, {}}, sh, f, L);
  EXPECT_EQ(same.observed, 2);
  EXPECT_EQ(same.predicted, ExactValue::integer(2));
  auto diff = endo::fiber_count_check({{1, 2}, {}}, sh, f, L);
  EXPECT_EQ(diff.observed, 1);
  EXPECT_EQ(diff.predicted, ExactValue::integer(1));
  auto triv = endo::fiber_count_check({{}, {}}, SplitShape(0, 0), f, LPair{});
  EXPECT_EQ(triv.observed, 1);
  EXPECT_EQ(triv.predicted, ExactValue::integer(1));
  auto outside = endo::fiber_count_check({{3, 3}, {}}, sh, f, L);
  EXPECT_EQ(outside.observed, 0);
  EXPECT_FALSE(outside.in_image);
}

TEST(Families, FiberCountsEqualSigmaStar) {
  for (long q : {5, 7}) {
    ResidueParam f(q);
    for (auto [rp, rpp] : std::vector<std::pair<int, int>>{{2, 0}, {3, 1}, {4, 0}, {5, 1}}) {
      SplitShape sh(rp, rpp);
      for (auto& L : endo::enumerate_L(sh))
        for (auto& g : endo::enumerate_gamma(sh, f, SquareClass(rpp, 1), 1, 1)) {
          auto fc = endo::fiber_count_check(g, sh, f, L);
          EXPECT_EQ(ExactValue::integer(fc.observed), fc.predicted);
        }
    }
  }
}

TEST(Families, GammaStarSignCondition) {
  ResidueParam f(7);
  for (auto& fam : endo::enumerate_bold_gamma(1, f))
    for (int cd : {1, -1}) {
      auto g1 = endo::gamma_star(fam, 1, 2, SquareClass(0, 1), cd, f);
      EXPECT_EQ(g1.size(), 2u);
      for (auto& v : g1) EXPECT_EQ(leg(v[0], 7) * leg(v[1], 7), cd);
    }
}
