#include <gtest/gtest.h>

#include <random>

#include "endo/params.hpp"

using endo::EpsMap;
using endo::Partition;
using endo::Triple;
using endo::TripleCells;
using endo::UnipQuadParam;

namespace {

UnipQuadParam plain(const Partition& lp, const Partition& lm, int n) {
  UnipQuadParam p{lp, lm, {}, {}, n};
  for (int k : lp.even_distinct()) p.eps_plus[k] = 1;
  for (int k : lm.even_distinct()) p.eps_minus[k] = 1;
  return p;
}

std::size_t jord(const endo::InvolutionSplit& s) {
  return s.part_plus.even_distinct().size() + s.part_minus.even_distinct().size();
}

}  // namespace

TEST(Params, DOfN) {
  EXPECT_EQ(endo::d_of_n(0), (std::vector<std::pair<int, int>>{{0, 0}}));
  EXPECT_EQ(endo::d_of_n(2), (std::vector<std::pair<int, int>>{{0, 2}, {1, 1}, {2, 0}}));
  EXPECT_EQ(endo::d_of_n(5).size(), 6u);
  EXPECT_THROW(endo::d_of_n(-1), endo::invalid_argument);
}

TEST(Params, AssembleTripleExamples) {
  auto t = endo::assemble_triple(plain({2}, {}, 1), plain({1, 1}, {}, 1), {1, 1});
  EXPECT_EQ(t.lambda, Partition({2, 1, 1}));
  EXPECT_EQ(t.h.part_plus, Partition({2}));
  EXPECT_EQ(t.h.part_minus, Partition({1, 1}));

  auto u = endo::assemble_triple(plain({2}, {}, 1), plain({}, {2}, 1), {1, 1});
  EXPECT_EQ(u.s.part_plus, Partition({2}));
  EXPECT_EQ(u.s.part_minus, Partition({2}));

  auto v = endo::assemble_triple(plain({2, 2}, {}, 2), plain({}, {}, 0), {2, 0});
  EXPECT_EQ(v.lambda, Partition({2, 2}));
  EXPECT_TRUE(v.h.trivial());

  EXPECT_THROW(endo::assemble_triple(plain({2}, {}, 1), plain({2}, {}, 1), {2, 0}), endo::invalid_argument);
}

TEST(Params, AssembledTripleRestrictsToFactors) {
  for (int n1 = 0; n1 <= 2; ++n1)
    for (int n2 = 0; n2 <= 2; ++n2)
      for (auto& p1 : endo::enumerate_unip_quad(n1))
        for (auto& p2 : endo::enumerate_unip_quad(n2)) {
          auto t = endo::assemble_triple(p1, p2, {n1, n2});
          EXPECT_NO_THROW(t.validate());
          EXPECT_EQ(endo::union_of(t.cells.pp, t.cells.mp), p1.lambda());
          EXPECT_EQ(endo::union_of(t.cells.pm, t.cells.mm), p2.lambda());
          EXPECT_EQ(t.cells.pp, p1.lam_plus);
          EXPECT_EQ(t.cells.mm, p2.lam_minus);
        }
}

TEST(Params, SwapIsInvolution) {
  auto t = endo::assemble_triple(plain({2}, {1, 1}, 2), plain({4}, {}, 2), {2, 2});
  auto s = endo::involution_swap(t);
  EXPECT_EQ(s.s, t.h);
  EXPECT_EQ(s.h, t.s);
  EXPECT_EQ(endo::involution_swap(s), t);

  auto triv = endo::assemble_triple(plain({2}, {2}, 2), plain({}, {}, 0), {2, 0});
  EXPECT_TRUE(endo::involution_swap(triv).s.trivial());
}

TEST(Params, SwapRejectsIncompatibleSplits) {
  auto t = endo::assemble_triple(plain({2}, {}, 1), plain({2}, {}, 1), {1, 1});
  t.h.part_minus = Partition({1, 1});
  EXPECT_THROW(endo::involution_swap(t), endo::invalid_argument);
}

TEST(Params, EvalCharacterExamples) {
  TripleCells trivial{Partition({2, 2}), {}, {}, {}};
  EXPECT_EQ(endo::eval_character(EpsMap{{2, -1}}, EpsMap{}, trivial), 1);

  TripleCells split{Partition({2}), Partition({2}), {}, {}};
  EXPECT_EQ(endo::eval_character(EpsMap{{2, -1}}, EpsMap{}, split), -1);
  EXPECT_EQ(endo::eval_character(EpsMap{{2, 1}}, EpsMap{}, split), 1);

  TripleCells both{Partition{}, Partition({2, 2}), {}, {}};
  EXPECT_EQ(endo::eval_character(EpsMap{{2, -1}}, EpsMap{}, both), 1);

  TripleCells odd{Partition{}, Partition({1}), {}, {}};
  EXPECT_THROW(endo::eval_character(EpsMap{}, EpsMap{}, odd), endo::invalid_argument);
}

TEST(Params, EvalCharacterOnParameterChecksSplit) {
  UnipQuadParam p = plain({2, 2}, {}, 2);
  p.eps_plus[2] = -1;
  EXPECT_EQ(endo::eval_character(p, TripleCells{Partition({2}), Partition({2}), {}, {}}), -1);
  EXPECT_THROW(endo::eval_character(p, TripleCells{Partition({2}), {}, {}, {}}), endo::invalid_argument);
}

TEST(Params, PiVirtualExamples) {
  auto t = Triple::from_cells({Partition({2}), {}, {}, {}});
  auto pv = endo::pi_virtual(t);
  ASSERT_EQ(pv.size(), 2u);
  for (auto& [l, c] : pv.terms()) EXPECT_EQ(c, 1);

  auto e = Triple::from_cells({Partition({1, 1}), {}, {}, {}});
  auto pe = endo::pi_virtual(e);
  ASSERT_EQ(pe.size(), 1u);
  EXPECT_EQ(pe.terms().begin()->second, 1);

  auto s = Triple::from_cells({Partition({2}), Partition({2}), {}, {}});
  auto ps = endo::pi_virtual(s);
  ASSERT_EQ(ps.size(), 2u);
  EXPECT_EQ(ps.terms().at({Partition({2, 2}), EpsMap{{2, 1}}, {}, {}}), 1);
  EXPECT_EQ(ps.terms().at({Partition({2, 2}), EpsMap{{2, -1}}, {}, {}}), -1);
}

TEST(Params, PiVirtualTermCountAndSwappedCount) {
  // The swapped triple has 2^{|Jord_bp|} terms for the h-split, which differs
  // from the original count in general.
  for (int n = 0; n <= 3; ++n)
    for (auto [n1, n2] : endo::d_of_n(n))
      for (auto& p1 : endo::enumerate_unip_quad(n1))
        for (auto& p2 : endo::enumerate_unip_quad(n2)) {
          auto t = endo::assemble_triple(p1, p2, {n1, n2});
          EXPECT_EQ(endo::pi_virtual(t).size(), 1u << jord(t.s));
          EXPECT_EQ(endo::pi_virtual(endo::involution_swap(t)).size(), 1u << jord(t.h));
        }
  auto t = Triple::from_cells({Partition({2}), {}, Partition({2}), {}});
  EXPECT_EQ(endo::pi_virtual(t).size(), 4u);
  EXPECT_EQ(endo::pi_virtual(endo::involution_swap(t)).size(), 2u);
}

TEST(Params, VirtualRepArithmetic) {
  endo::VirtualRep a;
  endo::RepLabel l{Partition({2}), EpsMap{{2, 1}}, {}, {}};
  a.add(l, 3);
  EXPECT_EQ((a + (-a)).size(), 0u);
  a.add(l, -3);
  EXPECT_EQ(a.size(), 0u);
}

TEST(Params, EvalCharacterIsMultiplicativeInH) {
  // Random commuting h, h' on lambda+ = [4,2,2,1,1]: h h' acts by the product of signs per copy.
  std::mt19937 rng(3);
  Partition lp({4, 2, 2, 1, 1});
  std::vector<std::vector<int>> units = {{4}, {2}, {2}, {1, 1}};
  auto cells = [&](unsigned mask) {
    std::vector<int> plus, minus;
    for (std::size_t i = 0; i < units.size(); ++i)
      for (int k : units[i]) ((mask >> i) & 1 ? minus : plus).push_back(k);
    return TripleCells{Partition(plus), Partition(minus), {}, {}};
  };
  for (int it = 0; it < 200; ++it) {
    unsigned a = rng() % 16, b = rng() % 16;
    EpsMap e{{4, rng() % 2 ? 1 : -1}, {2, rng() % 2 ? 1 : -1}};
    EXPECT_EQ(endo::eval_character(e, {}, cells(a ^ b)),
              endo::eval_character(e, {}, cells(a)) * endo::eval_character(e, {}, cells(b)));
  }
}

TEST(Params, EnumerateUnipQuad) {
  auto z = endo::enumerate_unip_quad(0);
  ASSERT_EQ(z.size(), 1u);
  EXPECT_TRUE(z[0].lam_plus.empty() && z[0].lam_minus.empty());
  // n = 1: ([2],eps=+-1 | -), ([1,1] | -), and the mirrored ones.
  EXPECT_EQ(endo::enumerate_unip_quad(1).size(), 6u);
  for (auto& p : endo::enumerate_unip_quad(3)) EXPECT_NO_THROW(p.validate());
}

TEST(Params, UnipQuadValidation) {
  UnipQuadParam p = plain({2}, {}, 1);
  p.eps_plus.clear();
  EXPECT_THROW(p.validate(), endo::invalid_argument);
  EXPECT_THROW(plain({3}, {}, 1).validate(), endo::invalid_argument);
  EXPECT_THROW(plain({2}, {}, 2).validate(), endo::invalid_argument);
}

TEST(Params, LeviReduction) {
  UnipQuadParam core = plain({2}, {}, 1);
  auto r0 = endo::levi_reduction({core, {}, 1});
  EXPECT_TRUE(r0.gl_factors.empty());
  EXPECT_EQ(r0.core, core);

  auto r1 = endo::levi_reduction({core, {{"b", Partition({2, 1})}}, 4});
  ASSERT_EQ(r1.gl_factors.size(), 1u);
  EXPECT_EQ(r1.gl_factors[0].second, 3);
  EXPECT_FALSE(r1.degenerate);

  auto r2 = endo::levi_reduction({plain({}, {}, 0), {{"b", Partition({3})}}, 3});
  EXPECT_TRUE(r2.degenerate);

  EXPECT_THROW(endo::levi_reduction({core, {{"b", Partition({2})}}, 2}), endo::invalid_argument);
}
