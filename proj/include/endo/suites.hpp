#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "endo/constants.hpp"
#include "endo/descent.hpp"
#include "endo/families.hpp"
#include "endo/params.hpp"
#include "endo/report.hpp"

namespace endo {

inline VerificationReport verify_annexe(int rmax) {
  require(rmax >= 0, "verify_annexe: rmax must be non-negative");
  Stopwatch sw;
  VerificationReport r{"annexe"};
  r.parameters = {{"rmax", rmax}};
  for (int rp = 0; rp <= rmax; ++rp)
    for (int rpp = -rmax; rpp <= rmax; ++rpp) {
      auto res = annexe_identities(rp, rpp);
      nlohmann::json lhs = nlohmann::json::object(), rhs = nlohmann::json::object();
      for (auto& it : res.items)
        if (!it.pass) {
          lhs[it.name] = it.lhs;
          rhs[it.name] = it.rhs;
        }
      r.check(res.pass(), {{"rp", rp}, {"rpp", rpp}}, lhs, rhs);
    }
  r.elapsed_ms = sw.ms();
  return r;
}

inline VerificationReport verify_split(int rmax, int nmax = 10) {
  require(rmax >= 0 && nmax >= 0, "verify_split: bounds must be non-negative");
  Stopwatch sw;
  VerificationReport r{"split"};
  r.parameters = {{"rmax", rmax}, {"nmax", nmax}};
  for (int rp = 0; rp <= rmax; ++rp)
    for (int rpp = -rmax; rpp <= rmax; ++rpp)
      for (int a = 0; a <= nmax; ++a)
        for (int b = 0; b <= nmax; ++b) {
          QuadrupleGamma g{rp, rpp, a, b};
          auto s = split_quadruple(g);
          auto t = split_quadruple({rp, -rpp, b, a});
          bool sum_ok = s.n1 + s.n2 == g.n();
          bool swap_ok = t.g1 == s.g2 && t.g2 == s.g1 && t.n1 == s.n2 && t.n2 == s.n1;
          r.check(sum_ok && swap_ok, g, {{"n1+n2", s.n1 + s.n2}, {"swap", swap_ok}}, {{"n", g.n()}, {"swap", true}});
        }
  r.elapsed_ms = sw.ms();
  return r;
}

inline VerificationReport verify_lemma25(int max_rr) {
  require(max_rr >= 0, "verify_lemma25: max_rr must be non-negative");
  Stopwatch sw;
  VerificationReport r{"lemma25"};
  r.parameters = {{"max_rr", max_rr}, {"r", {0, 1, 2}}};
  for (int low = 0; low <= max_rr; low += 2)
    for (int rr : {0, 1, 2}) {
      SplitShape sh(low + rr, rr);
      long nL = static_cast<long>(enumerate_L(sh).size());
      for (auto& e : all_e(sh.R)) {
        ExactValue sum = lemma_2_5_sum(e, sh);
        ExactValue expect = in_E0(e, sh) ? ExactValue::integer(nL * kappa_0(e, sh)) : ExactValue::zero();
        r.check(sum == expect, {{"R", sh.R}, {"r", sh.r}, {"e", e}}, sum.str(), expect.str());
      }
    }
  r.elapsed_ms = sw.ms();
  return r;
}

/// |bold Gamma| against its closed form, and fibre sizes of pi_{L1,L2}.
inline VerificationReport verify_counting(const std::vector<long>& qs, int t2max, int q13_fiber_t2max = 1) {
  require(t2max >= 0, "verify_counting: t2max must be non-negative");
  Stopwatch sw;
  VerificationReport r{"counting"};
  r.parameters = {{"q", qs}, {"t2max", t2max}, {"fiber_t2max_q_ge_13", q13_fiber_t2max}};
  nlohmann::json counts = nlohmann::json::array();
  for (long q : qs) {
    ResidueParam f(q);
    for (int t2 = 0; t2 <= t2max; ++t2) {
      BigInt got = bold_gamma_count_enumerated(t2, f);
      ExactValue formula = ExactValue::integer(2).pow(-4 * t2) * ExactValue::integer(q - 1).pow(2 * t2) *
                           ExactValue::integer(q - 3).pow(2 * t2);
      ExactValue gv = ExactValue::from_rational(Rational(got));
      counts.push_back({{"q", q}, {"t2", t2}, {"count", got.str()}});
      r.check(gv == formula, {{"q", q}, {"t2", t2}, {"what", "bold_gamma_count"}}, gv.str(), formula.str());
    }
    int fiber_max = q >= 13 ? std::min(t2max, q13_fiber_t2max) : t2max;
    for (int t2 = 0; t2 <= fiber_max; ++t2)
      for (int rr : {0, 1, 2}) {
        SplitShape sh(rr + 2 * t2, rr);
        for (int eu : {1, -1})
          for (int c1 : {1, -1})
            for (int c2 : {1, -1}) {
              SquareClass eta(rr, eu);
              auto gammas = enumerate_gamma(sh, f, eta, c1, c2);
              for (auto& L : enumerate_L(sh)) {
                std::map<GammaVector, long> fiber;
                bool image_ok = true;
                for_each_bold_gamma(t2, f, [&](const TransversalFamily& fam) {
                  for (int u1 : {1, -1}) {
                    SquareClass e1(sh.t1, u1);
                    SquareClass e2 = sq_mul(eta, e1);
                    if (e2.val_parity != mod2(sh.t2)) continue;
                    for (auto& g1 : gamma_star(fam, 1, sh.t1, e1, c1, f))
                      for (auto& g2 : gamma_star(fam, 2, sh.t2, e2, c2, f)) {
                        GammaVector g = pi_L(g1, g2, L, sh, f);
                        if (!gamma_admissible(g, sh, f, eta, c1, c2) || eta_of_L2(g, L, sh, c2, f) != e2 ||
                            eta_of_L1(g, L, sh, c2, eta, f) != e1)
                          image_ok = false;
                        ++fiber[g];
                      }
                  }
                });
                nlohmann::json where = {{"q", q}, {"rp", sh.rp}, {"rpp", sh.rpp}, {"eta", eta},
                                        {"sgn_cd1", c1}, {"sgn_cd2", c2}, {"L2", L.l2}};
                r.check(image_ok, where, "image outside Gamma[L1,L2]", "image inside Gamma[L1,L2]");
                r.check(fiber.size() == gammas.size(), where, static_cast<long>(fiber.size()),
                        static_cast<long>(gammas.size()));
                for (auto& g : gammas) {
                  auto it = fiber.find(g);
                  long obs = it == fiber.end() ? 0 : it->second;
                  ExactValue pred = sigma_star(g, sh, f);
                  nlohmann::json in = where;
                  in["gamma_low"] = g.low;
                  in["gamma_high"] = g.high;
                  r.check(ExactValue::integer(obs) == pred, in, obs, pred.str());
                }
              }
            }
      }
  }
  r.notes["bold_gamma_counts"] = counts;
  r.elapsed_ms = sw.ms();
  return r;
}

/// The even-case constant identity under the printed power of 2; the
/// alternate reading is swept alongside and summarized in notes.
inline VerificationReport verify_const28(const std::vector<long>& qs, int rmax) {
  require(rmax >= 0, "verify_const28: rmax must be non-negative");
  Stopwatch sw;
  VerificationReport r{"const28"};
  r.parameters = {{"q", qs}, {"rmax", rmax}};
  long alt_points = 0, alt_failures = 0, half_power_nonzero = 0;
  for (long q : qs) {
    ResidueParam f(q);
    for (int rp = 0; rp <= rmax; ++rp)
      for (int rpp = 0; rpp <= rmax; ++rpp) {
        if (mod2(rp) != mod2(rpp)) continue;
        SplitShape sh(rp, rpp);
        for (int c1 : {1, -1})
          for (int c2 : {1, -1})
            for (int u1 : {1, -1})
              for (int u2 : {1, -1})
                for (int beta : {0, 1}) {
                  if (beta == 0 && sh.t1 != 0 && sh.t2 != 0) continue;
                  Identity28Input in{rp, rpp, c1, c2, SquareClass(sh.t1, u1), SquareClass(sh.t2, u2), beta};
                  auto p = identity_2_8_point(in, f);
                  if (p.lhs.q_half_power() != 0) ++half_power_nonzero;
                  nlohmann::json where = in;
                  where["q"] = q;
                  r.check(p.pass, where, p.lhs.str(), p.rhs.str());
                  auto alt = identity_2_8_point(in, f, TwoPowerReading::alternate);
                  ++alt_points;
                  if (!alt.pass) ++alt_failures;
                }
      }
  }
  r.notes["alternate_reading"] = {{"points_checked", alt_points}, {"failure_count", alt_failures}};
  r.notes["q_half_power_nonzero"] = half_power_nonzero;
  r.elapsed_ms = sw.ms();
  return r;
}

inline VerificationReport verify_c1(int rmax) {
  require(rmax >= 0, "verify_c1: rmax must be non-negative");
  Stopwatch sw;
  VerificationReport r{"c1"};
  r.parameters = {{"rmax", rmax}, {"d", {0, 3}}, {"N", {0, 1}}};
  for (int rp = 0; rp <= rmax; ++rp)
    for (int rpp = -rmax; rpp <= rmax; ++rpp)
      for (int c1 : {1, -1})
        for (int c2 : {1, -1})
          for (int s : {1, -1})
            for (int d = 0; d <= 3; ++d)
              for (int d2 = 0; d2 <= d; ++d2)
                for (int a = 0; a <= 1; ++a)
                  for (int b = 0; b <= 1; ++b) {
                    Chain349Input in{{rp, rpp, a, b}, c1, c2, s, d, d2};
                    auto p = chain_3_4_9_point(in);
                    r.check(p.pass(),
                            {{"g", in.g}, {"sgn_cd1", c1}, {"sgn_cd2", c2}, {"s", s}, {"d", d}, {"d2", d2}},
                            {{"chain", p.chain}, {"U", p.U}, {"C", p.C}},
                            {{"chain", p.target}, {"U", p.U12}, {"C", 1}});
                  }
  r.elapsed_ms = sw.ms();
  return r;
}

inline VerificationReport verify_lemma26(const std::vector<long>& qs, int rrmax, int rmax = 2, int tmax = 2) {
  require(rrmax >= 0, "verify_lemma26: rrmax must be non-negative");
  Stopwatch sw;
  VerificationReport r{"lemma26"};
  r.parameters = {{"q", qs}, {"rrmax", rrmax}, {"rmax", rmax}, {"tmax", tmax}};
  for (long q : qs) {
    ResidueParam f(q);
    for (int low = 0; low <= rrmax; low += 2)
      for (int rr = 0; rr <= rmax; ++rr)
        for (int orient = 0; orient < 2; ++orient) {
          if (orient == 1 && low == 0) continue;
          SplitShape sh = orient == 0 ? SplitShape(rr + low, rr) : SplitShape(rr, rr + low);
          auto Ls = enumerate_L(sh);
          auto es = all_e(sh.R);
          for (int t = 0; t <= tmax; ++t)
            for (unsigned kmask = 0; kmask < (1u << t); ++kmask)
              for (unsigned umask = 0; umask < (1u << t); ++umask) {
                UVector u{std::vector<int>(t), std::vector<bool>(t)};
                int nk = 0;
                for (int k = 0; k < t; ++k) {
                  u.in_kpp[k] = (kmask >> k) & 1;
                  u.u[k] = (umask >> k) & 1;
                  nk += u.in_kpp[k];
                }
                int c2 = neg_one_pow(nk), c1 = neg_one_pow(t - nk);
                for (int eu : {1, -1}) {
                  SquareClass eta(sh.rpp, eu);
                  for (auto& g : enumerate_gamma(sh, f, eta, c1, c2))
                    for (auto& L : Ls)
                      for (auto& e : es) {
                        auto p = lemma_2_6_check(sh, g, e, u, L, c1, c2, eta, f);
                        if (p.factorwise == p.closed) {
                          r.count_pass();
                        } else {
                          r.check(false,
                                  {{"q", q}, {"rp", sh.rp}, {"rpp", sh.rpp}, {"gamma_low", g.low},
                                   {"gamma_high", g.high}, {"e", e}, {"u", u.u}, {"L2", L.l2}, {"eta", eta}},
                                  p.factorwise, p.closed);
                        }
                      }
                }
              }
        }
  }
  r.elapsed_ms = sw.ms();
  return r;
}

/// Class sizes of W_N against conjugation orbits of explicit signed permutations.
inline VerificationReport verify_weyl(int nmax) {
  require(nmax >= 0, "verify_weyl: nmax must be non-negative");
  if (nmax > 6) throw resource_limit("verify_weyl: nmax exceeds cap 6");
  Stopwatch sw;
  VerificationReport r{"weyl"};
  r.parameters = {{"nmax", nmax}};
  for (int N = 0; N <= nmax; ++N) {
    auto G = all_signed_perms(N);
    std::set<SignedPerm> seen;
    std::map<WeylClassB, long> orbit_size;
    bool type_constant = true;
    for (auto& x : G) {
      if (seen.count(x)) continue;
      std::set<SignedPerm> orbit;
      for (auto& g : G) orbit.insert(g.compose(x).compose(g.inverse()));
      WeylClassB c = cycle_type(x);
      for (auto& y : orbit) {
        if (cycle_type(y) != c) type_constant = false;
        seen.insert(y);
      }
      if (orbit_size.count(c)) type_constant = false;
      orbit_size[c] = static_cast<long>(orbit.size());
    }
    r.check(type_constant, {{"N", N}, {"what", "orbits separated by signed cycle type"}}, type_constant, true);
    auto classes = all_classes_B(N);
    r.check(classes.size() == orbit_size.size(), {{"N", N}, {"what", "class count"}},
            static_cast<long>(classes.size()), static_cast<long>(orbit_size.size()));
    BigInt total = 0;
    for (auto& c : classes) {
      BigInt sz = class_size_B(c);
      total += sz;
      long brute = orbit_size.count(c) ? orbit_size[c] : 0;
      r.check(sz == brute, {{"N", N}, {"class", c}}, sz.str(), brute);
    }
    r.check(total == order_W(N), {{"N", N}, {"what", "sum of class sizes"}}, total.str(), order_W(N).str());
  }
  r.elapsed_ms = sw.ms();
  return r;
}

namespace detail {
/// Sector system written forwards: the split assignment determined by d.
inline bool system_holds(const DFamily& f, const SplitAssignment& sa, const QuadrupleGamma& g, int b) {
  auto [rpl, rmi] = r_plus_minus(g.rp, g.rpp);
  long a = std::abs(g.rpp);
  long x1 = b == 0 ? rpl + a : rpl - a, x2 = b == 0 ? rpl - a : rpl + a;
  long y1 = b == 0 ? rmi + a : rmi - a, y2 = b == 0 ? rmi - a : rmi + a;
  return sa.n1_plus == (x1 * x1 - 1) / 4 + f.Np_plus && sa.n2_plus == (x2 * x2 - 1) / 4 + f.Npp_plus &&
         sa.n1_minus == y1 * y1 / 4 + f.Np_minus && sa.n2_minus == y2 * y2 / 4 + f.Npp_minus &&
         sa.d_split == f.d_split && sa.eta1_minus.val_parity == mod2(y1 / 2) &&
         sa.eta2_minus.val_parity == mod2(y2 / 2);
}

inline std::vector<QuadrupleGamma> quadruples_of(int n) {
  std::vector<QuadrupleGamma> out;
  for (int rp = 0; rp * rp + rp <= n; ++rp)
    for (int rpp = -n; rpp <= n; ++rpp) {
      long rest = n - (1L * rp * rp + rp + 1L * rpp * rpp);
      if (rest < 0) continue;
      for (int a = 0; a <= rest; ++a) out.push_back({rp, rpp, a, static_cast<int>(rest - a)});
    }
  return out;
}
}  // namespace detail

inline VerificationReport verify_descent(int nmax) {
  require(nmax >= 0, "verify_descent: nmax must be non-negative");
  Stopwatch sw;
  VerificationReport r{"descent"};
  r.parameters = {{"nmax", nmax}, {"beta_size_max", 8}};
  for (int n = 0; n <= nmax; ++n)
    for (auto& dd : enumerate_descent(n))
      for (auto& g : detail::quadruples_of(n)) {
        Hypotheses h = hypotheses_3_2(dd, g);
        if (!h.holds) continue;
        nlohmann::json where = {{"dd", dd}, {"g", g}};
        auto D = enumerate_D(dd, g, h.N_plus, h.N_minus);
        // Brute-force scan of the bounded box for D.
        long brute = 0;
        std::function<void(std::size_t, DFamily&)> box = [&](std::size_t i, DFamily& f) {
          if (i == dd.blocks.size()) {
            for (f.Np_plus = 0; f.Np_plus <= h.N_plus; ++f.Np_plus)
              for (f.Np_minus = 0; f.Np_minus <= h.N_minus; ++f.Np_minus)
                for (f.Npp_plus = 0; f.Npp_plus <= h.N_plus; ++f.Npp_plus)
                  for (f.Npp_minus = 0; f.Npp_minus <= h.N_minus; ++f.Npp_minus)
                    if (in_D(f, h.N_plus, h.N_minus, dd.blocks, g.Np, g.Npp)) ++brute;
            return;
          }
          for (int a = 0; a <= dd.blocks[i].d; ++a)
            for (int b = 0; b <= dd.blocks[i].d; ++b) {
              f.d_split[i] = {a, b};
              box(i + 1, f);
            }
        };
        DFamily scratch;
        scratch.d_split.resize(dd.blocks.size());
        box(0, scratch);
        r.check(brute == static_cast<long>(D.size()), where, static_cast<long>(D.size()), brute);

        if (g.Np <= 8 && g.Npp <= 8)
          for (auto& df : D)
            for (auto& b1 : partitions_of(g.Np))
              for (auto& b2 : partitions_of(g.Npp))
                for (auto& v : enumerate_V(df, dd.blocks, b1, b2)) {
                  int s1 = 0, s2 = 0;
                  for (auto [a, b] : df.d_split) {
                    s1 += a;
                    s2 += b;
                  }
                  int lhs1 = sgn_CD({Partition{}, b1});
                  int rhs1 = sgn_CD({Partition{}, v.first.plus}) * sgn_CD({Partition{}, v.first.minus}) *
                             neg_one_pow(s1);
                  int lhs2 = sgn_CD({Partition{}, b2});
                  int rhs2 = sgn_CD({Partition{}, v.second.plus}) * sgn_CD({Partition{}, v.second.minus}) *
                             neg_one_pow(s2);
                  r.check(lhs1 == rhs1 && lhs2 == rhs2, {{"g", g}, {"d", df}, {"beta1", b1}, {"beta2", b2}},
                          {lhs1, lhs2}, {rhs1, rhs2});
                }

        auto sp = split_quadruple(g);
        for (auto& sa : enumerate_split_assignments(dd)) {
          auto sol = unique_d_solver(dd, g, sa);
          long matches = 0;
          for (auto& df : D)
            if (detail::system_holds(df, sa, g, h.b)) ++matches;
          bool ok = matches == (sol ? 1 : 0);
          if (sol) {
            bool member = std::find(D.begin(), D.end(), *sol) != D.end();
            auto [s1, s2] = sector_sums(dd, sa);
            ok = ok && member && s1 == sp.n1 && s2 == sp.n2;
          }
          r.check(ok, where, {{"solver", sol.has_value()}, {"scan_matches", matches}},
                  {{"n1", sp.n1}, {"n2", sp.n2}});
        }
      }
  r.elapsed_ms = sw.ms();
  return r;
}

namespace detail {
/// Units on which an involution commuting with s acts: one per copy of an
/// even part, one per pair of copies of an odd part.
struct CopyUnits {
  std::vector<int> part;  // part size of each unit
  std::vector<int> copies;
};

inline CopyUnits copy_units(const Partition& p) {
  CopyUnits u;
  for (auto [k, m] : p.multiplicities()) {
    int c = k % 2 == 0 ? 1 : 2;
    for (int i = 0; i < m / c; ++i) {
      u.part.push_back(k);
      u.copies.push_back(c);
    }
  }
  return u;
}

/// The h-minus side of p selected by the bits of mask.
inline Partition minus_side(const CopyUnits& u, unsigned long mask, bool minus) {
  std::vector<int> v;
  for (std::size_t i = 0; i < u.part.size(); ++i)
    if (((mask >> i) & 1) == static_cast<unsigned long>(minus))
      for (int c = 0; c < u.copies[i]; ++c) v.push_back(u.part[i]);
  return Partition(v);
}

inline TripleCells cells_of(const Partition& lp, const Partition& lm, unsigned long hp, unsigned long hm) {
  auto up = copy_units(lp), um = copy_units(lm);
  return {minus_side(up, hp, false), minus_side(up, hp, true), minus_side(um, hm, false), minus_side(um, hm, true)};
}

inline EpsMap eps_mul(const EpsMap& a, const EpsMap& b) {
  EpsMap c;
  for (auto [k, v] : a) c[k] = v * b.at(k);
  return c;
}
}  // namespace detail

inline VerificationReport verify_params(int nmax, int jord_max = 3) {
  require(nmax >= 0, "verify_params: nmax must be non-negative");
  Stopwatch sw;
  VerificationReport r{"params"};
  r.parameters = {{"nmax", nmax}, {"jord_bp_max", jord_max}};
  for (int n = 0; n <= nmax; ++n) {
    // Term counts and the swap on every assembled triple.
    for (auto [n1, n2] : d_of_n(n))
      for (int a1 = n1; a1 >= 0; --a1)
        for (auto& l1p : enumerate_symplectic(2 * a1))
          for (auto& l1m : enumerate_symplectic(2 * (n1 - a1)))
            for (int a2 = n2; a2 >= 0; --a2)
              for (auto& l2p : enumerate_symplectic(2 * a2))
                for (auto& l2m : enumerate_symplectic(2 * (n2 - a2))) {
                  UnipQuadParam t1{l1p, l1m, {}, {}, n1}, t2{l2p, l2m, {}, {}, n2};
                  for (int k : l1p.even_distinct()) t1.eps_plus[k] = 1;
                  for (int k : l1m.even_distinct()) t1.eps_minus[k] = 1;
                  for (int k : l2p.even_distinct()) t2.eps_plus[k] = 1;
                  for (int k : l2m.even_distinct()) t2.eps_minus[k] = 1;
                  Triple t = assemble_triple(t1, t2, {n1, n2});
                  std::size_t jb = t.s.part_plus.even_distinct().size() + t.s.part_minus.even_distinct().size();
                  if (jb > static_cast<std::size_t>(jord_max)) continue;
                  auto pv = pi_virtual(t);
                  nlohmann::json where = {{"lambda1_plus", l1p}, {"lambda1_minus", l1m},
                                          {"lambda2_plus", l2p}, {"lambda2_minus", l2m}};
                  r.check(pv.size() == (1u << jb), where, static_cast<long>(pv.size()), 1L << jb);
                  Triple back = involution_swap(involution_swap(t));
                  r.check(back == t, where, "swap twice differs", "identity");
                }
    // Multiplicativity of eps(h) in eps and in h.
    for (int a = n; a >= 0; --a)
      for (auto& lp : enumerate_symplectic(2 * a))
        for (auto& lm : enumerate_symplectic(2 * (n - a))) {
          auto kp = lp.even_distinct(), km = lm.even_distinct();
          if (kp.size() + km.size() > static_cast<std::size_t>(jord_max)) continue;
          auto up = detail::copy_units(lp), um = detail::copy_units(lm);
          unsigned long np = 1ul << up.part.size(), nm = 1ul << um.part.size();
          auto eps_p = all_eps(kp), eps_m = all_eps(km);
          nlohmann::json where = {{"lambda_plus", lp}, {"lambda_minus", lm}};
          for (unsigned long hp = 0; hp < np; ++hp)
            for (unsigned long hm = 0; hm < nm; ++hm) {
              TripleCells h = detail::cells_of(lp, lm, hp, hm);
              for (unsigned long gp = 0; gp < np; ++gp)
                for (unsigned long gm = 0; gm < nm; ++gm) {
                  TripleCells g = detail::cells_of(lp, lm, gp, gm);
                  TripleCells hg = detail::cells_of(lp, lm, hp ^ gp, hm ^ gm);
                  for (auto& ep : eps_p)
                    for (auto& em : eps_m) {
                      int lhs = eval_character(ep, em, hg);
                      int rhs = eval_character(ep, em, h) * eval_character(ep, em, g);
                      r.check(lhs == rhs, where, lhs, rhs);
                    }
                }
              for (auto& e1p : eps_p)
                for (auto& e2p : eps_p)
                  for (auto& e1m : eps_m)
                    for (auto& e2m : eps_m) {
                      int lhs = eval_character(detail::eps_mul(e1p, e2p), detail::eps_mul(e1m, e2m), h);
                      int rhs = eval_character(e1p, e1m, h) * eval_character(e2p, e2m, h);
                      r.check(lhs == rhs, where, lhs, rhs);
                    }
            }
        }
  }
  r.elapsed_ms = sw.ms();
  return r;
}

}  // namespace endo
