#pragma once

#include <array>
#include <functional>
#include <set>
#include <vector>

#include "endo/exact_value.hpp"
#include "endo/localfield.hpp"
#include "endo/weyl.hpp"

namespace endo {

/// Shape data attached to (r', r'') with r' = r'' mod 2.
struct SplitShape {
  int rp = 0, rpp = 0;
  int R = 0, r = 0, t1 = 0, t2 = 0;

  SplitShape() = default;
  SplitShape(int rp_, int rpp_) : rp(rp_), rpp(rpp_) {
    require(rp >= 0 && rpp >= 0, "SplitShape: r' and r'' must be non-negative");
    require((rp - rpp) % 2 == 0, "SplitShape: r' and r'' must have the same parity");
    R = std::max(rp, rpp);
    r = std::min(rp, rpp);
    t1 = (R + r) / 2;
    t2 = (R - r) / 2;
  }

  int low_len() const { return R - r; }
  bool in_jhat(int j) const { return j >= 2 && j <= R - r && j % 2 == 0; }
  std::vector<int> jhat() const {
    std::vector<int> v;
    for (int j = 2; j <= R - r; j += 2) v.push_back(j);
    return v;
  }
  /// 0 when r' >= r'', 1 when r' < r''.
  int B() const { return rp < rpp ? 1 : 0; }
};

/// gamma_j for j <= R-r is a residue in F_q^x; for j > R-r only its square class (a sign).
struct GammaVector {
  std::vector<long> low;
  std::vector<int> high;

  int R() const { return static_cast<int>(low.size() + high.size()); }

  friend bool operator==(const GammaVector&, const GammaVector&) = default;
  friend auto operator<=>(const GammaVector&, const GammaVector&) = default;
};

/// sgn(gamma_j), 1-based j.
inline int gamma_sgn(const GammaVector& g, int j, const ResidueParam& rp) {
  int L = static_cast<int>(g.low.size());
  if (j <= L) return legendre(g.low[j - 1], rp);
  return g.high[j - L - 1];
}

inline int gamma_sign_product(const GammaVector& g, const ResidueParam& rp) {
  int s = 1;
  for (int j = 1; j <= g.R(); ++j) s *= gamma_sgn(g, j, rp);
  return s;
}

inline bool gamma_admissible(const GammaVector& g, const SplitShape& sh, const ResidueParam& rp,
                             const SquareClass& eta, int sgn_cd1, int sgn_cd2) {
  if (static_cast<int>(g.low.size()) != sh.low_len() || static_cast<int>(g.high.size()) != sh.r) return false;
  for (long x : g.low)
    if (x < 1 || x >= rp.q()) return false;
  for (int h : g.high)
    if (h != 1 && h != -1) return false;
  for (int j : sh.jhat())
    if (g.low[j - 2] == g.low[j - 1]) return false;
  return eta.unit_sign * gamma_sign_product(g, rp) == sgn_cd1 * sgn_cd2;
}

/// The set Gamma, in lexicographic order of (low, high).
inline std::vector<GammaVector> enumerate_gamma(const SplitShape& sh, const ResidueParam& rp,
                                                const SquareClass& eta, int sgn_cd1, int sgn_cd2) {
  require(eta.val_parity == mod2(sh.rpp), "enumerate_gamma: val(eta) must have the parity of r''");
  std::vector<GammaVector> out;
  int L = sh.low_len();
  long q = rp.q();
  GammaVector g{std::vector<long>(L, 1), std::vector<int>(sh.r, 1)};
  std::function<void(int)> rec_high = [&](int i) {
    if (i == sh.r) {
      if (eta.unit_sign * gamma_sign_product(g, rp) == sgn_cd1 * sgn_cd2) out.push_back(g);
      return;
    }
    for (int s : {1, -1}) {
      g.high[i] = s;
      rec_high(i + 1);
    }
  };
  std::function<void(int)> rec_low = [&](int i) {
    if (i == L) {
      rec_high(0);
      return;
    }
    for (long x = 1; x < q; ++x) {
      if (sh.in_jhat(i + 1) && g.low[i - 1] == x) continue;
      g.low[i] = x;
      rec_low(i + 1);
    }
  };
  rec_low(0);
  return out;
}

inline std::vector<GammaVector> enumerate_gamma(const SplitShape& sh, const ResidueParam& rp,
                                                const SquareClass& eta, const WeylClassB& w1,
                                                const WeylClassB& w2) {
  return enumerate_gamma(sh, rp, eta, sgn_CD(w1), sgn_CD(w2));
}

inline ExactValue sigma_gamma(const GammaVector& g, const SplitShape& sh, const ResidueParam& rp) {
  long q = rp.q();
  long v = 1;
  for (int j : sh.jhat()) {
    long a = g.low[j - 2], b = g.low[j - 1];
    int s = legendre(a * b, rp);
    v *= (q - 2 + s) * s * legendre(a - b, rp);
  }
  int m = sgn_minus_one(rp);
  for (int j = sh.low_len() + 1; j <= sh.R; ++j)
    if (j % 2 == 1) v *= m * gamma_sgn(g, j, rp);
  return ExactValue::integer(v);
}

/// sigma*(gamma) = ((q-3)/4)^t2 prod_{l in Jhat} (q-2+sgn(gamma_{l-1} gamma_l)).
inline ExactValue sigma_star(const GammaVector& g, const SplitShape& sh, const ResidueParam& rp) {
  long q = rp.q();
  ExactValue v = ExactValue::fraction(q - 3, 4).pow(sh.t2);
  for (int j : sh.jhat()) v = v * ExactValue::integer(q - 2 + legendre(g.low[j - 2] * g.low[j - 1], rp));
  return v;
}

/// u in (Z/2)^t together with the split {1..t} = K' U K''.
struct UVector {
  std::vector<int> u;
  std::vector<bool> in_kpp;
};

inline int kappa_U(const UVector& v) {
  require(v.u.size() == v.in_kpp.size(), "kappa_U: u and K'' mask differ in length");
  long s = 0;
  for (std::size_t k = 0; k < v.u.size(); ++k)
    if (v.in_kpp[k]) s += v.u[k];
  return neg_one_pow(s);
}

using EVector = std::vector<int>;

inline bool in_E0(const EVector& e, const SplitShape& sh) {
  require(static_cast<int>(e.size()) == sh.R, "EVector: length must be R");
  for (int j : sh.jhat())
    if (j < sh.R && e[j - 2] != e[j - 1]) return false;
  return true;
}

inline int kappa_0(const EVector& e, const SplitShape& sh) {
  require(in_E0(e, sh), "kappa_0: e is not in E0");
  int s = 1;
  for (int j : sh.jhat()) s *= e[j - 2];
  return s;
}

/// All e in {+-1}^R, +1 first, lexicographic.
inline std::vector<EVector> all_e(int R) {
  std::vector<EVector> out;
  for (unsigned long mask = 0; mask < (1ul << R); ++mask) {
    EVector e(R);
    for (int i = 0; i < R; ++i) e[i] = (mask >> (R - 1 - i) & 1) ? -1 : 1;
    out.push_back(e);
  }
  return out;
}

/// (L1, L2) with l1(j), l2(j) the elements of {2j-1, 2j}.
struct LPair {
  std::vector<int> l1, l2;

  std::set<int> L1() const { return {l1.begin(), l1.end()}; }
  std::set<int> L2() const { return {l2.begin(), l2.end()}; }

  friend bool operator==(const LPair&, const LPair&) = default;
};

inline std::vector<LPair> enumerate_L(const SplitShape& sh) {
  std::vector<LPair> out;
  int t = sh.t2;
  bool forced = (sh.r == 0 && sh.R > 0);
  for (unsigned long mask = 0; mask < (1ul << t); ++mask) {
    LPair L{std::vector<int>(t), std::vector<int>(t)};
    bool ok = true;
    for (int j = 1; j <= t; ++j) {
      bool second = (mask >> (t - j)) & 1;
      L.l2[j - 1] = second ? 2 * j : 2 * j - 1;
      L.l1[j - 1] = second ? 2 * j - 1 : 2 * j;
    }
    if (forced && L.l2[t - 1] != sh.R - 1) ok = false;
    if (ok) out.push_back(L);
  }
  return out;
}

inline int kappa_L2(const EVector& e, const LPair& L) {
  int s = 1;
  for (int l : L.l2) s *= e.at(l - 1);
  return s;
}

inline ExactValue lemma_2_5_sum(const EVector& e, const SplitShape& sh) {
  long s = 0;
  for (auto& L : enumerate_L(sh)) s += kappa_L2(e, L);
  return ExactValue::integer(s);
}

/// eta[L2, gamma]: valuation parity t2, unit sign fixed by sgn_CD(w'').
inline SquareClass eta_of_L2(const GammaVector& g, const LPair& L, const SplitShape& sh, int sgn_cd2,
                             const ResidueParam& rp) {
  int s = sgn_cd2;
  for (int l : L.l2) s *= gamma_sgn(g, l, rp);
  return {sh.t2, s};
}

inline SquareClass eta_of_L2(const GammaVector& g, const LPair& L, const SplitShape& sh,
                             const WeylClassB& w2, const ResidueParam& rp) {
  return eta_of_L2(g, L, sh, sgn_CD(w2), rp);
}

inline SquareClass eta_of_L1(const GammaVector& g, const LPair& L, const SplitShape& sh, int sgn_cd2,
                             const SquareClass& eta, const ResidueParam& rp) {
  return sq_mul(eta, eta_of_L2(g, L, sh, sgn_cd2, rp));
}

/// Component families gamma_1, gamma_2 as residues; a square class (j > R-r)
/// is realized by 1 or by the least non-residue.
using Residues = std::vector<long>;

inline long class_rep(int s, const ResidueParam& rp) { return s == 1 ? 1 : rp.nonresidue(); }

inline std::pair<Residues, Residues> gamma_L_split(const GammaVector& g, const LPair& L, const SplitShape& sh,
                                                   const ResidueParam& rp) {
  Residues g1(sh.t1), g2(sh.t2);
  for (int j = 1; j <= sh.t2; ++j) {
    g1[j - 1] = g.low[L.l1[j - 1] - 1];
    g2[j - 1] = g.low[L.l2[j - 1] - 1];
  }
  for (int j = sh.t2 + 1; j <= sh.t1; ++j) g1[j - 1] = class_rep(gamma_sgn(g, j + sh.t2, rp), rp);
  return {g1, g2};
}

/// pi_{L1,L2}: reassembles gamma from its two components.
inline GammaVector pi_L(const Residues& g1, const Residues& g2, const LPair& L, const SplitShape& sh,
                        const ResidueParam& rp) {
  require(static_cast<int>(g1.size()) == sh.t1 && static_cast<int>(g2.size()) == sh.t2,
          "pi_L: component lengths must be t1 and t2");
  GammaVector g{std::vector<long>(sh.low_len()), std::vector<int>(sh.r)};
  for (int j = 1; j <= sh.t2; ++j) {
    g.low[L.l1[j - 1] - 1] = g1[j - 1];
    g.low[L.l2[j - 1] - 1] = g2[j - 1];
  }
  for (int j = sh.t2 + 1; j <= sh.t1; ++j) g.high[j + sh.t2 - sh.low_len() - 1] = legendre(g1[j - 1], rp);
  return g;
}

/// A 2-element set of residues containing one square and one non-square.
using Transversal = std::array<long, 2>;

struct TransversalFamily {
  std::vector<Transversal> first;   // Gamma_{1,j}, j = 1..t2
  std::vector<Transversal> second;  // Gamma_{2,j}, j = 1..t2

  friend bool operator==(const TransversalFamily&, const TransversalFamily&) = default;
};

/// All ordered pairs (Gamma_1, Gamma_2) of disjoint transversals of F_q^x / squares.
inline std::vector<std::pair<Transversal, Transversal>> transversal_pairs(const ResidueParam& rp) {
  std::vector<Transversal> ts;
  for (long x = 1; x < rp.q(); ++x)
    for (long y = x + 1; y < rp.q(); ++y)
      if (legendre(x, rp) != legendre(y, rp)) ts.push_back({x, y});
  std::vector<std::pair<Transversal, Transversal>> out;
  for (auto& a : ts)
    for (auto& b : ts)
      if (a[0] != b[0] && a[0] != b[1] && a[1] != b[0] && a[1] != b[1]) out.emplace_back(a, b);
  return out;
}

inline void for_each_bold_gamma(int t2, const ResidueParam& rp,
                                const std::function<void(const TransversalFamily&)>& f) {
  auto pairs = transversal_pairs(rp);
  TransversalFamily fam{std::vector<Transversal>(t2), std::vector<Transversal>(t2)};
  std::function<void(int)> rec = [&](int j) {
    if (j == t2) {
      f(fam);
      return;
    }
    for (auto& [a, b] : pairs) {
      fam.first[j] = a;
      fam.second[j] = b;
      rec(j + 1);
    }
  };
  rec(0);
}

constexpr long kBoldGammaCap = 200000;

inline std::vector<TransversalFamily> enumerate_bold_gamma(int t2, const ResidueParam& rp) {
  double est = 1;
  double per = static_cast<double>(transversal_pairs(rp).size());
  for (int j = 0; j < t2; ++j) est *= per;
  if (est > kBoldGammaCap) throw resource_limit("enumerate_bold_gamma: family count exceeds cap");
  std::vector<TransversalFamily> out;
  for_each_bold_gamma(t2, rp, [&](const TransversalFamily& f) { out.push_back(f); });
  return out;
}

/// |bold Gamma| by direct enumeration.
inline BigInt bold_gamma_count_enumerated(int t2, const ResidueParam& rp) {
  BigInt n = 0;
  for_each_bold_gamma(t2, rp, [&](const TransversalFamily&) { ++n; });
  return n;
}

/// |bold Gamma| as the t2-th power of the enumerated per-index count; the
/// family set is a product over j by construction.
inline BigInt bold_gamma_count(int t2, const ResidueParam& rp) {
  BigInt per = transversal_pairs(rp).size();
  BigInt n = 1;
  for (int j = 0; j < t2; ++j) n *= per;
  return n;
}

/// Gamma*_{eta_j}: products of the family's transversals (component 1 also uses
/// {1, xi} for indices beyond t2) whose sign matches sgn_CD.
inline std::vector<Residues> gamma_star(const TransversalFamily& fam, int which, int t, const SquareClass& eta_j,
                                        int sgn_cd, const ResidueParam& rp) {
  const auto& sets = which == 1 ? fam.first : fam.second;
  int t2 = static_cast<int>(sets.size());
  std::vector<std::array<long, 2>> choices;
  for (int j = 0; j < t; ++j)
    choices.push_back(j < t2 ? sets[j] : Transversal{1, rp.nonresidue()});
  std::vector<Residues> out;
  Residues cur(t);
  std::function<void(int, int)> rec = [&](int j, int s) {
    if (j == t) {
      if (eta_j.unit_sign * s == sgn_cd) out.push_back(cur);
      return;
    }
    for (long x : choices[j]) {
      cur[j] = x;
      rec(j + 1, s * legendre(x, rp));
    }
  };
  rec(0, 1);
  return out;
}

struct FiberCheck {
  long observed = 0;
  ExactValue predicted;
  bool in_image = false;
};

/// Brute-force size of the pi_{L1,L2} fibre over gamma.
inline FiberCheck fiber_count_check(const GammaVector& g, const SplitShape& sh, const ResidueParam& rp,
                                    const LPair& L) {
  FiberCheck fc;
  fc.predicted = sigma_star(g, sh, rp);
  bool ok = static_cast<int>(g.low.size()) == sh.low_len();
  for (int j : sh.jhat())
    if (ok && g.low[j - 2] == g.low[j - 1]) ok = false;
  if (!ok) return fc;
  auto [g1, g2] = gamma_L_split(g, L, sh, rp);
  auto contains = [](const Transversal& t, long x) { return t[0] == x || t[1] == x; };
  for_each_bold_gamma(sh.t2, rp, [&](const TransversalFamily& f) {
    for (int j = 0; j < sh.t2; ++j)
      if (!contains(f.first[j], g1[j]) || !contains(f.second[j], g2[j])) return;
    ++fc.observed;
  });
  fc.in_image = fc.observed > 0;
  return fc;
}

}  // namespace endo
