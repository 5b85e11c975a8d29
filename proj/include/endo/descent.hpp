#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "endo/constants.hpp"
#include "endo/localfield.hpp"
#include "endo/partitions.hpp"
#include "endo/weyl.hpp"

namespace endo {

/// A unitary block G_i: degree d_i over the unramified extension of degree f_i.
struct UnitaryBlock {
  int d = 1, f = 1;

  friend bool operator==(const UnitaryBlock&, const UnitaryBlock&) = default;
  friend auto operator<=>(const UnitaryBlock&, const UnitaryBlock&) = default;
};

/// Discrete invariants of the centralizer of the semisimple part of an elliptic element.
struct DescentDatum {
  int n_plus = 0;
  SquareClass eta_plus;
  int n_minus = 0;
  SquareClass eta_minus;
  std::vector<UnitaryBlock> blocks;
  int n = 0;

  int d() const {
    int s = 0;
    for (auto& b : blocks) s += b.d;
    return s;
  }

  void validate() const {
    require(n_plus >= 0 && n_minus >= 0 && n >= 0, "DescentDatum: n, n+ and n- must be non-negative");
    int dim = 2 * n_plus + 1 + 2 * n_minus;
    for (auto& b : blocks) {
      require(b.d >= 1 && b.f >= 1, "DescentDatum: block degrees must be positive");
      dim += 2 * b.f * b.d;
    }
    require(dim == 2 * n + 1, "DescentDatum: dimensions do not add up to 2n+1");
    require(eta_plus.val_parity == eta_minus.val_parity, "DescentDatum: val(eta+) + val(eta-) must be even");
    require(eta_plus.unit_sign * eta_minus.unit_sign == neg_one_pow(d()),
            "DescentDatum: eta+ eta- must equal xi^d");
    require(!(n_minus == 1 && eta_minus.trivial()), "DescentDatum: (n-, eta-) = (1, 1) is not elliptic");
  }

  friend bool operator==(const DescentDatum&, const DescentDatum&) = default;
};

inline void to_json(nlohmann::json& j, const DescentDatum& dd) {
  nlohmann::json bl = nlohmann::json::array();
  for (auto& b : dd.blocks) bl.push_back({{"d", b.d}, {"f", b.f}});
  j = nlohmann::json{{"n", dd.n},
                     {"n_plus", dd.n_plus},
                     {"eta_plus", dd.eta_plus},
                     {"n_minus", dd.n_minus},
                     {"eta_minus", dd.eta_minus},
                     {"blocks", bl}};
}

/// Endoscopic split of each sector of a descent datum.
struct SplitAssignment {
  int n1_plus = 0, n2_plus = 0;
  int n1_minus = 0, n2_minus = 0;
  SquareClass eta1_minus, eta2_minus;
  std::vector<std::pair<int, int>> d_split;

  void validate(const DescentDatum& dd) const {
    require(n1_plus >= 0 && n2_plus >= 0 && n1_plus + n2_plus == dd.n_plus,
            "SplitAssignment: n1+ + n2+ must equal n+");
    require(n1_minus >= 0 && n2_minus >= 0 && n1_minus + n2_minus == dd.n_minus,
            "SplitAssignment: n1- + n2- must equal n-");
    require(sq_mul(eta1_minus, eta2_minus) == dd.eta_minus, "SplitAssignment: eta1- eta2- must equal eta-");
    require(d_split.size() == dd.blocks.size(), "SplitAssignment: one split per unitary block");
    for (std::size_t i = 0; i < d_split.size(); ++i)
      require(d_split[i].first >= 0 && d_split[i].second >= 0 &&
                  d_split[i].first + d_split[i].second == dd.blocks[i].d,
              "SplitAssignment: d1i + d2i must equal di");
  }
};

inline int sign_star_aggregate(const std::vector<int>& components, int d, const SquareClass& eta_minus) {
  int v = neg_one_pow(1L * d * eta_minus.val_parity);
  for (int c : components) v *= c;
  return v;
}

inline int delta_descent(const std::vector<int>& component_deltas, int d2, const SquareClass& eta_minus) {
  int v = neg_one_pow(1L * d2 * eta_minus.val_parity);
  for (int c : component_deltas) v *= c;
  return v;
}

struct Hypotheses {
  bool holds = false;
  int N_plus = 0, N_minus = 0;
  int b = 0;
};

inline Hypotheses hypotheses_3_2(const DescentDatum& dd, const QuadrupleGamma& g) {
  Hypotheses h;
  h.b = b_of(g.rp, g.rpp);
  auto [rpl, rmi] = r_plus_minus(g.rp, g.rpp);
  long r2 = 1L * g.rpp * g.rpp;
  if (dd.eta_minus.val_parity != mod2(g.rpp)) return h;
  if (2L * dd.n_plus + 1 < 1L * rpl * rpl + r2 || 2L * dd.n_minus < 1L * rmi * rmi + r2) return h;
  h.holds = true;
  h.N_plus = static_cast<int>(dd.n_plus - (1L * rpl * rpl + r2 - 1) / 2);
  h.N_minus = static_cast<int>(dd.n_minus - (1L * rmi * rmi + r2) / 2);
  return h;
}

/// A family d = (N'+, N'-, N''+, N''-, (d'_i, d''_i)).
struct DFamily {
  int Np_plus = 0, Np_minus = 0, Npp_plus = 0, Npp_minus = 0;
  std::vector<std::pair<int, int>> d_split;

  friend bool operator==(const DFamily&, const DFamily&) = default;
  friend auto operator<=>(const DFamily&, const DFamily&) = default;
};

inline void to_json(nlohmann::json& j, const DFamily& f) {
  nlohmann::json ds = nlohmann::json::array();
  for (auto [a, b] : f.d_split) ds.push_back({a, b});
  j = nlohmann::json{{"Np_plus", f.Np_plus},   {"Np_minus", f.Np_minus}, {"Npp_plus", f.Npp_plus},
                     {"Npp_minus", f.Npp_minus}, {"d_split", ds}};
}

inline bool in_D(const DFamily& f, int N_plus, int N_minus, const std::vector<UnitaryBlock>& blocks, int Np,
                 int Npp) {
  if (f.Np_plus < 0 || f.Np_minus < 0 || f.Npp_plus < 0 || f.Npp_minus < 0) return false;
  if (f.d_split.size() != blocks.size()) return false;
  if (f.Np_plus + f.Npp_plus != N_plus || f.Np_minus + f.Npp_minus != N_minus) return false;
  long s1 = f.Np_plus + f.Np_minus, s2 = f.Npp_plus + f.Npp_minus;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    auto [a, b] = f.d_split[i];
    if (a < 0 || b < 0 || a + b != blocks[i].d) return false;
    s1 += 1L * a * blocks[i].f;
    s2 += 1L * b * blocks[i].f;
  }
  return s1 == Np && s2 == Npp;
}

/// All d in D, ordered by (d'_i) then N'+.
inline std::vector<DFamily> enumerate_D(int N_plus, int N_minus, const std::vector<UnitaryBlock>& blocks, int Np,
                                        int Npp) {
  std::vector<DFamily> out;
  if (N_plus < 0 || N_minus < 0) return out;
  DFamily f;
  f.d_split.resize(blocks.size());
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long used) {
    if (i == blocks.size()) {
      for (int a = 0; a <= N_plus; ++a) {
        long m = Np - a - used;
        if (m < 0 || m > N_minus) continue;
        f.Np_plus = a;
        f.Np_minus = static_cast<int>(m);
        f.Npp_plus = N_plus - a;
        f.Npp_minus = N_minus - f.Np_minus;
        if (in_D(f, N_plus, N_minus, blocks, Np, Npp)) out.push_back(f);
      }
      return;
    }
    for (int a = 0; a <= blocks[i].d; ++a) {
      f.d_split[i] = {a, blocks[i].d - a};
      rec(i + 1, used + 1L * a * blocks[i].f);
    }
  };
  rec(0, 0);
  return out;
}

inline std::vector<DFamily> enumerate_D(const DescentDatum& dd, const QuadrupleGamma& g, int N_plus, int N_minus) {
  return enumerate_D(N_plus, N_minus, dd.blocks, g.Np, g.Npp);
}

/// One side of a family v: beta = beta_plus U beta_minus U (f_i beta_i), beta_i all odd.
struct VSide {
  Partition plus, minus;
  std::vector<Partition> blocks;

  friend bool operator==(const VSide&, const VSide&) = default;
  friend auto operator<=>(const VSide&, const VSide&) = default;
};

struct VFamily {
  VSide first, second;
};

inline void to_json(nlohmann::json& j, const VSide& v) {
  j = nlohmann::json{{"plus", v.plus}, {"minus", v.minus}, {"blocks", v.blocks}};
}

/// All splittings of beta with S(plus) = a, S(minus) = b, and all-odd beta_i of size d_i.
inline std::vector<VSide> enumerate_V_side(const Partition& beta, int a, int b, const std::vector<int>& d,
                                           const std::vector<UnitaryBlock>& blocks) {
  std::vector<VSide> out;
  VSide cur;
  cur.blocks.resize(d.size());
  std::function<void(std::size_t, const Partition&)> rec_blocks = [&](std::size_t i, const Partition& rest) {
    if (i == d.size()) {
      if (rest.empty()) out.push_back(cur);
      return;
    }
    for (auto& p : odd_partitions_of(d[i])) {
      Partition left;
      if (!difference(rest, p.scaled(blocks[i].f), left)) continue;
      cur.blocks[i] = p;
      rec_blocks(i + 1, left);
    }
  };
  for (auto& p : sub_multisets(beta)) {
    if (p.size() != a) continue;
    Partition r1;
    difference(beta, p, r1);
    for (auto& m : sub_multisets(r1)) {
      if (m.size() != b) continue;
      Partition r2;
      difference(r1, m, r2);
      cur.plus = p;
      cur.minus = m;
      rec_blocks(0, r2);
    }
  }
  return out;
}

inline std::vector<VFamily> enumerate_V(const DFamily& df, const std::vector<UnitaryBlock>& blocks,
                                        const Partition& beta1, const Partition& beta2) {
  std::vector<int> d1, d2;
  for (auto [a, b] : df.d_split) {
    d1.push_back(a);
    d2.push_back(b);
  }
  auto s1 = enumerate_V_side(beta1, df.Np_plus, df.Np_minus, d1, blocks);
  auto s2 = enumerate_V_side(beta2, df.Npp_plus, df.Npp_minus, d2, blocks);
  std::vector<VFamily> out;
  for (auto& x : s1)
    for (auto& y : s2) out.push_back({x, y});
  return out;
}

/// Solves the sector system for d given a split assignment; none when the
/// parity or inequality conditions fail, or the solution is not in D.
inline std::optional<DFamily> unique_d_solver(const DescentDatum& dd, const QuadrupleGamma& g,
                                              const SplitAssignment& sa) {
  sa.validate(dd);
  Hypotheses h = hypotheses_3_2(dd, g);
  if (!h.holds) return std::nullopt;
  auto [rpl, rmi] = r_plus_minus(g.rp, g.rpp);
  long a = std::abs(g.rpp);
  long big_plus = ((rpl + a) * (rpl + a) - 1) / 4, small_plus = ((rpl - a) * (rpl - a) - 1) / 4;
  long big_minus = (rmi + a) * (rmi + a) / 4, small_minus = (rmi - a) * (rmi - a) / 4;
  // For b = 1 the roles of the indices 1 and 2 are exchanged.
  bool sw = h.b == 1;
  long need1p = sw ? small_plus : big_plus, need2p = sw ? big_plus : small_plus;
  long need1m = sw ? small_minus : big_minus, need2m = sw ? big_minus : small_minus;
  long par1 = sw ? (rmi - a) / 2 : (rmi + a) / 2, par2 = sw ? (rmi + a) / 2 : (rmi - a) / 2;
  if (sa.eta1_minus.val_parity != mod2(par1) || sa.eta2_minus.val_parity != mod2(par2)) return std::nullopt;
  if (sa.n1_plus < need1p || sa.n2_plus < need2p || sa.n1_minus < need1m || sa.n2_minus < need2m)
    return std::nullopt;
  DFamily f;
  f.Np_plus = static_cast<int>(sa.n1_plus - need1p);
  f.Npp_plus = static_cast<int>(sa.n2_plus - need2p);
  f.Np_minus = static_cast<int>(sa.n1_minus - need1m);
  f.Npp_minus = static_cast<int>(sa.n2_minus - need2m);
  f.d_split = sa.d_split;
  if (!in_D(f, h.N_plus, h.N_minus, dd.blocks, g.Np, g.Npp)) return std::nullopt;
  return f;
}

/// Sector sums n_{1,+} + n_{1,-} + sum d_{1,i} f_i and the same for index 2.
inline std::pair<long, long> sector_sums(const DescentDatum& dd, const SplitAssignment& sa) {
  long s1 = sa.n1_plus + sa.n1_minus, s2 = sa.n2_plus + sa.n2_minus;
  for (std::size_t i = 0; i < dd.blocks.size(); ++i) {
    s1 += 1L * sa.d_split[i].first * dd.blocks[i].f;
    s2 += 1L * sa.d_split[i].second * dd.blocks[i].f;
  }
  return {s1, s2};
}

/// All split assignments of a descent datum.
inline std::vector<SplitAssignment> enumerate_split_assignments(const DescentDatum& dd) {
  std::vector<SplitAssignment> out;
  SplitAssignment sa;
  sa.d_split.resize(dd.blocks.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == dd.blocks.size()) {
      out.push_back(sa);
      return;
    }
    for (int a = 0; a <= dd.blocks[i].d; ++a) {
      sa.d_split[i] = {a, dd.blocks[i].d - a};
      rec(i + 1);
    }
  };
  for (int a = 0; a <= dd.n_plus; ++a)
    for (int m = 0; m <= dd.n_minus; ++m)
      for (auto& e1 : all_square_classes()) {
        sa.n1_plus = a;
        sa.n2_plus = dd.n_plus - a;
        sa.n1_minus = m;
        sa.n2_minus = dd.n_minus - m;
        sa.eta1_minus = e1;
        sa.eta2_minus = sq_mul(e1, dd.eta_minus);
        rec(0);
      }
  return out;
}

constexpr int kDescentCap = 12;

/// Multisets of unitary blocks with sum f_i d_i = m, in a canonical order.
inline std::vector<std::vector<UnitaryBlock>> block_multisets(int m) {
  std::vector<std::vector<UnitaryBlock>> out;
  std::vector<UnitaryBlock> cur;
  std::function<void(int, UnitaryBlock)> rec = [&](int rest, UnitaryBlock maxb) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int d = rest; d >= 1; --d)
      for (int f = rest / d; f >= 1; --f) {
        UnitaryBlock b{d, f};
        if (maxb < b) continue;
        cur.push_back(b);
        rec(rest - d * f, b);
        cur.pop_back();
      }
  };
  rec(m, UnitaryBlock{m + 1, m + 1});
  return out;
}

/// All descent data for the ambient n.
inline std::vector<DescentDatum> enumerate_descent(int n) {
  require(n >= 0, "enumerate_descent: n must be non-negative");
  if (n > kDescentCap) throw resource_limit("enumerate_descent: n exceeds cap 12");
  std::vector<DescentDatum> out;
  for (int np = n; np >= 0; --np)
    for (int nm = n - np; nm >= 0; --nm)
      for (auto& bl : block_multisets(n - np - nm))
        for (auto& ep : all_square_classes())
          for (auto& em : all_square_classes()) {
            DescentDatum dd{np, ep, nm, em, bl, n};
            try {
              dd.validate();
            } catch (const invalid_argument&) {
              continue;
            }
            out.push_back(dd);
          }
  return out;
}

}  // namespace endo
