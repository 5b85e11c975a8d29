#pragma once

#include <string>
#include <utility>
#include <vector>

#include "endo/exact_value.hpp"
#include "endo/families.hpp"
#include "endo/localfield.hpp"
#include "endo/weyl.hpp"

namespace endo {

/// (r', r'', N', N'').
struct QuadrupleGamma {
  int rp = 0, rpp = 0, Np = 0, Npp = 0;

  long n() const { return 1L * rp * rp + rp + 1L * rpp * rpp + Np + Npp; }

  friend bool operator==(const QuadrupleGamma&, const QuadrupleGamma&) = default;
};

inline void to_json(nlohmann::json& j, const QuadrupleGamma& g) {
  j = nlohmann::json{{"rp", g.rp}, {"rpp", g.rpp}, {"Np", g.Np}, {"Npp", g.Npp}};
}

struct SplitResult {
  QuadrupleGamma g1, g2;
  long n1 = 0, n2 = 0;
};

namespace detail {
inline std::pair<int, int> split_pair(long m) {
  long f = floor_div(m, 2);
  long a = std::max(f, -f - 1);
  long b = floor_div(m + 1, 2);
  return {static_cast<int>(a), static_cast<int>(b < 0 ? -b : b)};
}
inline long split_n(long m) { return (m * m + (m + 1) * (m + 1) - 1) / 4; }
}  // namespace detail

inline SplitResult split_quadruple(const QuadrupleGamma& g) {
  auto [a1, b1] = detail::split_pair(g.rp + g.rpp);
  auto [a2, b2] = detail::split_pair(g.rp - g.rpp);
  SplitResult s;
  s.g1 = {a1, b1, g.Np, 0};
  s.g2 = {a2, b2, g.Npp, 0};
  s.n1 = detail::split_n(g.rp + g.rpp) + g.Np;
  s.n2 = detail::split_n(g.rp - g.rpp) + g.Npp;
  return s;
}

/// (r'_+, r'_-): (r'+1, r') when r' = r'' mod 2, else (r', r'+1).
inline std::pair<int, int> r_plus_minus(int rp, int rpp) {
  if (mod2(rp) == mod2(rpp)) return {rp + 1, rp};
  return {rp, rp + 1};
}

/// Exponent u with U = (-1)^{r''} sgn(-1)^u.
inline long u_exponent(int rp, int rpp) {
  long a = std::abs(rpp);
  long base = (1L * rp * rp - rp) / 2 + (a * a - a) / 2;
  if (a <= rp) return base + (r_plus_minus(rp, rpp).first - a - 1) / 2;
  return base + rp + rpp + 1;
}

inline int U_sign(int rp, int rpp, int s) { return neg_one_pow(rpp) * sign_pow(s, u_exponent(rp, rpp)); }

struct IdentityItem {
  std::string name;
  long lhs = 0, rhs = 0;
  bool pass = false;
};

struct AnnexeResult {
  int rp = 0, rpp = 0;
  std::vector<IdentityItem> items;

  bool pass() const {
    for (auto& i : items)
      if (!i.pass) return false;
    return true;
  }
};

/// Evaluates the four annexe identities at (r', r''); the U identity is
/// checked for both values of sgn(-1).
inline AnnexeResult annexe_identities(int rp, int rpp) {
  require(rp >= 0, "annexe_identities: r' must be non-negative");
  AnnexeResult res{rp, rpp, {}};
  auto add = [&](std::string name, long l, long r, bool ok) { res.items.push_back({std::move(name), l, r, ok}); };
  auto sp = split_quadruple({rp, rpp, 0, 0});
  int r1p = sp.g1.rp, r1pp = sp.g1.rpp, r2p = sp.g2.rp, r2pp = sp.g2.rpp;

  add("parity r''1+r''2 = r'' mod 2", mod2(r1pp + r2pp), mod2(rpp), mod2(r1pp + r2pp) == mod2(rpp));

  long l2a = 1L * r1p * r1p + r1p + 1L * r1pp * r1pp, r2a = detail::split_n(rp + rpp);
  add("rank index 1", l2a, r2a, l2a == r2a);
  long l2b = 1L * r2p * r2p + r2p + 1L * r2pp * r2pp, r2b = detail::split_n(rp - rpp);
  add("rank index 2", l2b, r2b, l2b == r2b);

  auto [rpl, rmi] = r_plus_minus(rp, rpp);
  auto [r1pl, r1mi] = r_plus_minus(r1p, r1pp);
  auto [r2pl, r2mi] = r_plus_minus(r2p, r2pp);
  auto chk3 = [&](const char* name, long l, long r) { add(name, l, r, l == r); };
  chk3("sum r'1+ + r''1", r1pl + r1pp, std::abs(rpl + rpp));
  chk3("sum r'1- + r''1", r1mi + r1pp, std::abs(rmi + rpp));
  chk3("sum r'2+ + r''2", r2pl + r2pp, std::abs(rpl - rpp));
  chk3("sum r'2- + r''2", r2mi + r2pp, std::abs(rmi - rpp));

  for (int s : {1, -1}) {
    int u = U_sign(rp, rpp, s), u12 = U_sign(r1p, r1pp, s) * U_sign(r2p, r2pp, s);
    add(s == 1 ? "U = U1 U2, sgn(-1)=+1" : "U = U1 U2, sgn(-1)=-1", u, u12, u == u12);
  }
  return res;
}

/// C(w') for a cuspidal class (empty alpha).
inline ExactValue const_C_w(const WeylClassB& w, const ResidueParam& rp) {
  require(w.cuspidal(), "const_C_w: class must be cuspidal");
  Rational r = Rational(class_size_B(w)) / Rational(order_W(w.N()));
  for (int b : w.beta.parts()) {
    BigInt qb = 1;
    for (int i = 0; i < b; ++i) qb *= rp.q();
    r /= Rational(qb + 1);
  }
  return ExactValue::from_rational(r, w.N());
}

/// alpha(r', r'', w', w'') from the sign characters of w', w''.
inline int const_alpha(int rp, int rpp, int sgn_cd1, int sgn_cd2, const SquareClass& eta, int s) {
  require(mod2(rp) == mod2(rpp) && mod2(rpp) == eta.val_parity,
          "const_alpha: r', r'' and val(eta) must have the same parity");
  int v = sign_pow(s, (rp + rpp) / 2) * eta.unit_sign;
  if (eta.val_parity == 1) v *= sgn_cd1 * sgn_cd2;
  return v;
}

inline int const_alpha(int rp, int rpp, const WeylClassB& w1, const WeylClassB& w2, const SquareClass& eta,
                       const ResidueParam& f) {
  return const_alpha(rp, rpp, sgn_CD(w1), sgn_CD(w2), eta, sgn_minus_one(f));
}

/// C(r', r'') = 2^{1-r'-r''} ((q-1)^2 (q-3))^{(r-R)/2}.
inline ExactValue const_C_rr(int rp, int rpp, const ResidueParam& f) {
  require(rp >= 0 && rpp >= 0 && mod2(rp) == mod2(rpp), "const_C_rr: r' = r'' mod 2 required");
  long q = f.q();
  int e = (std::min(rp, rpp) - std::max(rp, rpp)) / 2;
  return ExactValue::integer(2).pow(1 - rp - rpp) * ExactValue::integer((q - 1) * (q - 1) * (q - 3)).pow(e);
}

/// Constant of the odd orthogonal transfer lemma; stated without an identity to check.
inline int const_C_odd(int rp, int rpp, int sgn_cd2, const SquareClass& eta2, const SquareClass& eta, int s) {
  require(mod2(rp) == mod2(1 + eta.val_parity) && mod2(rpp) == eta.val_parity,
          "const_C_odd: need r' = 1 + val(eta) and r'' = val(eta) mod 2");
  int base = sign_pow(s, (rp + rpp - 1) / 2);
  int m = s * eta2.unit_sign;
  if (rpp <= rp) return base * sign_pow(m, eta.val_parity);
  return base * sgn_cd2 * sign_pow(m, 1 + eta.val_parity);
}

inline void require_even_case(const SquareClass& eta1, const SquareClass& eta2, int rp, int rpp,
                              const SquareClass& eta) {
  require(rp >= 0 && rpp >= 0 && mod2(rp) == mod2(rpp), "even case: r' = r'' mod 2 required");
  require(sq_mul(eta1, eta2) == eta, "even case: eta1 eta2 must equal eta");
  require(eta1.val_parity == mod2((rp + rpp) / 2) && eta2.val_parity == mod2(std::abs(rp - rpp) / 2),
          "even case: val(eta_j) must have the parity of t_j");
}

/// C_{eta1,eta2} of the even orthogonal transfer lemma.
inline int const_C_even(const SquareClass& eta1, const SquareClass& eta2, int rp, int rpp, int sgn_cd2,
                        const SquareClass& eta, int s) {
  require_even_case(eta1, eta2, rp, rpp, eta);
  if (rpp <= rp) return sign_pow(eta2.unit_sign, eta.val_parity);
  return sign_pow(s, eta2.val_parity) * sgn_cd2 * sign_pow(eta2.unit_sign, 1 + eta.val_parity);
}

/// Transfer-factor constant d(r', r'', gamma, L2).
inline int const_d(const SplitShape& sh, const GammaVector& g, int sgn_cd1, int sgn_cd2, const SquareClass& eta,
                   const SquareClass& eta2L, const ResidueParam& f) {
  int s = sgn_minus_one(f);
  int v = sign_pow(eta.unit_sign * sgn_cd1, sh.t2) * sign_pow(sgn_cd2, sh.t2 + eta.val_parity);
  for (int j : sh.jhat()) {
    long a = g.low[j - 2], b = g.low[j - 1];
    v *= sign_pow(legendre(a * b, f), j / 2 - 1) * legendre(a - b, f);
  }
  for (int j = sh.low_len() + 1; j <= sh.R; ++j) v *= sign_pow(gamma_sgn(g, j, f), sh.t2);
  if (sh.B() == 1) v *= sign_pow(s, eta2L.val_parity) * eta2L.unit_sign * sgn_cd2;
  return v;
}

/// Ratio of Weil constants C(n1, eta1, n2, eta2), by valuation parities.
inline int const_weil_ratio(long /*n1*/, const SquareClass& eta1, long /*n2*/, const SquareClass& eta2, int s) {
  int v1 = eta1.val_parity, v2 = eta2.val_parity;
  if (v1 == 0 && v2 == 0) return 1;
  if (v1 == 0) return eta1.unit_sign;
  if (v2 == 0) return eta2.unit_sign;
  return s * eta1.unit_sign * eta2.unit_sign;
}

/// Inputs of the final constant identity in the even case.
struct Identity28Input {
  int rp = 0, rpp = 0;
  int sgn_cd1 = 1, sgn_cd2 = 1;
  SquareClass eta1, eta2;
  int beta = 1;

  SquareClass eta() const { return sq_mul(eta1, eta2); }
};

inline void to_json(nlohmann::json& j, const Identity28Input& in) {
  j = nlohmann::json{{"rp", in.rp},           {"rpp", in.rpp},   {"sgn_cd1", in.sgn_cd1},
                     {"sgn_cd2", in.sgn_cd2}, {"eta1", in.eta1}, {"eta2", in.eta2},
                     {"beta", in.beta}};
}

struct C3C4 {
  ExactValue C3, C4;
};

/// How the power of 2 in C4 is read: the printed exponent beta+2t1+2t2, or
/// the sign-flipped beta-2t1-2t2.
enum class TwoPowerReading { printed, alternate };

inline C3C4 const_C3_C4(const Identity28Input& in, const ResidueParam& f,
                        TwoPowerReading reading = TwoPowerReading::printed) {
  SquareClass eta = in.eta();
  require_even_case(in.eta1, in.eta2, in.rp, in.rpp, eta);
  require(in.beta == 0 || in.beta == 1, "const_C3_C4: beta must be 0 or 1");
  SplitShape sh(in.rp, in.rpp);
  int s = sgn_minus_one(f);
  long q = f.q();
  int sign = sign_pow(s, 1L * sh.r * sh.t2) * sign_pow(eta.unit_sign * in.sgn_cd1, sh.t2) *
             sign_pow(in.sgn_cd2, sh.t2 + eta.val_parity);
  if (sh.B() == 1) sign *= sign_pow(s, in.eta2.val_parity) * in.eta2.unit_sign * in.sgn_cd2;
  C3C4 out;
  out.C3 = ExactValue::sign_value(sign) * ExactValue::fraction(q - 3, 4).pow(-sh.t2);
  int two = reading == TwoPowerReading::printed ? in.beta + 2 * sh.t1 + 2 * sh.t2 : in.beta - 2 * sh.t1 - 2 * sh.t2;
  int a = const_alpha(in.rp, in.rpp, in.sgn_cd1, in.sgn_cd2, eta, s);
  int a1 = const_alpha(sh.t1, sh.t1, in.sgn_cd1, 1, in.eta1, s);
  int a2 = const_alpha(sh.t2, sh.t2, in.sgn_cd2, 1, in.eta2, s);
  long n1 = 1L * sh.t1 * sh.t1, n2 = 1L * sh.t2 * sh.t2;
  int w = const_weil_ratio(n1, in.eta1, n2, in.eta2, s);
  out.C4 = ExactValue::integer(2).pow(two) * out.C3 * ExactValue::sign_value(w * a * a1 * a2) *
           const_C_rr(in.rp, in.rpp, f);
  return out;
}

struct IdentityPoint {
  ExactValue lhs, rhs;
  bool pass = false;
};

/// 2^{-1-beta} C4 |bold Gamma| against C_{eta1,eta2}.
inline IdentityPoint identity_2_8_point(const Identity28Input& in, const ResidueParam& f,
                                        TwoPowerReading reading = TwoPowerReading::printed) {
  SplitShape sh(in.rp, in.rpp);
  auto c = const_C3_C4(in, f, reading);
  IdentityPoint p;
  p.lhs = ExactValue::integer(2).pow(-1 - in.beta) * c.C4 *
          ExactValue::from_rational(Rational(bold_gamma_count(sh.t2, f)));
  p.rhs = ExactValue::sign_value(
      const_C_even(in.eta1, in.eta2, in.rp, in.rpp, in.sgn_cd2, in.eta(), sgn_minus_one(f)));
  p.pass = p.lhs == p.rhs;
  return p;
}

/// Signs attached to (r', r'') in the descent argument.
struct CFamily {
  int c = 1, c_sharp = 1, c_endo = 1, C_34 = 1, U = 1;
  int b = 0;
};

inline int b_of(int rp, int rpp) { return (rpp > 0 || (rpp == 0 && mod2(rp) == 0)) ? 0 : 1; }

/// For b = 1 the constant C(r', r'', w', w'') is the index-swapped form of the
/// b = 0 display: r'' becomes |r''|, w'' becomes w', the twist is (-1)^{(d-d2)r''}.
inline CFamily const_c_family(int rp, int rpp, int sgn_cd1, int sgn_cd2, int d2, long n, int d, int s,
                              int sharp_sign) {
  require(rp >= 0, "const_c_family: r' must be non-negative");
  CFamily f;
  long a = std::abs(rpp);
  f.b = b_of(rp, rpp);
  f.c = neg_one_pow(n + rpp) * sign_pow(s, (1L * rp * rp - rp) / 2 + (a * a - a) / 2);
  bool low_row = (rpp > 0 && rpp <= rp) || (rpp == 0 && mod2(rp) == 0);
  if (low_row) {
    f.c_sharp = 1;
    f.c_endo = 1;
  } else if (rp < rpp) {
    f.c_sharp = sgn_cd2;
    f.c_endo = sgn_cd2;
  } else if (-rp <= rpp) {
    f.c_sharp = sharp_sign;
    f.c_endo = neg_one_pow(1L * d * rpp);
  } else {
    f.c_sharp = sharp_sign * sgn_cd1;
    f.c_endo = neg_one_pow(1L * d * rpp) * sgn_cd1;
  }
  int rplus = r_plus_minus(rp, rpp).first;
  if (f.b == 0) {
    if (rpp <= rp)
      f.C_34 = neg_one_pow(1L * d2 * rpp) * sign_pow(s, (rplus - rpp - 1) / 2);
    else
      f.C_34 = neg_one_pow(1L * d2 * rpp) * sign_pow(s, rp + rpp + 1) * sgn_cd2;
  } else {
    int tw = neg_one_pow(1L * (d - d2) * rpp);
    if (a <= rp)
      f.C_34 = tw * sign_pow(s, (rplus - a - 1) / 2);
    else
      f.C_34 = tw * sign_pow(s, rp + a + 1) * sgn_cd1;
  }
  f.U = U_sign(rp, rpp, s);
  return f;
}

inline CFamily const_c_family(int rp, int rpp, const WeylClassB& w1, const WeylClassB& w2, int d2, long n, int d,
                              const ResidueParam& rf, int sharp_sign) {
  return const_c_family(rp, rpp, sgn_CD(w1), sgn_CD(w2), d2, n, d, sgn_minus_one(rf), sharp_sign);
}

struct Chain349Input {
  QuadrupleGamma g;
  int sgn_cd1 = 1, sgn_cd2 = 1;
  int s = 1;
  int d = 0, d2 = 0;
};

struct Chain349Point {
  int chain = 1, target = 1;        // c c(w) C (-1)^{d2 r''} and (-1)^n U
  int U = 1, U12 = 1;               // U and U1 U2
  int C = 1;                        // product of the three chains
  bool pass() const { return chain == target && U == U12 && C == 1; }
};

inline Chain349Point chain_3_4_9_point(const Chain349Input& in) {
  require(in.d2 >= 0 && in.d2 <= in.d, "chain_3_4_9_point: need 0 <= d2 <= d");
  auto chain = [&](int rp, int rpp, int c1, int c2, long n, int d, int d2) {
    auto f = const_c_family(rp, rpp, c1, c2, d2, n, d, in.s, 1);
    return f.c * f.c_endo * f.C_34 * neg_one_pow(1L * d2 * rpp);
  };
  Chain349Point p;
  long n = in.g.n();
  const auto& g = in.g;
  p.chain = chain(g.rp, g.rpp, in.sgn_cd1, in.sgn_cd2, n, in.d, in.d2);
  p.U = U_sign(g.rp, g.rpp, in.s);
  p.target = neg_one_pow(n) * p.U;
  auto sp = split_quadruple(g);
  p.U12 = U_sign(sp.g1.rp, sp.g1.rpp, in.s) * U_sign(sp.g2.rp, sp.g2.rpp, in.s);
  p.C = p.chain * chain(sp.g1.rp, sp.g1.rpp, in.sgn_cd1, 1, sp.n1, 0, 0) *
        chain(sp.g2.rp, sp.g2.rpp, in.sgn_cd2, 1, sp.n2, 0, 0);
  return p;
}

struct Lemma26Point {
  int factorwise = 1, closed = 1;
};

/// Factor-wise product of the local transfer factors against d kappa^{L2} kappa^U.
inline Lemma26Point lemma_2_6_check(const SplitShape& sh, const GammaVector& g, const EVector& e, const UVector& u,
                                    const LPair& L, int sgn_cd1, int sgn_cd2, const SquareClass& eta,
                                    const ResidueParam& f) {
  require(static_cast<int>(e.size()) == sh.R, "lemma_2_6_check: e must have length R");
  Lemma26Point p;
  p.factorwise = kappa_U(u) * sign_pow(sgn_cd2, eta.val_parity);
  int s = sgn_minus_one(f);
  for (int j = 1; j <= sh.t2; ++j) {
    int l = 2 * j, l2 = L.l2[j - 1];
    int v = eta.unit_sign * sgn_cd1 * sgn_cd2 * e[l2 - 1] * legendre(g.low[l - 2] - g.low[l - 1], f);
    if (sh.B() == 1) v *= s * gamma_sgn(g, l2, f);
    for (int h = l + 1; h <= sh.R; ++h) v *= gamma_sgn(g, h, f);
    p.factorwise *= v;
  }
  SquareClass eta2L = eta_of_L2(g, L, sh, sgn_cd2, f);
  p.closed = const_d(sh, g, sgn_cd1, sgn_cd2, eta, eta2L, f) * kappa_L2(e, L) * kappa_U(u);
  return p;
}

}  // namespace endo
