#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "endo/partitions.hpp"

namespace endo {

/// Signs indexed by the distinct even parts of a partition.
using EpsMap = std::map<int, int>;

/// Unipotent parameter with quadratic s: (lambda+, eps+, lambda-, eps-).
struct UnipQuadParam {
  Partition lam_plus;
  Partition lam_minus;
  EpsMap eps_plus;
  EpsMap eps_minus;
  int n = 0;

  Partition lambda() const { return union_of(lam_plus, lam_minus); }

  void validate() const {
    require(odd_parts_even_mult(lam_plus) && odd_parts_even_mult(lam_minus),
            "UnipQuadParam: lambda+ and lambda- must be symplectic");
    require(lam_plus.size() + lam_minus.size() == 2 * n, "UnipQuadParam: S(lambda+)+S(lambda-) != 2n");
    auto check = [](const Partition& p, const EpsMap& e) {
      auto ev = p.even_distinct();
      require(e.size() == ev.size(), "UnipQuadParam: eps domain differs from Jord_bp");
      for (int k : ev) {
        auto it = e.find(k);
        require(it != e.end() && (it->second == 1 || it->second == -1),
                "UnipQuadParam: eps must be a sign on every even part");
      }
    };
    check(lam_plus, eps_plus);
    check(lam_minus, eps_minus);
  }

  friend bool operator==(const UnipQuadParam&, const UnipQuadParam&) = default;
  friend auto operator<=>(const UnipQuadParam&, const UnipQuadParam&) = default;
};

/// A splitting lambda = part_plus U part_minus carried by an involution.
struct InvolutionSplit {
  Partition part_plus;
  Partition part_minus;

  Partition whole() const { return union_of(part_plus, part_minus); }
  bool trivial() const { return part_minus.empty(); }

  friend bool operator==(const InvolutionSplit&, const InvolutionSplit&) = default;
};

/// Joint eigenspace decomposition of two commuting involutions s and h.
/// The first index is the s-eigenvalue, the second the h-eigenvalue.
struct TripleCells {
  Partition pp, pm, mp, mm;

  InvolutionSplit s_split() const { return {union_of(pp, pm), union_of(mp, mm)}; }
  InvolutionSplit h_split() const { return {union_of(pp, mp), union_of(pm, mm)}; }
  Partition lambda() const { return union_of(s_split().part_plus, s_split().part_minus); }

  void validate() const {
    for (const Partition* c : {&pp, &pm, &mp, &mm})
      require(odd_parts_even_mult(*c), "TripleCells: every joint eigenspace must be symplectic");
  }

  friend bool operator==(const TripleCells&, const TripleCells&) = default;
};

/// A triple (lambda, s, h) with the joint decomposition that certifies s and h commute.
struct Triple {
  Partition lambda;
  InvolutionSplit s;
  InvolutionSplit h;
  TripleCells cells;

  static Triple from_cells(const TripleCells& c) {
    c.validate();
    return {c.lambda(), c.s_split(), c.h_split(), c};
  }

  void validate() const {
    cells.validate();
    require(s.whole() == lambda && h.whole() == lambda, "Triple: s and h must split the same lambda");
    require(cells.s_split() == s && cells.h_split() == h, "Triple: cells incompatible with s and h");
  }

  friend bool operator==(const Triple&, const Triple&) = default;
};

inline std::vector<std::pair<int, int>> d_of_n(int n) {
  require(n >= 0, "d_of_n: n must be non-negative");
  std::vector<std::pair<int, int>> out;
  for (int k = 0; k <= n; ++k) out.emplace_back(k, n - k);
  return out;
}

inline Triple assemble_triple(const UnipQuadParam& t1, const UnipQuadParam& t2, std::pair<int, int> pair) {
  require(t1.lam_plus.size() + t1.lam_minus.size() == 2 * pair.first,
          "assemble_triple: S(lambda_1) != 2 n1");
  require(t2.lam_plus.size() + t2.lam_minus.size() == 2 * pair.second,
          "assemble_triple: S(lambda_2) != 2 n2");
  return Triple::from_cells({t1.lam_plus, t2.lam_plus, t1.lam_minus, t2.lam_minus});
}

inline Triple involution_swap(const Triple& t) {
  t.validate();
  TripleCells c{t.cells.pp, t.cells.mp, t.cells.pm, t.cells.mm};
  return {t.lambda, t.h, t.s, c};
}

/// eps(h) = prod over even parts i of eps(i)^(copies of i on the minus side of h),
/// taken inside each s-eigenspace.
inline int eval_character(const EpsMap& eps_plus, const EpsMap& eps_minus, const TripleCells& h) {
  h.validate();
  auto ev = [](const EpsMap& eps, const Partition& whole, const Partition& minus) {
    require(eps.size() == whole.even_distinct().size(), "eval_character: eps domain differs from Jord_bp");
    int v = 1;
    for (auto [k, m] : minus.multiplicities()) {
      if (k % 2 != 0) continue;
      auto it = eps.find(k);
      require(it != eps.end(), "eval_character: eps undefined on an even part");
      v *= sign_pow(it->second, m);
    }
    return v;
  };
  return ev(eps_plus, union_of(h.pp, h.pm), h.pm) * ev(eps_minus, union_of(h.mp, h.mm), h.mm);
}

inline int eval_character(const UnipQuadParam& p, const TripleCells& h) {
  require(union_of(h.pp, h.pm) == p.lam_plus && union_of(h.mp, h.mm) == p.lam_minus,
          "eval_character: h does not split the s-eigenspaces of the parameter");
  return eval_character(p.eps_plus, p.eps_minus, h);
}

/// All sign maps on the given even parts, in lexicographic order (+1 first).
inline std::vector<EpsMap> all_eps(const std::vector<int>& keys) {
  std::vector<EpsMap> out;
  std::size_t k = keys.size();
  for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
    EpsMap e;
    for (std::size_t i = 0; i < k; ++i) e[keys[i]] = (mask >> (k - 1 - i) & 1) ? -1 : 1;
    out.push_back(e);
  }
  return out;
}

/// Opaque label (lambda+, eps+, lambda-, eps-) of an irreducible constituent.
struct RepLabel {
  Partition lam_plus;
  EpsMap eps_plus;
  Partition lam_minus;
  EpsMap eps_minus;

  friend bool operator==(const RepLabel&, const RepLabel&) = default;
  friend auto operator<=>(const RepLabel&, const RepLabel&) = default;
};

/// Formal Z-linear combination of labels; zero coefficients are never stored.
class VirtualRep {
 public:
  void add(const RepLabel& l, long c) {
    long& v = terms_[l];
    v += c;
    if (v == 0) terms_.erase(l);
  }
  VirtualRep operator-() const {
    VirtualRep r;
    for (auto& [l, c] : terms_) r.terms_[l] = -c;
    return r;
  }
  friend VirtualRep operator+(const VirtualRep& a, const VirtualRep& b) {
    VirtualRep r = a;
    for (auto& [l, c] : b.terms_) r.add(l, c);
    return r;
  }
  std::size_t size() const { return terms_.size(); }
  const std::map<RepLabel, long>& terms() const { return terms_; }

 private:
  std::map<RepLabel, long> terms_;
};

inline nlohmann::json eps_json(const EpsMap& e) {
  nlohmann::json j = nlohmann::json::object();
  for (auto [k, v] : e) j[std::to_string(k)] = v;
  return j;
}

inline nlohmann::json to_json_value(const VirtualRep& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto& [l, c] : v.terms())
    arr.push_back({{"lam_plus", l.lam_plus},
                   {"eps_plus", eps_json(l.eps_plus)},
                   {"lam_minus", l.lam_minus},
                   {"eps_minus", eps_json(l.eps_minus)},
                   {"coeff", c}});
  return arr;
}

/// Pi(lambda, s, h) = sum over eps of pi(lambda, s, eps) eps(h).
inline VirtualRep pi_virtual(const Triple& t) {
  t.validate();
  const Partition& lp = t.s.part_plus;
  const Partition& lm = t.s.part_minus;
  VirtualRep out;
  for (auto& ep : all_eps(lp.even_distinct()))
    for (auto& em : all_eps(lm.even_distinct()))
      out.add({lp, ep, lm, em}, eval_character(ep, em, t.cells));
  return out;
}

/// Parameter with general-linear blocks attached to eigenvalue pairs other than +-1.
struct TemperedParam {
  UnipQuadParam core;
  std::vector<std::pair<std::string, Partition>> gl_blocks;
  int n = 0;
};

struct LeviReduction {
  std::vector<std::pair<std::string, int>> gl_factors;
  UnipQuadParam core;
  int n0 = 0;
  bool degenerate = false;
};

inline LeviReduction levi_reduction(const TemperedParam& t) {
  t.core.validate();
  LeviReduction r;
  int total = 0;
  for (auto& [b, lam] : t.gl_blocks) {
    require(!lam.empty(), "levi_reduction: empty block partition");
    r.gl_factors.emplace_back(b, lam.size());
    total += lam.size();
  }
  require(2 * t.n == 2 * t.core.n + 2 * total, "levi_reduction: 2n != 2n0 + 2 sum S(lambda_b)");
  r.core = t.core;
  r.n0 = t.core.n;
  r.degenerate = (r.n0 == 0);
  return r;
}

/// All parameters (lambda+, lambda-) with S(lambda+)+S(lambda-) = 2n and every eps.
inline std::vector<UnipQuadParam> enumerate_unip_quad(int n) {
  std::vector<UnipQuadParam> out;
  for (int a = n; a >= 0; --a)
    for (auto& lp : enumerate_symplectic(2 * a))
      for (auto& lm : enumerate_symplectic(2 * (n - a)))
        for (auto& ep : all_eps(lp.even_distinct()))
          for (auto& em : all_eps(lm.even_distinct())) out.push_back({lp, lm, ep, em, n});
  return out;
}

}  // namespace endo
