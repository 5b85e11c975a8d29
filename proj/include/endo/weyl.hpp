#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "endo/partitions.hpp"

namespace endo {

using BigInt = boost::multiprecision::cpp_int;

/// Conjugacy class of the hyperoctahedral group W_N, labelled by (alpha, beta):
/// alpha collects positive cycles, beta negative cycles.
struct WeylClassB {
  Partition alpha;
  Partition beta;

  int N() const { return alpha.size() + beta.size(); }
  bool cuspidal() const { return alpha.empty(); }

  friend bool operator==(const WeylClassB&, const WeylClassB&) = default;
  friend auto operator<=>(const WeylClassB&, const WeylClassB&) = default;
};

/// Conjugacy class of the symmetric group on d letters.
struct WeylClassA {
  Partition pi;

  int d() const { return pi.size(); }

  friend bool operator==(const WeylClassA&, const WeylClassA&) = default;
};

inline void to_json(nlohmann::json& j, const WeylClassB& c) {
  j = nlohmann::json{{"alpha", c.alpha}, {"beta", c.beta}};
}
inline void from_json(const nlohmann::json& j, WeylClassB& c) {
  c.alpha = j.at("alpha").get<Partition>();
  c.beta = j.at("beta").get<Partition>();
}
inline void to_json(nlohmann::json& j, const WeylClassA& c) { j = nlohmann::json{{"pi", c.pi}}; }
inline void from_json(const nlohmann::json& j, WeylClassA& c) { c.pi = j.at("pi").get<Partition>(); }

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt order_W(int N) { return (BigInt(1) << N) * factorial(N); }

namespace detail {
inline BigInt centralizer_part_B(const Partition& p) {
  BigInt z = 1;
  for (auto [k, m] : p.multiplicities()) {
    for (int i = 0; i < m; ++i) z *= 2 * k;
    z *= factorial(m);
  }
  return z;
}
}  // namespace detail

/// |O(w)| = 2^N N! / z with z the hyperoctahedral centralizer order.
inline BigInt class_size_B(const WeylClassB& c) {
  BigInt z = detail::centralizer_part_B(c.alpha) * detail::centralizer_part_B(c.beta);
  return order_W(c.N()) / z;
}

inline BigInt class_size_A(const WeylClassA& c) {
  BigInt z = 1;
  for (auto [k, m] : c.pi.multiplicities()) {
    for (int i = 0; i < m; ++i) z *= k;
    z *= factorial(m);
  }
  return factorial(c.d()) / z;
}

inline int sgn_CD(const WeylClassB& c) { return c.beta.length() % 2 == 0 ? 1 : -1; }

constexpr int kWeylClassCap = 20;

inline std::vector<WeylClassB> cuspidal_classes_B(int N) {
  require(N >= 0, "cuspidal_classes_B: N must be non-negative");
  if (N > kWeylClassCap) throw resource_limit("cuspidal_classes_B: N exceeds cap 20");
  std::vector<WeylClassB> out;
  for (auto& b : partitions_of(N)) out.push_back({Partition{}, b});
  return out;
}

inline std::vector<WeylClassA> u_cuspidal_classes_A(int d) {
  require(d >= 0, "u_cuspidal_classes_A: d must be non-negative");
  if (d > kWeylClassCap) throw resource_limit("u_cuspidal_classes_A: d exceeds cap 20");
  std::vector<WeylClassA> out;
  for (auto& p : odd_partitions_of(d)) out.push_back({p});
  return out;
}

/// All classes (alpha, beta) of W_N.
inline std::vector<WeylClassB> all_classes_B(int N) {
  std::vector<WeylClassB> out;
  for (int a = N; a >= 0; --a)
    for (auto& al : partitions_of(a))
      for (auto& be : partitions_of(N - a)) out.push_back({al, be});
  return out;
}

/// Signed permutation of {0..N-1}: i maps to sign[i] * (perm[i]+1).
struct SignedPerm {
  std::vector<int> perm;
  std::vector<int> sign;

  SignedPerm compose(const SignedPerm& o) const {  // (this o o)(i) = this(o(i))
    SignedPerm r{std::vector<int>(perm.size()), std::vector<int>(perm.size())};
    for (std::size_t i = 0; i < perm.size(); ++i) {
      r.perm[i] = perm[o.perm[i]];
      r.sign[i] = o.sign[i] * sign[o.perm[i]];
    }
    return r;
  }

  SignedPerm inverse() const {
    SignedPerm r{std::vector<int>(perm.size()), std::vector<int>(perm.size())};
    for (std::size_t i = 0; i < perm.size(); ++i) {
      r.perm[perm[i]] = static_cast<int>(i);
      r.sign[perm[i]] = sign[i];
    }
    return r;
  }

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;
};

inline std::vector<SignedPerm> all_signed_perms(int N) {
  std::vector<SignedPerm> out;
  std::vector<int> p(N);
  for (int i = 0; i < N; ++i) p[i] = i;
  do {
    for (int mask = 0; mask < (1 << N); ++mask) {
      std::vector<int> s(N);
      for (int i = 0; i < N; ++i) s[i] = (mask >> i & 1) ? -1 : 1;
      out.push_back({p, s});
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Signed cycle type: each cycle goes to alpha or beta by the product of its signs.
inline WeylClassB cycle_type(const SignedPerm& w) {
  int N = static_cast<int>(w.perm.size());
  std::vector<bool> seen(N, false);
  std::vector<int> al, be;
  for (int i = 0; i < N; ++i) {
    if (seen[i]) continue;
    int len = 0, s = 1, j = i;
    while (!seen[j]) {
      seen[j] = true;
      s *= w.sign[j];
      j = w.perm[j];
      ++len;
    }
    (s == 1 ? al : be).push_back(len);
  }
  return {Partition(al), Partition(be)};
}

}  // namespace endo
