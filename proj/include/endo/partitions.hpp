#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "endo/error.hpp"
#include "json.hpp"

namespace endo {

/// A partition stored as weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;

  /// Builds from any list of non-negative parts; zeros are dropped and the
  /// rest sorted non-increasing.
  Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) require(p >= 0, "partition parts must be non-negative");
    parts_.erase(std::remove(parts_.begin(), parts_.end(), 0), parts_.end());
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }

  /// S(p): sum of the parts.
  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  /// l(p): number of parts.
  int length() const { return static_cast<int>(parts_.size()); }

  int mult(int k) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
  }

  bool empty() const { return parts_.empty(); }

  std::map<int, int> multiplicities() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
  }

  /// Distinct even parts (the Jord_bp set).
  std::vector<int> even_distinct() const {
    std::set<int> s;
    for (int p : parts_)
      if (p % 2 == 0) s.insert(p);
    return {s.rbegin(), s.rend()};
  }

  bool all_odd() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 1; });
  }

  /// Multiplies every part by f.
  Partition scaled(int f) const {
    std::vector<int> v = parts_;
    for (int& p : v) p *= f;
    return Partition(v);
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + "]";
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

inline void to_json(nlohmann::json& j, const Partition& p) { j = p.parts(); }
inline void from_json(const nlohmann::json& j, Partition& p) {
  p = Partition(j.get<std::vector<int>>());
}

/// Multiset union.
inline Partition union_of(const Partition& a, const Partition& b) {
  std::vector<int> v = a.parts();
  v.insert(v.end(), b.parts().begin(), b.parts().end());
  return Partition(v);
}

/// Multiset difference a - b, or false when b is not contained in a.
inline bool difference(const Partition& a, const Partition& b, Partition& out) {
  auto ma = a.multiplicities();
  for (auto [k, m] : b.multiplicities()) {
    if (ma[k] < m) return false;
    ma[k] -= m;
  }
  std::vector<int> v;
  for (auto [k, m] : ma)
    for (int i = 0; i < m; ++i) v.push_back(k);
  out = Partition(v);
  return true;
}

inline bool odd_parts_even_mult(const Partition& p) {
  for (auto [k, m] : p.multiplicities())
    if (k % 2 == 1 && m % 2 == 1) return false;
  return true;
}

inline bool is_symplectic(const Partition& p, int two_n) {
  require(two_n >= 0 && two_n % 2 == 0, "is_symplectic: two_n must be even and non-negative");
  return p.size() == two_n && odd_parts_even_mult(p);
}

namespace detail {
inline void gen_partitions(int rest, int max_part, std::vector<int>& cur,
                           const std::function<bool(int)>& allow,
                           std::vector<Partition>& out) {
  if (rest == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int k = std::min(rest, max_part); k >= 1; --k) {
    if (!allow(k)) continue;
    cur.push_back(k);
    gen_partitions(rest - k, k, cur, allow, out);
    cur.pop_back();
  }
}
}  // namespace detail

/// All partitions of n in lexicographic-descending order.
inline std::vector<Partition> partitions_of(int n) {
  require(n >= 0, "partitions_of: n must be non-negative");
  std::vector<Partition> out;
  std::vector<int> cur;
  detail::gen_partitions(n, n, cur, [](int) { return true; }, out);
  return out;
}

/// Partitions of n with all parts odd, lexicographic-descending.
inline std::vector<Partition> odd_partitions_of(int n) {
  require(n >= 0, "odd_partitions_of: n must be non-negative");
  std::vector<Partition> out;
  std::vector<int> cur;
  detail::gen_partitions(n, n, cur, [](int k) { return k % 2 == 1; }, out);
  return out;
}

constexpr int kSymplecticCap = 40;

inline std::vector<Partition> enumerate_symplectic(int two_n) {
  require(two_n >= 0 && two_n % 2 == 0, "enumerate_symplectic: two_n must be even and non-negative");
  if (two_n > kSymplecticCap)
    throw resource_limit("enumerate_symplectic: two_n exceeds cap " + std::to_string(kSymplecticCap));
  std::vector<Partition> out;
  for (auto& p : partitions_of(two_n))
    if (odd_parts_even_mult(p)) out.push_back(std::move(p));
  return out;
}

/// All sub-multisets of p, each once, in lexicographic-descending order.
inline std::vector<Partition> sub_multisets(const Partition& p) {
  auto m = p.multiplicities();
  std::vector<std::pair<int, int>> items(m.rbegin(), m.rend());
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == items.size()) {
      out.emplace_back(cur);
      return;
    }
    auto [k, mk] = items[i];
    for (int c = mk; c >= 0; --c) {
      for (int t = 0; t < c; ++t) cur.push_back(k);
      rec(i + 1);
      for (int t = 0; t < c; ++t) cur.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace endo
