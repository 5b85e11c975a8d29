#pragma once

#include <array>
#include <string>

#include "endo/error.hpp"
#include "json.hpp"

namespace endo {

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Residue-field cardinality q of the base field.
class ResidueParam {
 public:
  explicit ResidueParam(long q) : q_(q) {
    require(q >= 5 && is_prime(q), "ResidueParam: q must be a prime >= 5");
  }
  long q() const { return q_; }

  /// Smallest quadratic non-residue; realizes the non-trivial unit class.
  long nonresidue() const {
    for (long x = 2; x < q_; ++x)
      if (euler(x) == q_ - 1) return x;
    return -1;
  }

  long reduce(long x) const { return ((x % q_) + q_) % q_; }

  long euler(long x) const {
    long base = reduce(x), e = (q_ - 1) / 2, r = 1;
    while (e > 0) {
      if (e & 1) r = r * base % q_;
      base = base * base % q_;
      e >>= 1;
    }
    return r;
  }

 private:
  long q_;
};

/// Legendre symbol of x modulo q, read from Euler's criterion.
inline int legendre(long x, const ResidueParam& rp) {
  require(rp.reduce(x) != 0, "legendre: x is divisible by q");
  return rp.euler(x) == 1 ? 1 : -1;
}

inline int sgn_minus_one(const ResidueParam& rp) { return rp.q() % 4 == 1 ? 1 : -1; }

/// Element of F^x / F^x2: valuation parity and the sign of the unit part.
struct SquareClass {
  int val_parity = 0;
  int unit_sign = 1;

  SquareClass() = default;
  SquareClass(int v, int s) : val_parity(static_cast<int>(mod2(v))), unit_sign(s) {
    require(s == 1 || s == -1, "SquareClass: unit sign must be +1 or -1");
  }

  static SquareClass one() { return {0, 1}; }
  static SquareClass xi() { return {0, -1}; }
  static SquareClass pi() { return {1, 1}; }
  static SquareClass xi_pi() { return {1, -1}; }

  bool trivial() const { return val_parity == 0 && unit_sign == 1; }

  std::string name() const {
    if (val_parity == 0) return unit_sign == 1 ? "1" : "xi";
    return unit_sign == 1 ? "pi" : "xi.pi";
  }

  static SquareClass parse(const std::string& s) {
    if (s == "1") return one();
    if (s == "xi") return xi();
    if (s == "pi") return pi();
    if (s == "xi.pi") return xi_pi();
    throw invalid_argument("SquareClass: unknown name '" + s + "'");
  }

  friend bool operator==(const SquareClass&, const SquareClass&) = default;
  friend auto operator<=>(const SquareClass&, const SquareClass&) = default;
};

inline SquareClass sq_mul(const SquareClass& a, const SquareClass& b) {
  return {a.val_parity + b.val_parity, a.unit_sign * b.unit_sign};
}

/// The four square classes in the order 1, xi, pi, xi.pi.
inline std::array<SquareClass, 4> all_square_classes() {
  return {SquareClass::one(), SquareClass::xi(), SquareClass::pi(), SquareClass::xi_pi()};
}

inline void to_json(nlohmann::json& j, const SquareClass& c) { j = c.name(); }
inline void from_json(const nlohmann::json& j, SquareClass& c) {
  c = SquareClass::parse(j.get<std::string>());
}

}  // namespace endo
