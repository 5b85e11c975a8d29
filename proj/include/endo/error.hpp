#pragma once

#include <stdexcept>
#include <string>

namespace endo {

// Raised when an argument violates an operation's precondition.
class invalid_argument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a request exceeds an enumeration cap.
class resource_limit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw invalid_argument(msg);
}

// Mathematical floor of a/b for b > 0.
inline long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline long mod2(long a) { return ((a % 2) + 2) % 2; }

// (-1)^k for any integer k.
inline int neg_one_pow(long k) { return mod2(k) == 0 ? 1 : -1; }

// x^k for a sign x.
inline int sign_pow(int x, long k) { return (x == 1 || mod2(k) == 0) ? 1 : -1; }

}  // namespace endo
