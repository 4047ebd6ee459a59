#include "tamecheck/numeric.hpp"

#include "tamecheck/errors.hpp"

namespace tamecheck {

int ceil_log2(const BigInt& x) {
  if (x < 1) throw NonPositive("ceil_log2: argument must be >= 1");
  if (x == 1) return 0;
  // msb() is the index of the highest set bit; exact powers of two land on it.
  unsigned bit = boost::multiprecision::msb(x);
  BigInt pow2 = BigInt(1) << bit;
  return pow2 == x ? static_cast<int>(bit) : static_cast<int>(bit) + 1;
}

BigInt ipow(const BigInt& x, unsigned long e) {
  return boost::multiprecision::pow(x, e);
}

}  // namespace tamecheck
