#include "d4fs/bigint.hpp"

namespace d4fs {

BigInt binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  BigInt v = 1;
  for (int i = 1; i <= r; ++i) {
    v *= n - r + i;
    v /= i;
  }
  return v;
}

}  // namespace d4fs
