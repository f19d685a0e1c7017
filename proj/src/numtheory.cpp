#include "clgen/numtheory.hpp"

#include <algorithm>

namespace clgen {

bool is_prime(uint64_t n)
{
  if (n < 2)
    return false;
  for (uint64_t d = 2; d * d <= n; d++) {
    if (n % d == 0)
      return false;
  }
  return true;
}

std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n)
{
  std::vector<std::pair<uint64_t, unsigned>> out;
  for (uint64_t d = 2; d * d <= n; d++) {
    if (n % d != 0)
      continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      e++;
    }
    out.emplace_back(d, e);
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

std::vector<uint64_t> divisors(uint64_t n)
{
  std::vector<uint64_t> out;
  for (uint64_t d = 1; d * d <= n; d++) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d)
        out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

uint64_t ipow(uint64_t base, unsigned exp)
{
  uint64_t r = 1;
  while (exp-- > 0)
    r *= base;
  return r;
}

uint64_t gcd_u64(uint64_t a, uint64_t b)
{
  while (b != 0) {
    uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

uint64_t lcm_u64(uint64_t a, uint64_t b)
{
  return a / gcd_u64(a, b) * b;
}

uint64_t inverse_mod(uint64_t a, uint64_t m)
{
  int64_t t = 0, new_t = 1;
  int64_t r = static_cast<int64_t>(m), new_r = static_cast<int64_t>(a % m);
  while (new_r != 0) {
    int64_t quot = r / new_r;
    std::swap(t, new_t);
    new_t -= quot * t;
    std::swap(r, new_r);
    new_r -= quot * r;
  }
  if (t < 0)
    t += static_cast<int64_t>(m);
  return static_cast<uint64_t>(t);
}

}  // namespace clgen
