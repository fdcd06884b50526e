#include "pfq/arith.hpp"

namespace pfq {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic Miller-Rabin base set for 64-bit inputs
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t field_inv(std::uint64_t a, std::uint64_t p) {
  if (!is_prime_u64(p)) throw Error("invalid modulus: " + std::to_string(p) + " is not prime");
  a %= p;
  if (a == 0) throw Error("division by zero: no inverse of 0 mod " + std::to_string(p));
  // extended Euclid on signed 128-bit accumulators
  __int128 t = 0, new_t = 1;
  __int128 r = static_cast<__int128>(p), new_r = static_cast<__int128>(a);
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<__int128>(p);
  return static_cast<std::uint64_t>(t);
}

Int binomial_ext(const Int& n, std::uint32_t k) {
  Int num = 1;
  for (std::uint32_t i = 0; i < k; ++i) num *= n - static_cast<long>(i);
  Int den = 1;
  for (std::uint32_t i = 2; i <= k; ++i) den *= static_cast<long>(i);
  return num / den;  // falling factorial is always divisible by k!
}

Int binomial_ext(long n, std::uint32_t k) { return binomial_ext(Int(n), k); }

}  // namespace pfq
