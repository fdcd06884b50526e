#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace pfq {

// Arbitrary-precision integer / rational. gmp keeps rationals canonical
// (lowest terms, positive denominator) through all arithmetic.
using Int = mpz_class;
using Rational = mpq_class;

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"), pos(position) {}
};

bool is_prime_u64(std::uint64_t n);

// Multiplicative inverse of a mod p, extended Euclid. Throws on a == 0 mod p
// or composite p.
std::uint64_t field_inv(std::uint64_t a, std::uint64_t p);

// Polynomial-extended binomial coefficient n(n-1)...(n-k+1)/k!, any integer n.
Int binomial_ext(const Int& n, std::uint32_t k);
Int binomial_ext(long n, std::uint32_t k);

// canonicalized fraction; the raw mpq_class(num, den) constructor does not
// reduce to lowest terms
inline Rational make_ratio(const Int& num, const Int& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}
inline Rational make_ratio(long num, long den) { return make_ratio(Int(num), Int(den)); }

inline long to_long_checked(const Int& v, const char* what) {
  if (!v.fits_slong_p()) throw Error(std::string(what) + ": value out of long range");
  return v.get_si();
}

// Coefficient domain GF(p), residues in [0, p). p is validated prime at
// construction; products go through 128-bit intermediates so any 63-bit
// modulus is safe.
class GF {
 public:
  using Elem = std::uint64_t;

  explicit GF(std::uint64_t p) : p_(p) {
    if (p < 2 || !is_prime_u64(p)) throw Error("invalid modulus: " + std::to_string(p) + " is not prime");
  }

  std::uint64_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  bool is_zero(Elem a) const { return a == 0; }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    if (s >= p_ || s < a) s -= p_;
    return s;
  }
  Elem sub(Elem a, Elem b) const { return b <= a ? a - b : a + (p_ - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Elem inv(Elem a) const { return field_inv(a % p_, p_); }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += static_cast<long>(p_);
    return static_cast<Elem>(r);
  }
  Elem from_int(const Int& v) const {
    Int r = v % Int(static_cast<unsigned long>(p_));
    if (r < 0) r += Int(static_cast<unsigned long>(p_));
    return r.get_ui();
  }
  // Reduces num/den mod p; throws if p divides den.
  Elem from_rational(const Rational& q) const {
    Elem n = from_int(Int(q.get_num()));
    Elem d = from_int(Int(q.get_den()));
    if (d == 0) throw Error("denominator divisible by modulus " + std::to_string(p_));
    return div(n, d);
  }

  std::string to_string(Elem a) const { return std::to_string(a); }

  bool operator==(const GF& o) const { return p_ == o.p_; }
  bool operator!=(const GF& o) const { return p_ != o.p_; }

 private:
  std::uint64_t p_;
};

// Coefficient domain QQ (exact rationals). Stateless.
struct QQ {
  using Elem = Rational;

  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw Error("division by zero in QQ");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  Elem from_int(long v) const { return Rational(v); }
  Elem from_int(const Int& v) const { return Rational(v); }
  Elem from_rational(const Rational& q) const { return q; }

  std::string to_string(const Elem& a) const { return a.get_str(); }

  bool operator==(const QQ&) const { return true; }
  bool operator!=(const QQ&) const { return false; }
};

// Default working primes; rank over GF(p) lower-bounds rank over QQ for
// integer data, and two primes give independent confirmations.
inline constexpr std::uint64_t kDefaultPrime = 31991;
inline constexpr std::uint64_t kSecondPrime = 104729;

}  // namespace pfq
