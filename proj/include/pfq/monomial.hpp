#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>

#include "pfq/arith.hpp"

namespace pfq {

// Every supported workload lives in at most 28 variables (the Pluecker
// coordinates of an 8x8 skew matrix), so exponent vectors are fixed-width
// inline arrays.
inline constexpr int kMaxVars = 28;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  static Monomial one() { return Monomial{}; }
  static Monomial var(int i, std::uint16_t k = 1) {
    Monomial m;
    m.e[i] = k;
    m.deg = k;
    return m;
  }

  bool is_one() const { return deg == 0; }

  Monomial mul(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
    r.deg = deg + o.deg;
    return r;
  }
  bool divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  // this / o, caller guarantees divisibility
  Monomial div(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] - o.e[i]);
    r.deg = deg - o.deg;
    return r;
  }
  Monomial lcm(const Monomial& o) const {
    Monomial r;
    std::uint32_t d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.e[i] = e[i] > o.e[i] ? e[i] : o.e[i];
      d += r.e[i];
    }
    r.deg = d;
    return r;
  }
  bool coprime(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (int i = 0; i < kMaxVars; ++i) {
      h ^= m.e[i];
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

enum class OrderKind { kDegrevlex, kLex };

struct Order {
  OrderKind kind = OrderKind::kDegrevlex;
  int nvars = 0;

  // -1 if a < b, 0 if equal, +1 if a > b
  int compare(const Monomial& a, const Monomial& b) const {
    if (kind == OrderKind::kDegrevlex) {
      if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
      for (int i = nvars - 1; i >= 0; --i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
      }
      return 0;
    }
    for (int i = 0; i < nvars; ++i) {
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    }
    return 0;
  }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool operator==(const Order& o) const { return kind == o.kind && nvars == o.nvars; }
  bool operator!=(const Order& o) const { return !(*this == o); }

  std::string name() const { return kind == OrderKind::kDegrevlex ? "degrevlex" : "lex"; }
};

}  // namespace pfq
