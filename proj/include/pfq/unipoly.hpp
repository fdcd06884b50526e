#pragma once

#include <string>
#include <vector>

#include "pfq/arith.hpp"

namespace pfq {

// Univariate polynomial over QQ, ascending coefficients. Small helper for
// Hilbert polynomials and chi-in-twist identities.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPoly constant(const Rational& v) { return UniPoly({v}); }
  // t + a
  static UniPoly linear_shift(const Rational& a) { return UniPoly({a, Rational(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Rational& coeff(std::size_t i) const {
    static const Rational kZero(0);
    return i < c_.size() ? c_[i] : kZero;
  }
  const Rational& leading() const { return c_.back(); }

  Rational eval(const Rational& t) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
  }
  Rational eval(long t) const { return eval(Rational(t)); }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPoly operator*(const UniPoly& o) const {
    if (c_.empty() || o.c_.empty()) return UniPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(r));
  }
  UniPoly operator*(const Rational& s) const {
    std::vector<Rational> r = c_;
    for (auto& v : r) v *= s;
    return UniPoly(std::move(r));
  }
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  std::string to_string(const std::string& var = "t") const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const Rational& v = c_[i];
      if (sgn(v) == 0) continue;
      if (!out.empty()) out += sgn(v) > 0 ? " + " : " - ";
      else if (sgn(v) < 0) out += "-";
      Rational a = abs(v);
      if (i == 0 || a != 1) out += a.get_str();
      if (i > 0) {
        if (a != 1) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

}  // namespace pfq
