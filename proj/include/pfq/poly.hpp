#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pfq/arith.hpp"
#include "pfq/monomial.hpp"

namespace pfq {

// Ordered list of variable names, shared by every polynomial that mentions
// them. Compared by content so independently parsed contexts interoperate.
class VarContext {
 public:
  VarContext() : data_(std::make_shared<Data>()) {}
  explicit VarContext(std::vector<std::string> names) {
    auto d = std::make_shared<Data>();
    d->names = std::move(names);
    if (d->names.size() > static_cast<std::size_t>(kMaxVars))
      throw Error("too many variables (max " + std::to_string(kMaxVars) + ")");
    for (std::size_t i = 0; i < d->names.size(); ++i) {
      if (!d->index.emplace(d->names[i], static_cast<int>(i)).second)
        throw Error("duplicate variable name: " + d->names[i]);
    }
    data_ = std::move(d);
  }

  // x1..xn
  static VarContext numbered(int n, const std::string& prefix = "x") {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
    return VarContext(std::move(names));
  }
  // Pluecker names xij for 0 <= i < j < n
  static VarContext pluecker(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) names.push_back("x" + std::to_string(i) + std::to_string(j));
    return VarContext(std::move(names));
  }

  int size() const { return static_cast<int>(data_->names.size()); }
  const std::string& name(int i) const { return data_->names[i]; }
  const std::vector<std::string>& names() const { return data_->names; }
  std::optional<int> find(const std::string& name) const {
    auto it = data_->index.find(name);
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
  }

  bool operator==(const VarContext& o) const {
    return data_ == o.data_ || data_->names == o.data_->names;
  }
  bool operator!=(const VarContext& o) const { return !(*this == o); }

 private:
  struct Data {
    std::vector<std::string> names;
    std::unordered_map<std::string, int> index;
  };
  std::shared_ptr<const Data> data_;
};

// Sparse multivariate polynomial over coefficient domain D (QQ or GF).
// Terms are kept sorted descending in the active monomial order with no zero
// coefficients, so equality is representational equality.
template <class D>
class Polynomial {
 public:
  using Elem = typename D::Elem;
  struct Term {
    Monomial m;
    Elem c;
  };

  Polynomial(VarContext ctx, D dom, Order ord)
      : ctx_(std::move(ctx)), dom_(std::move(dom)), ord_(ord) {
    ord_.nvars = ctx_.size();
  }
  Polynomial(VarContext ctx, D dom)
      : Polynomial(std::move(ctx), std::move(dom), Order{OrderKind::kDegrevlex, 0}) {}

  static Polynomial zero(const VarContext& ctx, const D& dom,
                         Order ord = Order{OrderKind::kDegrevlex, 0}) {
    return Polynomial(ctx, dom, ord);
  }
  static Polynomial constant(const VarContext& ctx, const D& dom, const Elem& c,
                             Order ord = Order{OrderKind::kDegrevlex, 0}) {
    Polynomial p(ctx, dom, ord);
    if (!dom.is_zero(c)) p.terms_.push_back({Monomial::one(), c});
    return p;
  }
  static Polynomial variable(const VarContext& ctx, const D& dom, int i,
                             Order ord = Order{OrderKind::kDegrevlex, 0}) {
    if (i < 0 || i >= ctx.size()) throw Error("variable index out of range");
    Polynomial p(ctx, dom, ord);
    p.terms_.push_back({Monomial::var(i), dom.one()});
    return p;
  }
  static Polynomial from_term(const VarContext& ctx, const D& dom, const Monomial& m,
                              const Elem& c, Order ord = Order{OrderKind::kDegrevlex, 0}) {
    Polynomial p(ctx, dom, ord);
    if (!dom.is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }

  const VarContext& ctx() const { return ctx_; }
  const D& dom() const { return dom_; }
  const Order& order() const { return ord_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const Term& leading() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.front();
  }
  void drop_leading() {
    if (!terms_.empty()) terms_.erase(terms_.begin());
  }
  Polynomial monic() const {
    if (terms_.empty()) return *this;
    return scaled(dom_.inv(terms_.front().c));
  }

  // max total degree; -1 for the zero polynomial
  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.m.deg));
    return d;
  }
  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.m.deg != terms_.front().m.deg) return false;
    return true;
  }
  int homogeneous_degree() const {
    if (!is_homogeneous()) throw Error("polynomial is not homogeneous");
    return total_degree();
  }

  Polynomial with_order(Order ord) const {
    ord.nvars = ctx_.size();
    Polynomial r(ctx_, dom_, ord);
    r.terms_ = terms_;
    std::sort(r.terms_.begin(), r.terms_.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.m, b.m); });
    return r;
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.c = dom_.neg(t.c);
    return r;
  }

  Polynomial operator+(const Polynomial& o) const { return merged(o, false); }
  Polynomial operator-(const Polynomial& o) const { return merged(o, true); }

  Polynomial operator*(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r(ctx_, dom_, ord_);
    if (is_zero() || o.is_zero()) return r;
    std::unordered_map<Monomial, Elem, MonomialHash> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
      for (const auto& b : o.terms_) {
        Monomial m = a.m.mul(b.m);
        Elem prod = dom_.mul(a.c, b.c);
        auto [it, inserted] = acc.emplace(m, prod);
        if (!inserted) it->second = dom_.add(it->second, prod);
      }
    }
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!dom_.is_zero(c)) r.terms_.push_back({m, c});
    r.sort_terms();
    return r;
  }

  Polynomial scaled(const Elem& s) const {
    Polynomial r(ctx_, dom_, ord_);
    if (dom_.is_zero(s)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.m, dom_.mul(t.c, s)});
    return r;
  }

  // this * (c * m)
  Polynomial times_term(const Elem& c, const Monomial& m) const {
    Polynomial r(ctx_, dom_, ord_);
    if (dom_.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.m.mul(m), dom_.mul(t.c, c)});
    return r;
  }

  // in-place this -= (c * m) * g ; the workhorse of polynomial reduction
  void axpy_sub(const Elem& c, const Monomial& m, const Polynomial& g) {
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        out.push_back(std::move(terms_[i++]));
        continue;
      }
      Monomial gm = g.terms_[j].m.mul(m);
      if (i == terms_.size()) {
        Elem v = dom_.neg(dom_.mul(c, g.terms_[j].c));
        if (!dom_.is_zero(v)) out.push_back({gm, v});
        ++j;
        continue;
      }
      int cmp = ord_.compare(terms_[i].m, gm);
      if (cmp > 0) {
        out.push_back(std::move(terms_[i++]));
      } else if (cmp < 0) {
        Elem v = dom_.neg(dom_.mul(c, g.terms_[j].c));
        if (!dom_.is_zero(v)) out.push_back({gm, v});
        ++j;
      } else {
        Elem v = dom_.sub(terms_[i].c, dom_.mul(c, g.terms_[j].c));
        if (!dom_.is_zero(v)) out.push_back({gm, v});
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
  }

  bool operator==(const Polynomial& o) const {
    if (ctx_ != o.ctx_ || dom_ != o.dom_) return false;
    if (ord_ != o.ord_) return *this == o.with_order(ord_);
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].m != o.terms_[i].m) return false;
      if (dom_.is_zero(dom_.sub(terms_[i].c, o.terms_[i].c)) == false) return false;
    }
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial differentiate(int var) const {
    if (var < 0 || var >= ctx_.size()) throw Error("differentiate: variable index out of range");
    Polynomial r(ctx_, dom_, ord_);
    for (const auto& t : terms_) {
      std::uint16_t e = t.m.e[var];
      if (e == 0) continue;
      Monomial m = t.m;
      m.e[var] = static_cast<std::uint16_t>(e - 1);
      m.deg -= 1;
      Elem c = dom_.mul(t.c, dom_.from_int(static_cast<long>(e)));
      if (!dom_.is_zero(c)) r.terms_.push_back({m, c});
    }
    r.sort_terms();
    return r;
  }

  Elem evaluate(const std::vector<Elem>& point) const {
    if (static_cast<int>(point.size()) != ctx_.size())
      throw Error("evaluate: point length " + std::to_string(point.size()) + " != " +
                  std::to_string(ctx_.size()) + " variables");
    Elem acc = dom_.zero();
    for (const auto& t : terms_) {
      Elem v = t.c;
      for (int i = 0; i < ctx_.size(); ++i) {
        for (std::uint16_t k = 0; k < t.m.e[i]; ++k) v = dom_.mul(v, point[i]);
      }
      acc = dom_.add(acc, v);
    }
    return acc;
  }

  // image under x_i -> images[i]; all images share a (possibly different)
  // context and the same domain
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != ctx_.size())
      throw Error("substitute: need one image per variable");
    const VarContext& tc = images.empty() ? ctx_ : images[0].ctx();
    Polynomial acc = Polynomial::zero(tc, dom_, ord_);
    std::vector<std::vector<Polynomial>> powers(ctx_.size());
    auto power = [&](int var, std::uint16_t k) -> const Polynomial& {
      auto& cache = powers[var];
      if (cache.empty()) cache.push_back(Polynomial::constant(tc, dom_, dom_.one(), ord_));
      while (cache.size() <= k) cache.push_back(cache.back() * images[var]);
      return cache[k];
    };
    for (const auto& t : terms_) {
      Polynomial prod = Polynomial::constant(tc, dom_, t.c, ord_);
      for (int i = 0; i < ctx_.size(); ++i)
        if (t.m.e[i]) prod = prod * power(i, t.m.e[i]);
      acc = acc + prod;
    }
    return acc;
  }

  // coefficient-wise image in another domain (e.g. QQ -> GF reduction)
  template <class D2, class Fn>
  Polynomial<D2> map_coeffs(const D2& dom2, Fn&& fn) const {
    Polynomial<D2> r(ctx_, dom2, ord_);
    std::vector<typename Polynomial<D2>::Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) {
      auto c = fn(t.c);
      if (!dom2.is_zero(c)) ts.push_back({t.m, c});
    }
    r.set_sorted_terms(std::move(ts));
    return r;
  }

  // canonical form: descending degrevlex, '-' folded into coefficients
  std::string to_string() const {
    const Polynomial* self = this;
    Polynomial canon(ctx_, dom_);
    if (ord_.kind != OrderKind::kDegrevlex) {
      canon = with_order(Order{OrderKind::kDegrevlex, ctx_.size()});
      self = &canon;
    }
    if (self->terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : self->terms_) {
      std::string cs = dom_.to_string(t.c);
      bool negative = !cs.empty() && cs[0] == '-';
      if (negative) cs.erase(0, 1);
      if (first) {
        if (negative) out += "-";
        first = false;
      } else {
        out += negative ? " - " : " + ";
      }
      bool unit = cs == "1";
      if (!unit || t.m.is_one()) out += cs;
      bool any = false;
      for (int i = 0; i < ctx_.size(); ++i) {
        if (!t.m.e[i]) continue;
        if (any || !unit) out += "*";
        out += ctx_.name(i);
        if (t.m.e[i] > 1) out += "^" + std::to_string(t.m.e[i]);
        any = true;
      }
    }
    return out;
  }

  void set_sorted_terms(std::vector<Term> ts) {
    terms_ = std::move(ts);
    sort_terms();
  }

  void check_compatible(const Polynomial& o) const {
    if (ctx_ != o.ctx_) throw Error("context mismatch between polynomials");
    if (dom_ != o.dom_) throw Error("coefficient field mismatch between polynomials");
    if (ord_ != o.ord_) throw Error("monomial order mismatch between polynomials");
  }

 private:
  Polynomial merged(const Polynomial& o, bool subtract) const {
    check_compatible(o);
    Polynomial r(ctx_, dom_, ord_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (i == terms_.size()) {
        Elem v = subtract ? dom_.neg(o.terms_[j].c) : o.terms_[j].c;
        r.terms_.push_back({o.terms_[j].m, v});
        ++j;
      } else if (j == o.terms_.size()) {
        r.terms_.push_back(terms_[i]);
        ++i;
      } else {
        int cmp = ord_.compare(terms_[i].m, o.terms_[j].m);
        if (cmp > 0) {
          r.terms_.push_back(terms_[i++]);
        } else if (cmp < 0) {
          Elem v = subtract ? dom_.neg(o.terms_[j].c) : o.terms_[j].c;
          r.terms_.push_back({o.terms_[j].m, v});
          ++j;
        } else {
          Elem v = subtract ? dom_.sub(terms_[i].c, o.terms_[j].c)
                            : dom_.add(terms_[i].c, o.terms_[j].c);
          if (!dom_.is_zero(v)) r.terms_.push_back({terms_[i].m, v});
          ++i;
          ++j;
        }
      }
    }
    return r;
  }

  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return ord_.greater(a.m, b.m); });
  }

  VarContext ctx_;
  D dom_;
  Order ord_;
  std::vector<Term> terms_;
};

using PolyQ = Polynomial<QQ>;
using PolyP = Polynomial<GF>;

inline PolyP reduce_mod(const PolyQ& f, const GF& gf) {
  return f.map_coeffs(gf, [&](const Rational& c) { return gf.from_rational(c); });
}

// --- parsing ---------------------------------------------------------------
//
// expr   := [sign] term (sign term)*
// term   := coeff ['*' factor ('*' factor)*] | factor ('*' factor)*
// coeff  := uint ['/' uint]
// factor := var ['^' uint]
//
// Whitespace-insensitive; canonical output round-trips through this grammar.
template <class D>
Polynomial<D> parse_poly(const std::string& text, const VarContext& ctx, const D& dom,
                         Order ord = Order{OrderKind::kDegrevlex, 0}) {
  ord.nvars = ctx.size();
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto parse_uint = [&](const char* what) -> Int {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError(std::string("expected ") + what, start);
    return Int(text.substr(start, pos - start));
  };

  skip_ws();
  if (pos == text.size()) throw ParseError("empty polynomial", 0);

  Polynomial<D> acc = Polynomial<D>::zero(ctx, dom, ord);
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) {
      if (first) throw ParseError("empty polynomial", pos);
      break;
    }
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", pos);
    }
    skip_ws();
    if (pos == text.size()) throw ParseError("dangling sign", pos);

    // one term
    Rational coeff(sign);
    Monomial mono;
    bool saw_anything = false;
    bool expect_factor = true;
    while (expect_factor) {
      skip_ws();
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        Int num = parse_uint("coefficient");
        Int den = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          den = parse_uint("denominator");
          if (den == 0) throw ParseError("zero denominator", pos);
        }
        coeff *= make_ratio(num, den);
      } else {
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
          ++pos;
        if (pos == start) throw ParseError("expected coefficient or variable", pos);
        std::string name = text.substr(start, pos - start);
        auto idx = ctx.find(name);
        if (!idx) throw ParseError("unknown variable '" + name + "'", start);
        std::uint32_t exp = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          Int e = parse_uint("exponent");
          if (e < 0 || e > 60000) throw ParseError("malformed exponent", pos);
          exp = static_cast<std::uint32_t>(e.get_ui());
        }
        if (static_cast<std::uint32_t>(mono.e[*idx]) + exp > 60000)
          throw ParseError("malformed exponent (accumulated power too large)", pos);
        mono.e[*idx] = static_cast<std::uint16_t>(mono.e[*idx] + exp);
        mono.deg += exp;
      }
      saw_anything = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
      } else {
        expect_factor = false;
      }
    }
    if (!saw_anything) throw ParseError("empty term", pos);
    acc = acc + Polynomial<D>::from_term(ctx, dom, mono, dom.from_rational(coeff), ord);
    first = false;
  }
  return acc;
}

}  // namespace pfq
