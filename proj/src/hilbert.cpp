#include "pfq/hilbert.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "pfq/linalg.hpp"
#include "pfq/rng.hpp"

namespace pfq {

namespace {

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return std::lexicographical_compare(a.e.begin(), a.e.end(), b.e.begin(), b.e.end());
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& kept : out) {
      if (kept.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  gens = std::move(out);
}

struct KeyHash {
  std::size_t operator()(const std::vector<Monomial>& v) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    MonomialHash mh;
    for (const auto& m : v) {
      h ^= mh(m);
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

using Memo = std::unordered_map<std::vector<Monomial>, std::vector<Int>, KeyHash>;

std::vector<Int> mul_series(const std::vector<Int>& a, int shift, const std::vector<Int>& b);

// numerator recursion; gens assumed minimal and sorted
std::vector<Int> hn_rec(std::vector<Monomial> gens, int nvars, Memo& memo) {
  if (gens.empty()) return {Int(1)};
  if (gens[0].deg == 0) return {Int(0)};  // 1 is in the ideal
  auto it = memo.find(gens);
  if (it != memo.end()) return it->second;

  bool all_pure = true;
  for (const auto& g : gens) {
    int support = 0;
    for (int i = 0; i < nvars; ++i) support += g.e[i] > 0;
    if (support > 1) {
      all_pure = false;
      break;
    }
  }
  std::vector<Int> result;
  if (all_pure) {
    // product of (1 - z^deg): minimal pure powers involve distinct variables
    result = {Int(1)};
    for (const auto& g : gens) {
      std::vector<Int> factor(g.deg + 1, Int(0));
      factor[0] = 1;
      factor[g.deg] = -1;
      result = mul_series(result, 0, factor);
    }
  } else {
    // pivot: variable occurring in the most mixed generators
    std::vector<int> count(nvars, 0);
    for (const auto& g : gens) {
      int support = 0;
      for (int i = 0; i < nvars; ++i) support += g.e[i] > 0;
      if (support <= 1) continue;
      for (int i = 0; i < nvars; ++i)
        if (g.e[i] > 0) ++count[i];
    }
    int pivot = static_cast<int>(std::max_element(count.begin(), count.begin() + nvars) - count.begin());

    std::vector<Monomial> plus;  // I + (x_pivot)
    plus.push_back(Monomial::var(pivot));
    for (const auto& g : gens)
      if (g.e[pivot] == 0) plus.push_back(g);
    minimalize(plus);

    std::vector<Monomial> colon;  // I : x_pivot
    for (auto g : gens) {
      if (g.e[pivot] > 0) {
        g.e[pivot] -= 1;
        g.deg -= 1;
      }
      colon.push_back(g);
    }
    minimalize(colon);

    std::vector<Int> a = hn_rec(std::move(plus), nvars, memo);
    std::vector<Int> b = hn_rec(std::move(colon), nvars, memo);
    result = std::move(a);
    result.resize(std::max(result.size(), b.size() + 1), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i) result[i + 1] += b[i];  // + z * HN(I : x)
  }
  while (!result.empty() && result.back() == 0) result.pop_back();
  memo.emplace(std::move(gens), result);
  return result;
}

std::vector<Int> mul_series(const std::vector<Int>& a, int shift, const std::vector<Int>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Int> r(a.size() + b.size() - 1 + shift, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j + shift] += a[i] * b[j];
  return r;
}

// true Hilbert function value from the numerator
Int hf_from_numerator(const std::vector<Int>& hn, int nvars, int t) {
  Int acc(0);
  for (std::size_t k = 0; k < hn.size(); ++k) {
    long m = t - static_cast<long>(k);
    if (m < 0 || hn[k] == 0) continue;
    acc += hn[k] * binomial_ext(m + nvars - 1, static_cast<std::uint32_t>(nvars - 1));
  }
  return acc;
}

// Hilbert polynomial from the numerator: sum_k hn[k] * C(t - k + n - 1, n - 1)
// with the binomial expanded as a polynomial in t
UniPoly hp_from_numerator(const std::vector<Int>& hn, int nvars) {
  UniPoly total;
  Int fact(1);
  for (int i = 2; i <= nvars - 1; ++i) fact *= i;
  for (std::size_t k = 0; k < hn.size(); ++k) {
    if (hn[k] == 0) continue;
    UniPoly prod = UniPoly::constant(Rational(1));
    for (int i = 0; i <= nvars - 2; ++i) {
      long c = static_cast<long>(nvars) - 1 - static_cast<long>(k) - i;
      prod = prod * UniPoly::linear_shift(Rational(c));
    }
    prod = prod * make_ratio(hn[k], fact);
    total += prod;
  }
  return total;
}

std::vector<Monomial> leading_monomials(const std::vector<PolyP>& gens, const GroebnerOptions& opts) {
  if (gens.empty()) throw Error("hilbert: empty generator list");
  for (const auto& g : gens)
    if (!g.is_homogeneous()) throw Error("hilbert: inhomogeneous generator");
  std::vector<PolyP> nonzero;
  for (const auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(g);
  if (nonzero.empty()) return {};
  GroebnerBasis gb = buchberger(nonzero, Order{OrderKind::kDegrevlex, gens[0].ctx().size()}, opts);
  if (gb.truncated)
    throw Error("hilbert: degree-capped Groebner basis is truncated; invariants would be unreliable");
  std::vector<Monomial> lts;
  for (const auto& g : gb.gens) lts.push_back(g.leading().m);
  minimalize(lts);
  return lts;
}

}  // namespace

std::vector<Int> hilbert_numerator(std::vector<Monomial> gens, int nvars) {
  minimalize(gens);
  Memo memo;
  return hn_rec(std::move(gens), nvars, memo);
}

Int count_standard_monomials(const std::vector<Monomial>& gens, int nvars, int t) {
  Int count(0);
  for (const auto& m : monomials_of_degree(nvars, t)) {
    bool divisible = false;
    for (const auto& g : gens) {
      if (g.divides(m)) {
        divisible = true;
        break;
      }
    }
    if (!divisible) ++count;
  }
  return count;
}

HilbertSummary hilbert_data(const std::vector<PolyP>& gens, int table_limit,
                            const GroebnerOptions& opts) {
  const int nv = gens.empty() ? 0 : gens[0].ctx().size();
  HilbertSummary out;
  out.lt_gens = leading_monomials(gens, opts);
  std::vector<Int> hn = hilbert_numerator(out.lt_gens, nv);
  out.hp = hp_from_numerator(hn, nv);

  // HF agrees with hp from deg(HN) - nvars + 1 on; locate the first
  // agreement point by scanning down
  int bound = std::max(0, static_cast<int>(hn.size()) - 1 - nv + 1);
  const int hard_cap = 512;
  if (bound > hard_cap) throw Error("hilbert: stabilization bound exceeds hard cap (inconclusive)");
  int table_top = std::max(table_limit, bound + 2);
  for (int t = 0; t <= table_top; ++t) out.hf.push_back(hf_from_numerator(hn, nv, t));
  int stab = bound;
  while (stab > 0 && Rational(out.hf[stab - 1]) == out.hp.eval(stab - 1)) --stab;
  out.stabilization_degree = stab;
  for (int t = bound; t <= table_top; ++t) {
    if (Rational(out.hf[t]) != out.hp.eval(t))
      throw Error("hilbert: table disagrees with polynomial past the stabilization bound");
  }
  return out;
}

Int hilbert_function(const std::vector<PolyP>& gens, int t, const GroebnerOptions& opts) {
  if (t < 0) throw Error("hilbert_function: negative degree");
  const int nv = gens.empty() ? 0 : gens[0].ctx().size();
  std::vector<Monomial> lts = leading_monomials(gens, opts);
  return hf_from_numerator(hilbert_numerator(lts, nv), nv, t);
}

UniPoly hilbert_polynomial(const std::vector<PolyP>& gens, const GroebnerOptions& opts) {
  return hilbert_data(gens, 0, opts).hp;
}

CurveInvariants curve_invariants(const std::vector<PolyP>& gens, const GroebnerOptions& opts) {
  UniPoly hp = hilbert_polynomial(gens, opts);
  CurveInvariants inv;
  if (hp.is_zero()) {
    inv.dim = -1;
    inv.degree = 0;
    inv.arithmetic_genus = 0;
    return inv;
  }
  if (hp.degree() > 1)
    throw Error("not a curve: Hilbert polynomial has degree " + std::to_string(hp.degree()));
  inv.dim = hp.degree();
  Rational lead = hp.leading();
  if (lead.get_den() != 1) throw Error("hilbert polynomial has non-integral leading coefficient");
  inv.degree = lead.get_num();
  Rational pa = Rational(1) - hp.eval(0L);
  if (pa.get_den() != 1) throw Error("arithmetic genus is non-integral");
  inv.arithmetic_genus = pa.get_num();
  return inv;
}

SliceResult slice_degree(const std::vector<PolyP>& gens, int scheme_dim, std::uint64_t seed,
                         const GroebnerOptions& opts) {
  if (gens.empty()) throw Error("slice_degree: empty generator list");
  const GF gf = gens[0].dom();
  const VarContext& ctx = gens[0].ctx();
  const int nv = ctx.size();
  if (scheme_dim < 0 || scheme_dim >= nv)
    throw Error("slice_degree: scheme dimension out of range");
  const int keep = nv - scheme_dim;

  std::vector<std::string> kept_names(ctx.names().begin(), ctx.names().begin() + keep);
  VarContext sliced_ctx(kept_names);

  SliceResult res;
  for (int attempt = 0; attempt < 10; ++attempt) {
    Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(attempt));
    res.seeds_used.push_back(static_cast<std::uint64_t>(attempt));
    std::vector<PolyP> images;
    for (int i = 0; i < keep; ++i) images.push_back(PolyP::variable(sliced_ctx, gf, i));
    for (int i = keep; i < nv; ++i) {
      PolyP lin = PolyP::zero(sliced_ctx, gf, Order{OrderKind::kDegrevlex, keep});
      for (int j = 0; j < keep; ++j) {
        std::uint64_t c = rng.uniform(gf.modulus());
        if (c) lin = lin + PolyP::from_term(sliced_ctx, gf, Monomial::var(j), c);
      }
      images.push_back(lin);
    }
    std::vector<PolyP> sliced;
    for (const auto& g : gens) {
      PolyP s = g.substitute(images);
      if (!s.is_zero()) sliced.push_back(s);
    }
    if (sliced.empty()) {
      ++res.retries;
      continue;
    }
    UniPoly hp = hilbert_polynomial(sliced, opts);
    if (!hp.is_zero() && hp.degree() == 0 && hp.eval(0L).get_den() == 1) {
      res.degree = hp.eval(0L).get_num();
      return res;
    }
    ++res.retries;
  }
  throw Error("slice_degree: degenerate slicing, retries exhausted");
}

}  // namespace pfq
