#include "pfq/pfaffian.hpp"

#include <algorithm>

namespace pfq {

namespace {

std::uint64_t pf_mask(const Matrix<GF>& m, std::uint32_t mask,
                      std::unordered_map<std::uint32_t, std::uint64_t>& memo) {
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  const GF& gf = m.dom();
  std::uint64_t result = 0;
  if (mask == 0) {
    result = gf.one();
  } else {
    int i0 = 0;
    while (!(mask & (1u << i0))) ++i0;
    std::uint32_t rest = mask & ~(1u << i0);
    int sign = 1;
    for (int j = i0 + 1; j < m.rows(); ++j) {
      if (!(rest & (1u << j))) continue;
      std::uint64_t a = m.at(i0, j);
      if (a != 0) {
        std::uint64_t contrib = gf.mul(a, pf_mask(m, rest & ~(1u << j), memo));
        result = sign > 0 ? gf.add(result, contrib) : gf.sub(result, contrib);
      }
      sign = -sign;
    }
  }
  memo.emplace(mask, result);
  return result;
}

}  // namespace

std::uint64_t pfaffian_numeric(const Matrix<GF>& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0) throw Error("pfaffian_numeric: even square matrix required");
  if (m.rows() > 16) throw Error("pfaffian_numeric: size out of range");
  std::unordered_map<std::uint32_t, std::uint64_t> memo;
  return pf_mask(m, (1u << m.rows()) - 1, memo);
}

std::uint64_t determinant_numeric(const Matrix<GF>& m) {
  if (m.rows() != m.cols()) throw Error("determinant: square matrix required");
  const GF& gf = m.dom();
  Matrix<GF> w = m;
  std::uint64_t det = gf.one();
  for (int c = 0; c < w.cols(); ++c) {
    int piv = -1;
    for (int i = c; i < w.rows(); ++i) {
      if (w.at(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < w.cols(); ++j) std::swap(w.at(piv, j), w.at(c, j));
      det = gf.neg(det);
    }
    det = gf.mul(det, w.at(c, c));
    std::uint64_t inv = gf.inv(w.at(c, c));
    for (int i = c + 1; i < w.rows(); ++i) {
      std::uint64_t f = gf.mul(w.at(i, c), inv);
      if (f == 0) continue;
      for (int j = c; j < w.cols(); ++j) w.at(i, j) = gf.sub(w.at(i, j), gf.mul(f, w.at(c, j)));
    }
  }
  return det;
}

KernelClassification classify_kernel(const SkewP& m, const std::vector<std::uint64_t>& point) {
  const GF& gf = m.dom();
  const int n = m.size();
  Matrix<GF> num(n, n, gf);
  for (const auto& [ij, p] : m.upper()) {
    std::uint64_t v = p.evaluate(point);
    num.at(ij.first, ij.second) = v;
    num.at(ij.second, ij.first) = gf.neg(v);
  }
  KernelClassification out;
  auto kern = kernel_basis(num);
  out.kernel_dim = static_cast<int>(kern.size());
  out.rank = n - out.kernel_dim;
  if (out.kernel_dim != 2) return out;

  const auto& v = kern[0];
  const auto& w = kern[1];
  std::vector<std::uint64_t> pl;
  pl.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pl.push_back(gf.sub(gf.mul(v[i], w[j]), gf.mul(v[j], w[i])));
  // projective normalization: first nonzero entry becomes 1
  for (auto& x : pl) {
    if (x != 0) {
      std::uint64_t inv = gf.inv(x);
      for (auto& y : pl) y = gf.mul(y, inv);
      break;
    }
  }
  // Grassmann relations: all 4x4 sub-Pfaffians of the rank-2 skew form vanish
  auto at = [&](int i, int j) -> std::uint64_t {
    if (i == j) return 0;
    bool flip = i > j;
    if (flip) std::swap(i, j);
    std::uint64_t val = pl[static_cast<std::size_t>(i) * (2 * n - i - 1) / 2 + (j - i - 1)];
    return flip ? gf.neg(val) : val;
  };
  out.grassmann_ok = true;
  for (int i = 0; i < n && out.grassmann_ok; ++i)
    for (int j = i + 1; j < n && out.grassmann_ok; ++j)
      for (int k = j + 1; k < n && out.grassmann_ok; ++k)
        for (int l = k + 1; l < n; ++l) {
          std::uint64_t rel = gf.add(gf.sub(gf.mul(at(i, j), at(k, l)), gf.mul(at(i, k), at(j, l))),
                                     gf.mul(at(i, l), at(j, k)));
          if (rel != 0) {
            out.grassmann_ok = false;
            break;
          }
        }
  out.pluecker = std::move(pl);
  return out;
}

std::vector<std::vector<std::uint64_t>> sample_points_on_quartic(const PolyP& f, int count,
                                                                 std::uint64_t seed) {
  const GF& gf = f.dom();
  const std::uint64_t p = gf.modulus();
  const int n = f.ctx().size();
  if (n < 2) throw Error("sampling needs at least 2 variables");
  if (p % 2 == 0) throw Error("sampling requires an odd prime");

  // split off the last variable: f = sum_j c_j(x_1..x_{n-1}) * x_n^j
  int dmax = f.total_degree() < 0 ? 0 : f.total_degree();
  std::vector<PolyP> coeff_polys;
  for (int j = 0; j <= dmax; ++j) coeff_polys.push_back(PolyP::zero(f.ctx(), gf, f.order()));
  for (const auto& t : f.terms()) {
    Monomial m = t.m;
    int j = m.e[n - 1];
    m.deg -= m.e[n - 1];
    m.e[n - 1] = 0;
    coeff_polys[j] = coeff_polys[j] + PolyP::from_term(f.ctx(), gf, m, t.c, f.order());
  }

  Rng rng(seed);
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<std::vector<std::uint64_t>> out;
  const long budget = 256 + 64L * count;
  for (long attempt = 0; attempt < budget && static_cast<int>(out.size()) < count; ++attempt) {
    std::vector<std::uint64_t> point(n, 0);
    for (int i = 0; i + 1 < n; ++i) point[i] = rng.uniform(p);
    std::vector<std::uint64_t> u(coeff_polys.size());
    for (std::size_t j = 0; j < coeff_polys.size(); ++j) u[j] = coeff_polys[j].evaluate(point);
    for (std::uint64_t t = 0; t < p && static_cast<int>(out.size()) < count; ++t) {
      // Horner in the last coordinate
      std::uint64_t val = 0;
      for (std::size_t j = u.size(); j-- > 0;) val = gf.add(gf.mul(val, t), u[j]);
      if (val != 0) continue;
      point[n - 1] = t;
      std::vector<std::uint64_t> rep = point;
      int first = -1;
      for (int i = 0; i < n; ++i) {
        if (rep[i] != 0) {
          first = i;
          break;
        }
      }
      if (first < 0) continue;  // the zero vector is not a projective point
      std::uint64_t inv = gf.inv(rep[first]);
      for (auto& x : rep) x = gf.mul(x, inv);
      if (seen.insert(rep).second) out.push_back(std::move(rep));
    }
  }
  if (static_cast<int>(out.size()) < count)
    throw Error("sampling failure: exhausted retries with " + std::to_string(out.size()) + "/" +
                std::to_string(count) + " points");
  return out;
}

std::vector<std::vector<std::uint64_t>> enumerate_projective_zeros(const PolyP& f) {
  const GF& gf = f.dom();
  const std::uint64_t p = gf.modulus();
  const int n = f.ctx().size();
  if (p > 31) throw Error("exhaustive enumeration is for tiny fields (p <= 31)");
  std::vector<std::vector<std::uint64_t>> out;
  // representatives: first nonzero coordinate equals 1
  for (int lead = 0; lead < n; ++lead) {
    std::vector<std::uint64_t> point(n, 0);
    point[lead] = 1;
    int tail = n - lead - 1;
    std::vector<std::uint64_t> idx(tail, 0);
    while (true) {
      for (int i = 0; i < tail; ++i) point[lead + 1 + i] = idx[i];
      if (f.evaluate(point) == 0) out.push_back(point);
      int carry = tail - 1;
      while (carry >= 0 && ++idx[carry] == p) idx[carry--] = 0;
      if (carry < 0) break;
    }
  }
  return out;
}

int jacobian_span_rank(const SkewP& m) {
  const GF& gf = m.dom();
  const int n = m.size();
  if (n % 2 != 0) throw Error("jacobian_span_rank: even matrix size required");
  if (!m.entries_linear()) throw Error("jacobian_span_rank: entries must be linear forms");
  const int nv = m.ctx().size();
  const int d = n / 2;  // degree of the Pfaffian; its partials are degree d-1 cubics times x_k

  auto basis = monomials_of_degree(nv, d);
  std::unordered_map<Monomial, int, MonomialHash> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));

  Matrix<GF> rows(n * (n - 1) / 2 * nv, static_cast<int>(basis.size()), gf);
  int r = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      PolyP pfij = m.sub_pfaffian(i, j);
      for (int k = 0; k < nv; ++k) {
        for (const auto& t : pfij.terms()) {
          Monomial mono = t.m.mul(Monomial::var(k));
          rows.at(r, index.at(mono)) = t.c;
        }
        ++r;
      }
    }
  }
  return rank(rows);
}

}  // namespace pfq
