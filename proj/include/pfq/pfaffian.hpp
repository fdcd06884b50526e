#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "pfq/linalg.hpp"
#include "pfq/poly.hpp"
#include "pfq/rng.hpp"

namespace pfq {

// Skew-symmetric matrix of polynomials; only the strict upper triangle is
// stored, the rest is implied. Diagonal is identically zero.
template <class D>
class SkewPolyMatrix {
 public:
  SkewPolyMatrix(int n, VarContext ctx, D dom, Order ord = Order{OrderKind::kDegrevlex, 0})
      : n_(n), ctx_(std::move(ctx)), dom_(std::move(dom)), ord_(ord) {
    if (n < 1 || n > 16) throw Error("skew matrix size out of supported range [1,16]");
    ord_.nvars = ctx_.size();
  }

  int size() const { return n_; }
  const VarContext& ctx() const { return ctx_; }
  const D& dom() const { return dom_; }
  const Order& order() const { return ord_; }

  void set(int i, int j, Polynomial<D> p) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) throw Error("skew matrix index out of range");
    if (i == j) throw Error("skew matrix diagonal must stay zero");
    if (i > j) {
      set(j, i, -std::move(p));
      return;
    }
    if (p.is_zero())
      upper_.erase({i, j});
    else
      upper_.insert_or_assign({i, j}, std::move(p));
  }

  // signed entry (i, j); zero polynomial for diagonal and unset pairs
  Polynomial<D> entry(int i, int j) const {
    if (i == j) return Polynomial<D>::zero(ctx_, dom_, ord_);
    bool flip = i > j;
    auto it = upper_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == upper_.end()) return Polynomial<D>::zero(ctx_, dom_, ord_);
    return flip ? -it->second : it->second;
  }

  const std::map<std::pair<int, int>, Polynomial<D>>& upper() const { return upper_; }

  bool entries_linear() const {
    for (const auto& [ij, p] : upper_)
      if (!p.is_homogeneous() || p.total_degree() > 1) return false;
    return true;
  }

  // Pf under the first-row expansion convention: partners of the lowest
  // surviving index are taken in increasing order with signs +,-,+,...;
  // the standard symplectic block matrix gets Pfaffian +1.
  Polynomial<D> pfaffian() const {
    if (n_ % 2 != 0) throw Error("pfaffian: odd size, use odd_pfaffian_family");
    Memo memo;
    return pf_rec(full_mask(), memo);
  }

  // Pfaffian with rows/columns i and j removed
  Polynomial<D> sub_pfaffian(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j) throw Error("sub_pfaffian: bad index pair");
    if (n_ % 2 != 0) throw Error("sub_pfaffian: defined for even size");
    Memo memo;
    return pf_rec(full_mask() & ~(1u << i) & ~(1u << j), memo);
  }

  // For odd n = 2m+1: entry r is the Pfaffian of the matrix with row and
  // column r removed. One memo serves all n expansions; they share minors
  // heavily.
  std::vector<Polynomial<D>> odd_pfaffian_family() const {
    if (n_ % 2 == 0) throw Error("odd_pfaffian_family: even size, use pfaffian");
    Memo memo;
    std::vector<Polynomial<D>> out;
    out.reserve(n_);
    for (int r = 0; r < n_; ++r) out.push_back(pf_rec(full_mask() & ~(1u << r), memo));
    return out;
  }

  // Pfaffian of the principal submatrix on the index set `mask`.
  Polynomial<D> pfaffian_of_mask(std::uint32_t mask) const {
    Memo memo;
    return pf_rec(mask, memo);
  }

 private:
  using Memo = std::unordered_map<std::uint32_t, Polynomial<D>>;

  // The memo lives on the caller's stack, so concurrent reads of one matrix
  // stay race-free.
  Polynomial<D> pf_rec(std::uint32_t mask, Memo& memo) const {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    Polynomial<D> result = Polynomial<D>::zero(ctx_, dom_, ord_);
    if (mask == 0) {
      result = Polynomial<D>::constant(ctx_, dom_, dom_.one(), ord_);
    } else {
      int i0 = 0;
      while (!(mask & (1u << i0))) ++i0;
      std::uint32_t rest = mask & ~(1u << i0);
      int sign = 1;
      for (int j = i0 + 1; j < n_; ++j) {
        if (!(rest & (1u << j))) continue;
        auto itu = upper_.find({i0, j});
        if (itu != upper_.end()) {
          Polynomial<D> minor = pf_rec(rest & ~(1u << j), memo);
          Polynomial<D> contrib = itu->second * minor;
          result = sign > 0 ? result + contrib : result - contrib;
        }
        sign = -sign;
      }
    }
    memo.emplace(mask, result);
    return result;
  }

  std::uint32_t full_mask() const { return (n_ >= 32) ? ~0u : ((1u << n_) - 1); }

  int n_;
  VarContext ctx_;
  D dom_;
  Order ord_;
  std::map<std::pair<int, int>, Polynomial<D>> upper_;
};

using SkewQ = SkewPolyMatrix<QQ>;
using SkewP = SkewPolyMatrix<GF>;

inline SkewP reduce_mod(const SkewQ& m, const GF& gf) {
  SkewP r(m.size(), m.ctx(), gf, m.order());
  for (const auto& [ij, p] : m.upper()) r.set(ij.first, ij.second, reduce_mod(p, gf));
  return r;
}

// Pfaffian of a numeric skew matrix over GF(p), same convention and memo
// scheme as the symbolic version.
std::uint64_t pfaffian_numeric(const Matrix<GF>& m);

// Determinant over GF(p) by elimination (independent of the Pfaffian path).
std::uint64_t determinant_numeric(const Matrix<GF>& m);

struct KernelClassification {
  int rank = 0;
  int kernel_dim = 0;
  // normalized Pluecker vector of the 2-dimensional kernel, C(n,2) entries
  // in row-major (i<j) order; present only when kernel_dim == 2
  std::optional<std::vector<std::uint64_t>> pluecker;
  bool grassmann_ok = false;
};

// Evaluate M at a projective point over GF(p), classify rank and kernel,
// and when the kernel is a 2-plane return its Pluecker vector together with
// the check that all 4x4 sub-Pfaffian (Grassmann) relations vanish.
KernelClassification classify_kernel(const SkewP& m, const std::vector<std::uint64_t>& point);

// `count` distinct projective points on {F = 0} over GF(p), found by random
// affine slicing of all but the last coordinate and a full scan of the last
// one. Deterministic in (p, seed).
std::vector<std::vector<std::uint64_t>> sample_points_on_quartic(const PolyP& f, int count,
                                                                 std::uint64_t seed);

// Exhaustive projective zero enumeration; test oracle for tiny fields.
std::vector<std::vector<std::uint64_t>> enumerate_projective_zeros(const PolyP& f);

// Rank over GF(p) of the matrix whose rows are the coefficient vectors of
// x_k * Pf_ij(M) in the monomial basis of degree-(n/2) forms; for the 8x8
// pencil in 5 variables this is the 140 x 70 differential of the Pfaffian
// map.
int jacobian_span_rank(const SkewP& m);

}  // namespace pfq
