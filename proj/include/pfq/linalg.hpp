#pragma once

#include <optional>
#include <vector>

#include "pfq/arith.hpp"
#include "pfq/poly.hpp"

namespace pfq {

template <class D>
class Matrix {
 public:
  using Elem = typename D::Elem;

  Matrix(int rows, int cols, D dom)
      : rows_(rows), cols_(cols), dom_(std::move(dom)), a_(static_cast<std::size_t>(rows) * cols, dom_.zero()) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const D& dom() const { return dom_; }

  Elem& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Elem& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

 private:
  int rows_, cols_;
  D dom_;
  std::vector<Elem> a_;
};

// Row-reduce a private copy to echelon form; returns pivot columns.
// rref=true continues to reduced echelon form.
template <class D>
std::vector<int> eliminate(Matrix<D>& m, bool rref) {
  const D& dom = m.dom();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (!dom.is_zero(m.at(i, c))) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    auto inv = dom.inv(m.at(r, c));
    for (int j = c; j < m.cols(); ++j) m.at(r, j) = dom.mul(m.at(r, j), inv);
    int start = rref ? 0 : r + 1;
    for (int i = start; i < m.rows(); ++i) {
      if (i == r) continue;
      const auto f = m.at(i, c);
      if (dom.is_zero(f)) continue;
      for (int j = c; j < m.cols(); ++j)
        m.at(i, j) = dom.sub(m.at(i, j), dom.mul(f, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Fraction-free (Bareiss) rank of an integer matrix.
int rank_bareiss(std::vector<std::vector<Int>> m);

template <class D>
int rank(const Matrix<D>& m) {
  Matrix<D> work = m;
  return static_cast<int>(eliminate(work, false).size());
}

// rank over QQ routed through Bareiss after clearing denominators row-wise
inline int rank(const Matrix<QQ>& m) {
  std::vector<std::vector<Int>> zm(m.rows(), std::vector<Int>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    Int l = 1;
    for (int j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    for (int j = 0; j < m.cols(); ++j) {
      Rational v = m.at(i, j) * Rational(l);
      zm[i][j] = v.get_num();
    }
  }
  return rank_bareiss(std::move(zm));
}

// Basis of the right null space.
template <class D>
std::vector<std::vector<typename D::Elem>> kernel_basis(const Matrix<D>& m) {
  const D& dom = m.dom();
  Matrix<D> work = m;
  std::vector<int> pivots = eliminate(work, true);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename D::Elem>> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    std::vector<typename D::Elem> v(m.cols(), dom.zero());
    v[c] = dom.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = dom.neg(work.at(static_cast<int>(r), c));
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of A x = b, or nullopt if inconsistent.
template <class D>
std::optional<std::vector<typename D::Elem>> solve(const Matrix<D>& a,
                                                   const std::vector<typename D::Elem>& b) {
  const D& dom = a.dom();
  if (static_cast<int>(b.size()) != a.rows()) throw Error("solve: rhs length mismatch");
  Matrix<D> aug(a.rows(), a.cols() + 1, dom);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<int> pivots = eliminate(aug, true);
  for (int c : pivots)
    if (c == a.cols()) return std::nullopt;  // pivot in rhs column: inconsistent
  std::vector<typename D::Elem> x(a.cols(), dom.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), a.cols());
  return x;
}

// Monomials of total degree d in the first nvars variables, in a fixed
// deterministic order.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

// Rank of the symmetric Gram matrix of a homogeneous quadratic form.
template <class D>
int quadratic_form_rank(const Polynomial<D>& q) {
  if (q.is_zero()) return 0;
  if (!q.is_homogeneous() || q.homogeneous_degree() != 2)
    throw Error("quadratic_form_rank: polynomial is not a homogeneous quadratic");
  const D& dom = q.dom();
  const int n = q.ctx().size();
  if (dom.is_zero(dom.from_int(2))) throw Error("quadratic_form_rank: characteristic 2 unsupported");
  const auto half = dom.inv(dom.from_int(2));
  Matrix<D> gram(n, n, dom);
  for (const auto& t : q.terms()) {
    int vi = -1, vj = -1;
    for (int i = 0; i < n; ++i) {
      if (t.m.e[i] == 2) vi = vj = i;
      if (t.m.e[i] == 1) (vi < 0 ? vi : vj) = i;
    }
    if (vi == vj) {
      gram.at(vi, vi) = t.c;
    } else {
      auto v = dom.mul(t.c, half);
      gram.at(vi, vj) = v;
      gram.at(vj, vi) = v;
    }
  }
  return rank(gram);
}

// Express homogeneous F as sum g_i * h_i with homogeneous cofactors of
// degree deg F - deg g_i, by linear algebra on cofactor coefficients.
// Returns nullopt if F is not in the corresponding graded piece. A found
// decomposition is re-verified exactly before being returned.
template <class D>
std::optional<std::vector<Polynomial<D>>> decompose_in_ideal(
    const Polynomial<D>& f, const std::vector<Polynomial<D>>& gens) {
  const D& dom = f.dom();
  if (!f.is_homogeneous()) throw Error("decompose_in_ideal: inhomogeneous target");
  for (const auto& g : gens) {
    f.check_compatible(g);
    if (!g.is_homogeneous()) throw Error("decompose_in_ideal: inhomogeneous generator");
  }
  if (f.is_zero()) {
    std::vector<Polynomial<D>> zeros;
    for (std::size_t i = 0; i < gens.size(); ++i) zeros.push_back(Polynomial<D>::zero(f.ctx(), dom, f.order()));
    return zeros;
  }
  const int n = f.ctx().size();
  const int d = f.homogeneous_degree();

  std::vector<Monomial> row_basis = monomials_of_degree(n, d);
  std::unordered_map<Monomial, int, MonomialHash> row_index;
  for (std::size_t i = 0; i < row_basis.size(); ++i) row_index.emplace(row_basis[i], static_cast<int>(i));

  struct Col {
    int gen;
    Monomial m;
  };
  std::vector<Col> cols;
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    if (gens[gi].is_zero()) continue;
    int dg = gens[gi].homogeneous_degree();
    if (dg > d) continue;
    for (const auto& m : monomials_of_degree(n, d - dg)) cols.push_back({static_cast<int>(gi), m});
  }

  Matrix<D> a(static_cast<int>(row_basis.size()), static_cast<int>(cols.size()), dom);
  for (std::size_t cj = 0; cj < cols.size(); ++cj) {
    const auto& g = gens[cols[cj].gen];
    for (const auto& t : g.terms()) {
      a.at(row_index.at(t.m.mul(cols[cj].m)), static_cast<int>(cj)) = t.c;
    }
  }
  std::vector<typename D::Elem> b(row_basis.size(), dom.zero());
  for (const auto& t : f.terms()) b[row_index.at(t.m)] = t.c;

  auto x = solve(a, b);
  if (!x) return std::nullopt;

  std::vector<Polynomial<D>> cof;
  for (std::size_t gi = 0; gi < gens.size(); ++gi) cof.push_back(Polynomial<D>::zero(f.ctx(), dom, f.order()));
  for (std::size_t cj = 0; cj < cols.size(); ++cj) {
    if (dom.is_zero((*x)[cj])) continue;
    cof[cols[cj].gen] =
        cof[cols[cj].gen] + Polynomial<D>::from_term(f.ctx(), dom, cols[cj].m, (*x)[cj], f.order());
  }
  Polynomial<D> check = f;
  for (std::size_t gi = 0; gi < gens.size(); ++gi) check = check - gens[gi] * cof[gi];
  if (!check.is_zero()) throw Error("decompose_in_ideal: internal verification failed");
  return cof;
}

}  // namespace pfq
