#include "pfq/linalg.hpp"

#include <functional>

namespace pfq {

int rank_bareiss(std::vector<std::vector<Int>> m) {
  if (m.empty() || m[0].empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  Int prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) std::swap(m[piv], m[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;  // exact division
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur;
  // exponent vectors of fixed total degree, first variable fastest-decreasing
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == nvars - 1) {
      cur.e[var] = static_cast<std::uint16_t>(remaining);
      cur.deg = static_cast<std::uint32_t>(d);
      out.push_back(cur);
      cur.e[var] = 0;
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      cur.e[var] = static_cast<std::uint16_t>(k);
      rec(var + 1, remaining - k);
    }
    cur.e[var] = 0;
  };
  if (nvars == 0) {
    if (d == 0) out.push_back(cur);
    return out;
  }
  rec(0, d);
  return out;
}

}  // namespace pfq
