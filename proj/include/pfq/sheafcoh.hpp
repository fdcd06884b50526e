#pragma once

#include <string>
#include <vector>

#include "pfq/arith.hpp"
#include "pfq/unipoly.hpp"

namespace pfq {

// h^i(P^n, O(d)): nonzero only at i = 0 (d >= 0) and i = n (d <= -n-1).
Int bott_h(int n, int d, int i);

// chi(P^n, O(d)) as the extended binomial C(n+d, n); valid for every d.
Int line_bundle_chi(int n, int d);

struct FreeTerm {
  int twist;
  int rank;
};

// Resolution F_m -> ... -> F_1 of a coker sheaf S at position 0, exact away
// from position 0. terms[0] is the deepest syzygy F_m, terms.back() is F_1.
struct TwistedFreeComplex {
  int ambient_dim = 4;
  std::vector<std::vector<FreeTerm>> terms;

  int length() const { return static_cast<int>(terms.size()); }
};

// Cohomology value forced by the chase, or the sound interval when some
// connecting map is not pinned by a zero.
struct HEntry {
  Int lo, hi;
  bool forced() const { return lo == hi; }
};

// h^i(S(t)) for i = 0..n, by splitting the complex into short exact
// sequences and propagating Bott values through the long exact sequences.
std::vector<HEntry> complex_cohomology(const TwistedFreeComplex& cx, int t);

// chi(S(t)) as the alternating sum of the term Euler characteristics.
Int complex_euler(const TwistedFreeComplex& cx, int t);

// chi(S(t)) as a polynomial in the twist.
UniPoly complex_euler_poly(const TwistedFreeComplex& cx);

// (c1, c2) of a rank-2 bundle on the quartic threefold, recorded as integer
// multiples of [H] and [l] with [H]^2 = 4[l].
struct ChernData {
  long k = 0;
  long alpha = 0;
  bool operator==(const ChernData&) const = default;
};

ChernData chern_twist(const ChernData& c, long n);

struct EulerCharValue {
  Rational chi;
  bool integral;
};
// chi of a rank-2 bundle with the given Chern data via Riemann-Roch on the
// quartic threefold.
EulerCharValue euler_char_bundle(const ChernData& c);
// same chi with alpha symbolic, for a fixed k
UniPoly euler_char_bundle_in_alpha(long k);

struct ZeroLocusInvariants {
  Int degree;
  Rational arithmetic_genus;
  bool integral;
};
// Invariants of the vanishing curve of a section: deg = c2, and
// 2 p_a - 2 = (c1 - 1) c2 on the quartic threefold.
ZeroLocusInvariants zero_locus_invariants(const ChernData& c);

struct AuditEntry {
  std::string name;
  Int value;
  Int expected;
  std::string derivation;
  bool ok() const { return value == expected; }
};

// The named dimension counts, each recomputed from its constituents.
std::vector<AuditEntry> dimension_audit();

}  // namespace pfq
