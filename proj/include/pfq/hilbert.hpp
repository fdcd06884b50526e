#pragma once

#include <vector>

#include "pfq/groebner.hpp"
#include "pfq/unipoly.hpp"

namespace pfq {

// Numerator of the Hilbert series of R/I for a monomial ideal I, as a
// coefficient vector in z: HS(R/I) = HN(z) / (1-z)^nvars. Pivot-variable
// recursion with memoization; generators need not be minimal.
std::vector<Int> hilbert_numerator(std::vector<Monomial> gens, int nvars);

// Test oracle: count degree-t standard monomials by direct enumeration.
Int count_standard_monomials(const std::vector<Monomial>& gens, int nvars, int t);

struct HilbertSummary {
  std::vector<Int> hf;  // HF(R/I, t) for t = 0..T
  UniPoly hp;           // Hilbert polynomial
  int stabilization_degree = 0;  // first t with HF(s) = hp(s) for all s >= t
  std::vector<Monomial> lt_gens;  // minimal generators of the leading-term ideal
};

// Everything below runs over GF(p) via a reduced Groebner basis of the
// homogeneous input ideal.
HilbertSummary hilbert_data(const std::vector<PolyP>& gens, int table_limit,
                            const GroebnerOptions& opts = {});

Int hilbert_function(const std::vector<PolyP>& gens, int t, const GroebnerOptions& opts = {});

UniPoly hilbert_polynomial(const std::vector<PolyP>& gens, const GroebnerOptions& opts = {});

struct CurveInvariants {
  int dim = -1;  // projective dimension: -1 empty, 0 points, 1 curve
  Int degree;
  Int arithmetic_genus;
};

// Reads dimension, degree and arithmetic genus off the Hilbert polynomial of
// a scheme of projective dimension <= 1.
CurveInvariants curve_invariants(const std::vector<PolyP>& gens, const GroebnerOptions& opts = {});

// Degree of the zero-dimensional slice of a scheme of known projective
// dimension `scheme_dim`: substitutes scheme_dim random linear forms for the
// trailing variables and reads the constant Hilbert polynomial. Retries on
// degenerate draws (up to 10), deterministic in seed.
struct SliceResult {
  Int degree;
  int retries = 0;
  std::vector<std::uint64_t> seeds_used;
};
SliceResult slice_degree(const std::vector<PolyP>& gens, int scheme_dim, std::uint64_t seed,
                         const GroebnerOptions& opts = {});

}  // namespace pfq
