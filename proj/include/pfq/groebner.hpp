#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfq/poly.hpp"

namespace pfq {

struct GroebnerOptions {
  // exploratory degree cap; 0 means none. Pairs above the cap are dropped,
  // so the result is only a truncated basis.
  int degree_cap = 0;
  // directory for the on-disk basis cache; empty disables caching
  std::string cache_dir;
};

struct GroebnerBasis {
  std::vector<PolyP> gens;  // monic, inter-reduced, sorted by leading monomial
  Order ord;
  GF field;
  bool reduced = true;
  bool truncated = false;
};

// Reduced Groebner basis over GF(p). Deterministic for a fixed input order.
GroebnerBasis buchberger(const std::vector<PolyP>& gens, Order ord, const GroebnerOptions& opts = {});

// Full normal form: no term of the remainder is divisible by any leading term.
PolyP normal_form(const PolyP& f, const GroebnerBasis& gb);

// True iff the projective zero set over the algebraic closure is empty,
// i.e. the leading-term ideal contains a pure power of every variable.
bool is_empty_projective(const std::vector<PolyP>& gens, const GroebnerOptions& opts = {});

enum class Smoothness { kSmooth, kSingular, kIndeterminate };

inline const char* to_string(Smoothness s) {
  switch (s) {
    case Smoothness::kSmooth: return "SMOOTH";
    case Smoothness::kSingular: return "SINGULAR";
    default: return "INDETERMINATE";
  }
}

struct SmoothnessReport {
  Smoothness verdict = Smoothness::kIndeterminate;
  std::uint64_t prime = 0;
  // char-0 witness (small signed lift) of a singular point, when the verdict
  // is SINGULAR
  std::optional<std::vector<Int>> witness;
  // a mod-p common zero of the partials that did not lift, when INDETERMINATE
  std::optional<std::vector<std::uint64_t>> witness_mod_p;
};

// Certify smoothness of the projective hypersurface {F = 0} from one prime:
// an empty singular subscheme over GF(p) forces an empty singular subscheme
// of the same integer-coefficient hypersurface in characteristic 0. SINGULAR
// is only reported when a mod-p witness lifts to an exact rational zero of
// all partials.
SmoothnessReport smoothness_certificate(const PolyQ& f, std::uint64_t p,
                                        const GroebnerOptions& opts = {});

// content hash key for the cache; exposed for tests
std::string groebner_cache_key(const std::vector<PolyP>& gens, const Order& ord, std::uint64_t p);

}  // namespace pfq
