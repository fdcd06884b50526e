#pragma once

#include <string>
#include <vector>

#include "pfq/pfaffian.hpp"
#include "pfq/sheafcoh.hpp"

namespace pfq {

// Shipped data, identical to the files under data/.
extern const char* const kM0Json;
extern const char* const kF0Text;

// The 8x8 skew matrix of linear forms whose Pfaffian cuts the reference
// quartic threefold, and that quartic itself.
SkewQ builtin_matrix_m0();
PolyQ builtin_poly(const std::string& name);  // "f0", "fermat"

// Built-in homogeneous ideals over GF(p):
//   pfaffian7     7 cubic principal Pfaffians of the generic 7x7 skew matrix
//                 (21 Pluecker variables)
//   pfaffian7-p4  the same matrix specialized to random linear forms in 5
//                 variables (seeded)
//   grass27       35 quadric 4x4 sub-Pfaffians cutting out G(2,7)
//   ci-quadrics   3 random quadrics in 5 variables (seeded)
std::vector<PolyP> builtin_ideal(const std::string& name, const GF& gf, std::uint64_t seed);

// "eacm", "rodland", "be-curve"
TwistedFreeComplex builtin_complex(const std::string& name);

// --- file format parsing (JSON) --------------------------------------------
SkewQ parse_matrix_json(const std::string& text);

struct IdealFile {
  VarContext ctx;
  std::vector<PolyQ> gens;
};
IdealFile parse_ideal_json(const std::string& text);

TwistedFreeComplex parse_complex_json(const std::string& text);

std::string fnv1a_hex(const std::string& data);

}  // namespace pfq
