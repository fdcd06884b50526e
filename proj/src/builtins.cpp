#include "pfq/builtins.hpp"

#include <cstdio>

#include <json.hpp>

namespace pfq {

const char* const kM0Json = R"({
  "n": 8,
  "vars": ["x1", "x2", "x3", "x4", "x5"],
  "entries": [
    {"i": 0, "j": 1, "poly": "x1"},
    {"i": 0, "j": 2, "poly": "x2"},
    {"i": 0, "j": 3, "poly": "x3"},
    {"i": 0, "j": 4, "poly": "x4"},
    {"i": 0, "j": 5, "poly": "x5"},
    {"i": 0, "j": 6, "poly": "x1"},
    {"i": 1, "j": 3, "poly": "x5"},
    {"i": 1, "j": 6, "poly": "-x3"},
    {"i": 1, "j": 7, "poly": "-x1"},
    {"i": 2, "j": 3, "poly": "x1"},
    {"i": 2, "j": 4, "poly": "x1"},
    {"i": 2, "j": 7, "poly": "-x4"},
    {"i": 3, "j": 4, "poly": "x2"},
    {"i": 4, "j": 5, "poly": "x3"},
    {"i": 4, "j": 6, "poly": "x1"},
    {"i": 5, "j": 6, "poly": "x4"},
    {"i": 5, "j": 7, "poly": "x2"},
    {"i": 6, "j": 7, "poly": "x5"}
  ]
}
)";

const char* const kF0Text =
    "x1^3*x2 - x1^3*x3 + x2^3*x3 - x1*x2*x3^2 - x1*x2^2*x4 + x1^2*x3*x4 + x1*x2*x3*x4 "
    "+ x3^3*x4 - x1^2*x4^2 + x1*x2*x4^2 + x1^3*x5 - x1^2*x2*x5 - x1*x2^2*x5 - x1^2*x3*x5 "
    "+ x1*x3*x4*x5 + x2*x3*x4*x5 + x4^3*x5 + x2*x3*x5^2 - x1*x4*x5^2 + x1*x5^3";

SkewQ builtin_matrix_m0() { return parse_matrix_json(kM0Json); }

PolyQ builtin_poly(const std::string& name) {
  VarContext ctx = VarContext::numbered(5);
  QQ qq;
  if (name == "f0") return parse_poly(std::string(kF0Text), ctx, qq);
  if (name == "fermat") return parse_poly(std::string("x1^4 + x2^4 + x3^4 + x4^4 + x5^4"), ctx, qq);
  throw Error("unknown builtin polynomial: " + name);
}

namespace {

SkewP generic_skew7(const GF& gf, VarContext& ctx_out) {
  VarContext ctx = VarContext::pluecker(7);
  SkewP m(7, ctx, gf);
  int v = 0;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) m.set(i, j, PolyP::variable(ctx, gf, v++));
  ctx_out = ctx;
  return m;
}

PolyP random_form(const VarContext& ctx, const GF& gf, int degree, Rng& rng) {
  PolyP f = PolyP::zero(ctx, gf, Order{OrderKind::kDegrevlex, ctx.size()});
  for (const auto& m : monomials_of_degree(ctx.size(), degree)) {
    std::uint64_t c = rng.uniform(gf.modulus());
    if (c) f = f + PolyP::from_term(ctx, gf, m, c);
  }
  return f;
}

}  // namespace

std::vector<PolyP> builtin_ideal(const std::string& name, const GF& gf, std::uint64_t seed) {
  if (name == "pfaffian7") {
    VarContext ctx;
    return generic_skew7(gf, ctx).odd_pfaffian_family();
  }
  if (name == "pfaffian7-p4") {
    VarContext ctx = VarContext::numbered(5);
    Rng rng(seed);
    SkewP m(7, ctx, gf);
    for (int i = 0; i < 7; ++i)
      for (int j = i + 1; j < 7; ++j) m.set(i, j, random_form(ctx, gf, 1, rng));
    return m.odd_pfaffian_family();
  }
  if (name == "grass27") {
    VarContext ctx;
    SkewP m = generic_skew7(gf, ctx);
    std::vector<PolyP> gens;
    for (int i = 0; i < 7; ++i)
      for (int j = i + 1; j < 7; ++j)
        for (int k = j + 1; k < 7; ++k)
          for (int l = k + 1; l < 7; ++l)
            gens.push_back(m.pfaffian_of_mask((1u << i) | (1u << j) | (1u << k) | (1u << l)));
    return gens;
  }
  if (name == "ci-quadrics") {
    VarContext ctx = VarContext::numbered(5);
    Rng rng(seed);
    std::vector<PolyP> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_form(ctx, gf, 2, rng));
    return gens;
  }
  throw Error("unknown builtin ideal: " + name);
}

TwistedFreeComplex builtin_complex(const std::string& name) {
  if (name == "eacm") return TwistedFreeComplex{4, {{{-1, 8}}, {{0, 8}}}};
  if (name == "rodland") return TwistedFreeComplex{4, {{{-5, 21}}, {{-4, 48}}, {{-3, 28}}}};
  if (name == "be-curve") return TwistedFreeComplex{4, {{{-7, 1}}, {{-4, 7}}, {{-3, 7}}, {{0, 1}}}};
  throw Error("unknown builtin complex: " + name);
}

SkewQ parse_matrix_json(const std::string& text) {
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    VarContext ctx(j.at("vars").get<std::vector<std::string>>());
    QQ qq;
    SkewQ m(n, ctx, qq);
    for (const auto& entry : j.at("entries")) {
      int i = entry.at("i").get<int>();
      int k = entry.at("j").get<int>();
      if (i >= k) throw Error("matrix JSON: entries must satisfy i < j");
      m.set(i, k, parse_poly(entry.at("poly").get<std::string>(), ctx, qq));
    }
    return m;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(std::string("matrix JSON: ") + e.what());
  }
}

IdealFile parse_ideal_json(const std::string& text) {
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    IdealFile out{VarContext(j.at("vars").get<std::vector<std::string>>()), {}};
    QQ qq;
    for (const auto& g : j.at("gens"))
      out.gens.push_back(parse_poly(g.get<std::string>(), out.ctx, qq));
    return out;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(std::string("ideal JSON: ") + e.what());
  }
}

TwistedFreeComplex parse_complex_json(const std::string& text) {
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    TwistedFreeComplex cx;
    cx.ambient_dim = j.at("ambient_dim").get<int>();
    for (const auto& term : j.at("terms")) {
      std::vector<FreeTerm> ts;
      for (const auto& piece : term) {
        int rank = piece.at("rank").get<int>();
        if (rank <= 0) throw Error("complex JSON: ranks must be positive");
        ts.push_back({piece.at("twist").get<int>(), rank});
      }
      cx.terms.push_back(std::move(ts));
    }
    if (cx.terms.empty()) throw Error("complex JSON: empty complex");
    return cx;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(std::string("complex JSON: ") + e.what());
  }
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace pfq
